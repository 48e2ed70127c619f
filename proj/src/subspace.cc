// Copyright 2026 The sppr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subspace.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "sppr/solvers.h"

namespace sppr::internal {

std::optional<Index> Subspace::Local(Index i) const {
  auto it = local_.find(i);
  if (it == local_.end()) return std::nullopt;
  return it->second;
}

Index Subspace::Add(Index i, Counters* counters) {
  if (i < 0 || i >= q_->dim()) {
    throw std::invalid_argument("coordinate " + std::to_string(i) +
                                " out of range");
  }
  if (Contains(i)) {
    throw std::invalid_argument("coordinate " + std::to_string(i) +
                                " already in subspace");
  }
  const Index a = size();
  members_.push_back(i);
  local_.emplace(i, a);
  rows_.emplace_back();
  auto cols = q_->q().row_cols(i);
  auto vals = q_->q().row_values(i);
  for (std::size_t p = 0; p < cols.size(); ++p) {
    if (cols[p] == i) {
      rows_[a].emplace_back(a, vals[p]);
      ++internal_nnz_;
      continue;
    }
    auto it = local_.find(cols[p]);
    if (it == local_.end()) continue;
    rows_[a].emplace_back(it->second, vals[p]);
    rows_[it->second].emplace_back(a, vals[p]);
    internal_nnz_ += 2;
  }
  if (counters != nullptr) counters->nnz_touched += static_cast<Index>(cols.size());
  return a;
}

void Subspace::Gradient(std::span<const double> x, std::span<double> out,
                        Counters* counters) const {
  const auto& b = q_->b();
  for (Index a = 0; a < size(); ++a) {
    double acc = 0.0;
    for (const auto& [c, v] : rows_[a]) acc += v * x[c];
    out[a] = acc - b[members_[a]];
  }
  if (counters != nullptr) {
    counters->nnz_touched += internal_nnz_;
    ++counters->restricted_gradients;
  }
}

double Subspace::QuadraticForm(std::span<const double> x,
                               Counters* counters) const {
  double total = 0.0;
  for (Index a = 0; a < size(); ++a) {
    if (x[a] == 0.0) continue;
    double acc = 0.0;
    for (const auto& [c, v] : rows_[a]) acc += v * x[c];
    total += x[a] * acc;
  }
  if (counters != nullptr) counters->nnz_touched += internal_nnz_;
  return total;
}

SparseVector Subspace::ToGlobal(std::span<const double> x) const {
  std::vector<std::pair<Index, double>> pairs;
  for (Index a = 0; a < size(); ++a) {
    if (x[a] != 0.0) pairs.emplace_back(members_[a], x[a]);
  }
  return SparseVector::FromPairs(q_->dim(), std::move(pairs));
}

std::vector<double> Subspace::FromGlobal(const SparseVector& x) const {
  std::vector<double> out(size(), 0.0);
  for (Index k = 0; k < x.nnz(); ++k) {
    const double v = x.values()[k];
    if (v == 0.0) continue;
    auto a = Local(x.indices()[k]);
    if (!a) {
      throw std::invalid_argument("point has a nonzero at coordinate " +
                                  std::to_string(x.indices()[k]) +
                                  " outside the subspace");
    }
    out[*a] = v;
  }
  return out;
}

FullGradientScan ScanFullGradient(const Subspace& s, std::span<const double> x,
                                  double tol, Counters* counters) {
  const MQuadratic& q = s.quadratic();
  std::unordered_map<Index, double> acc;
  Index touched = 0;
  for (Index a = 0; a < s.size(); ++a) {
    if (x[a] == 0.0) continue;
    const Index j = s.members()[a];
    auto cols = q.q().row_cols(j);
    auto vals = q.q().row_values(j);
    for (std::size_t p = 0; p < cols.size(); ++p) acc[cols[p]] += vals[p] * x[a];
    touched += static_cast<Index>(cols.size());
  }
  if (counters != nullptr) {
    counters->nnz_touched += touched;
    ++counters->full_gradients;
  }

  FullGradientScan scan;
  scan.inside.resize(s.size());
  for (Index a = 0; a < s.size(); ++a) {
    const Index j = s.members()[a];
    auto it = acc.find(j);
    scan.inside[a] = (it == acc.end() ? 0.0 : it->second) - q.b()[j];
  }
  std::vector<std::pair<Index, double>> neg;
  auto visit = [&](Index i, double g) {
    if (g < 0.0) scan.outside_residual_sq += g * g;
    if (g < -tol) neg.emplace_back(i, g);
  };
  for (const auto& [i, v] : acc) {
    if (!s.Contains(i)) visit(i, v - q.b()[i]);
  }
  for (Index i : q.positive_b()) {
    if (!s.Contains(i) && acc.count(i) == 0) visit(i, -q.b()[i]);
  }
  std::sort(neg.begin(), neg.end());
  for (const auto& [i, g] : neg) {
    scan.negative.push_back(i);
    scan.negative_gradients.push_back(g);
  }
  return scan;
}

std::vector<double> ApgdLocal(const Subspace& s, std::span<const double> x0,
                              Index iterations,
                              const std::vector<double>* lower,
                              Counters* counters, const ApgdHooks& hooks,
                              Index* iterations_run) {
  const MQuadratic& q = s.quadratic();
  const double alpha = q.alpha();
  const double kappa = q.kappa();
  if (!(kappa >= 1.0)) throw std::invalid_argument("condition number below 1");
  const double growth = ApgdGrowthFactor(kappa);
  const Index m = s.size();

  std::vector<double> y(x0.begin(), x0.end());
  std::vector<double> z = y;
  std::vector<double> point(m), grad(m);
  double big_a = 0.0, small_a = 1.0;
  Index done = 0;
  while (done < iterations) {
    const double next_a = big_a + small_a;
    const double keep = big_a / next_a, mix = small_a / next_a;
    for (Index k = 0; k < m; ++k) point[k] = keep * y[k] + mix * z[k];
    s.Gradient(point, grad, counters);
    if (hooks.on_gradient) hooks.on_gradient(point, grad);

    const double denom = kappa - 1.0 + next_a;
    const double z_keep = (kappa - 1.0 + big_a) / denom;
    const double z_mix = small_a / denom;
    for (Index k = 0; k < m; ++k) {
      const double floor_k = lower != nullptr ? (*lower)[k] : 0.0;
      const double target = point[k] - grad[k] / alpha;
      z[k] = std::max(floor_k, z_keep * z[k] + z_mix * target);
    }
    for (Index k = 0; k < m; ++k) y[k] = keep * y[k] + mix * z[k];

    small_a = next_a * (growth - 1.0);
    big_a = next_a;
    // Only ratios of the weights matter once A dwarfs kappa; rescale before
    // they overflow.
    if (big_a > 1e200) {
      big_a *= 1e-100;
      small_a *= 1e-100;
    }
    ++done;
    if (counters != nullptr) ++counters->inner_iters;
    if (hooks.after_iteration && hooks.after_iteration(done, y)) break;
  }
  if (iterations_run != nullptr) *iterations_run = done;
  return y;
}

std::vector<double> PgdLocal(const Subspace& s, std::span<const double> x0,
                             Index iterations, Counters* counters,
                             std::vector<std::vector<double>>* iterates) {
  const double inv_l = 1.0 / s.quadratic().smoothness();
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> grad(x.size());
  if (iterates != nullptr) iterates->push_back(x);
  for (Index t = 0; t < iterations; ++t) {
    s.Gradient(x, grad, counters);
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] = std::max(0.0, x[k] - inv_l * grad[k]);
    }
    if (counters != nullptr) ++counters->inner_iters;
    if (iterates != nullptr) iterates->push_back(x);
  }
  return x;
}

double ResolveTolerance(const MQuadratic& q, std::optional<double> tol_neg) {
  if (!tol_neg) return DefaultNegativeTolerance(q);
  if (!(*tol_neg >= 0.0)) {
    throw std::invalid_argument("negative-gradient tolerance must be >= 0");
  }
  return *tol_neg;
}

}  // namespace sppr::internal
