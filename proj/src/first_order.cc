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

#include <cmath>
#include <numeric>
#include <string>

#include "sppr/solvers.h"
#include "subspace.h"

namespace sppr {
namespace {

internal::Subspace MakeSubspace(const MQuadratic& q,
                                std::span<const Index> subset,
                                Counters* counters) {
  internal::Subspace s(q);
  for (Index i : subset) s.Add(i, counters);
  return s;
}

std::vector<double> FeasibleStart(const internal::Subspace& s,
                                  const SparseVector& x0) {
  if (x0.dim() != s.quadratic().dim()) {
    throw std::invalid_argument("starting point has the wrong dimension");
  }
  for (double v : x0.values()) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("starting point has a negative entry");
    }
  }
  return s.FromGlobal(x0);
}

}  // namespace

Index SelectPivot(std::span<const Index> candidates,
                  std::span<const double> gradients) {
  if (candidates.empty()) {
    throw std::invalid_argument("SelectPivot: no candidates");
  }
  if (candidates.size() != gradients.size()) {
    throw std::invalid_argument("SelectPivot: length mismatch");
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    if (gradients[k] < gradients[best] ||
        (gradients[k] == gradients[best] && candidates[k] < candidates[best])) {
      best = k;
    }
  }
  return candidates[best];
}

std::vector<Index> AllCoordinates(Index n) {
  std::vector<Index> out(n);
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

SparseVector Pgd(const MQuadratic& q, std::span<const Index> subset,
                 const SparseVector& x0, Index iterations, Counters* counters,
                 std::vector<SparseVector>* iterates) {
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  internal::Subspace s = MakeSubspace(q, subset, counters);
  std::vector<double> start = FeasibleStart(s, x0);
  if (iterations == 0) {
    if (iterates != nullptr) iterates->push_back(x0);
    return x0;
  }
  std::vector<std::vector<double>> local;
  std::vector<double> x =
      internal::PgdLocal(s, start, iterations, counters,
                         iterates != nullptr ? &local : nullptr);
  if (iterates != nullptr) {
    for (const auto& v : local) iterates->push_back(s.ToGlobal(v));
  }
  return s.ToGlobal(x);
}

double ApgdGrowthFactor(double kappa) {
  if (!(kappa >= 1.0)) {
    throw std::invalid_argument("condition number must be at least 1");
  }
  return 2.0 * kappa / (2.0 * kappa + 1.0 - std::sqrt(1.0 + 4.0 * kappa));
}

std::vector<double> ApgdWeights(double kappa, Index iterations) {
  const double growth = ApgdGrowthFactor(kappa);
  std::vector<double> weights{0.0};
  double small_a = 1.0;
  for (Index t = 0; t < iterations; ++t) {
    const double next = weights.back() + small_a;
    weights.push_back(next);
    small_a = next * (growth - 1.0);
  }
  return weights;
}

SparseVector Apgd(const MQuadratic& q, std::span<const Index> subset,
                  const SparseVector& x0, Index iterations, Counters* counters,
                  std::vector<SparseVector>* iterates) {
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  if (!(q.kappa() >= 1.0)) {
    throw std::invalid_argument("condition number must be at least 1");
  }
  internal::Subspace s = MakeSubspace(q, subset, counters);
  std::vector<double> start = FeasibleStart(s, x0);
  if (iterates != nullptr) iterates->push_back(s.ToGlobal(start));
  internal::ApgdHooks hooks;
  if (iterates != nullptr) {
    hooks.after_iteration = [&](Index, std::span<const double> y) {
      iterates->push_back(s.ToGlobal(y));
      return false;
    };
  }
  std::vector<double> y = internal::ApgdLocal(s, start, iterations, nullptr,
                                              counters, hooks, nullptr);
  return s.ToGlobal(y);
}

}  // namespace sppr
