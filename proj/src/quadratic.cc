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

#include "sppr/quadratic.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include <Eigen/Dense>

namespace sppr {
namespace {

std::string Pair(Index i, Index j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void CheckScalars(double alpha, double smoothness, MMatrixValidation& out) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    out.valid = false;
    out.violations.push_back("alpha must be positive and finite");
  }
  if (!(smoothness >= alpha) || !std::isfinite(smoothness)) {
    out.valid = false;
    out.violations.push_back("L must be finite and at least alpha");
  }
}

// Adds the spectral check. `dense` must be symmetric.
void CheckSpectrum(const std::vector<double>& dense, Index n, double alpha,
                   double smoothness, MMatrixValidation& out) {
  if (n == 0 || n > kDenseSpectrumLimit) return;
  Eigen::MatrixXd m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) m(i, j) = dense[i * n + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m,
                                                     Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  out.min_eigenvalue = lo;
  out.max_eigenvalue = hi;
  if (lo < alpha - kSpectrumSlack) {
    out.valid = false;
    out.violations.push_back("smallest eigenvalue " + std::to_string(lo) +
                             " below alpha");
  }
  if (hi > smoothness + kSpectrumSlack) {
    out.valid = false;
    out.violations.push_back("largest eigenvalue " + std::to_string(hi) +
                             " above L");
  }
}

MMatrixValidation StructuralChecks(const SymmetricCsr& q, double alpha,
                                   double smoothness) {
  MMatrixValidation out;
  CheckScalars(alpha, smoothness, out);
  for (Index i = 0; i < q.size(); ++i) {
    const double d = q.diagonal(i);
    if (!(d > 0.0)) {
      out.valid = false;
      out.violations.push_back("nonpositive diagonal at " + Pair(i, i));
    } else if (d > smoothness) {
      out.valid = false;
      out.violations.push_back("diagonal above L at " + Pair(i, i));
    }
    auto cols = q.row_cols(i);
    auto vals = q.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Index j = cols[k];
      if (j <= i) continue;
      if (vals[k] > 0.0) {
        out.valid = false;
        out.violations.push_back("positive off-diagonal at " + Pair(i, j));
      }
      if (q.at(j, i) != vals[k]) {
        out.valid = false;
        out.violations.push_back("asymmetric entry at " + Pair(i, j));
      }
    }
  }
  return out;
}

}  // namespace

MMatrixValidation ValidateMMatrix(const SymmetricCsr& q, double alpha,
                                  double smoothness) {
  MMatrixValidation out = StructuralChecks(q, alpha, smoothness);
  CheckSpectrum(q.ToDense(), q.size(), alpha, smoothness, out);
  return out;
}

MMatrixValidation ValidateMMatrix(std::span<const double> dense, Index n,
                                  double alpha, double smoothness) {
  if (static_cast<Index>(dense.size()) != n * n) {
    throw std::invalid_argument("dense matrix size mismatch");
  }
  MMatrixValidation out;
  CheckScalars(alpha, smoothness, out);
  bool symmetric = true;
  for (Index i = 0; i < n; ++i) {
    const double d = dense[i * n + i];
    if (!(d > 0.0)) {
      out.valid = false;
      out.violations.push_back("nonpositive diagonal at " + Pair(i, i));
    } else if (d > smoothness) {
      out.valid = false;
      out.violations.push_back("diagonal above L at " + Pair(i, i));
    }
    for (Index j = i + 1; j < n; ++j) {
      const double a = dense[i * n + j];
      const double b = dense[j * n + i];
      if (a != b) {
        symmetric = false;
        out.valid = false;
        out.violations.push_back("asymmetric entry at " + Pair(i, j));
      }
      if (a > 0.0 || b > 0.0) {
        out.valid = false;
        out.violations.push_back("positive off-diagonal at " +
                                 (a > 0.0 ? Pair(i, j) : Pair(j, i)));
      }
    }
  }
  if (symmetric) {
    CheckSpectrum(std::vector<double>(dense.begin(), dense.end()), n, alpha,
                  smoothness, out);
  }
  return out;
}

MQuadratic::MQuadratic(SymmetricCsr q, std::vector<double> b, double alpha,
                       double smoothness)
    : q_(std::move(q)),
      b_(std::move(b)),
      alpha_(alpha),
      smoothness_(smoothness) {
  if (static_cast<Index>(b_.size()) != q_.size()) {
    throw std::invalid_argument("b has length " + std::to_string(b_.size()) +
                                ", expected " + std::to_string(q_.size()));
  }
  MMatrixValidation v = StructuralChecks(q_, alpha_, smoothness_);
  if (!v.valid) {
    throw std::invalid_argument("not a positive-definite M-matrix: " +
                                v.violations.front());
  }
  for (Index i = 0; i < dim(); ++i) {
    if (!std::isfinite(b_[i])) throw std::invalid_argument("b is not finite");
    b_inf_norm_ = std::max(b_inf_norm_, std::abs(b_[i]));
    if (b_[i] > 0.0) positive_b_.push_back(i);
  }
}

double DefaultNegativeTolerance(const MQuadratic& q) {
  return 1e-12 * q.smoothness() * q.b_inf_norm();
}

PageRankInstance PageRankInstance::Make(Graph graph, double alpha, double rho,
                                        SparseVector s) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("rho must be positive");
  }
  if (s.dim() != graph.num_nodes()) {
    throw std::invalid_argument("teleportation vector has dimension " +
                                std::to_string(s.dim()) + ", graph has " +
                                std::to_string(graph.num_nodes()) + " nodes");
  }
  double sum = 0.0;
  for (double v : s.values()) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("teleportation vector has a negative entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("teleportation vector sums to " +
                                std::to_string(sum) + ", not 1");
  }
  return PageRankInstance{std::move(graph), alpha, rho, std::move(s)};
}

PageRankInstance PageRankInstance::WithSeedNode(Graph graph, double alpha,
                                                double rho, Index seed_node) {
  if (seed_node < 0 || seed_node >= graph.num_nodes()) {
    throw std::invalid_argument("seed node " + std::to_string(seed_node) +
                                " not in graph");
  }
  SparseVector s(graph.num_nodes());
  s.PushBack(seed_node, 1.0);
  return Make(std::move(graph), alpha, rho, std::move(s));
}

MQuadratic BuildPageRankQuadratic(const PageRankInstance& instance) {
  const Graph& g = instance.graph;
  const Index n = g.num_nodes();
  const double alpha = instance.alpha;
  const double half_walk = (1.0 - alpha) / 2.0;

  std::vector<double> inv_sqrt_deg(n);
  for (Index v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw std::invalid_argument("node " + std::to_string(v) +
                                  " has degree zero");
    }
    inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }

  std::vector<Triplet> entries;
  entries.reserve(n + g.num_edges());
  for (Index v = 0; v < n; ++v) {
    entries.push_back({v, v, alpha + half_walk});
    for (Index u : g.neighbors(v)) {
      if (v < u) {
        entries.push_back({v, u, -half_walk * inv_sqrt_deg[v] * inv_sqrt_deg[u]});
      }
    }
  }

  std::vector<double> b(n);
  for (Index v = 0; v < n; ++v) {
    b[v] = -alpha * instance.rho / inv_sqrt_deg[v];
  }
  const auto& si = instance.s.indices();
  const auto& sv = instance.s.values();
  for (std::size_t k = 0; k < si.size(); ++k) {
    b[si[k]] += alpha * sv[k] * inv_sqrt_deg[si[k]];
  }
  return MQuadratic(SymmetricCsr::FromTriangle(n, entries), std::move(b), alpha,
                    1.0);
}

std::vector<double> PageRankBox(const PageRankInstance& instance) {
  std::vector<double> box(instance.graph.num_nodes());
  for (Index v = 0; v < instance.graph.num_nodes(); ++v) {
    box[v] = instance.alpha * instance.rho *
             std::sqrt(static_cast<double>(instance.graph.degree(v)));
  }
  return box;
}

// Both gradient routines add Q_ij * x_j into a zero accumulator in ascending
// j, skipping x_j == 0, then subtract b_i. That shared order is what makes
// the restricted and full results bit-identical.
std::vector<double> Gradient(const MQuadratic& q, const SparseVector& x,
                             Counters* counters) {
  const Index n = q.dim();
  std::vector<double> acc(n, 0.0);
  Index touched = 0;
  const auto& xi = x.indices();
  const auto& xv = x.values();
  for (std::size_t k = 0; k < xi.size(); ++k) {
    if (xv[k] == 0.0) continue;
    const Index j = xi[k];
    auto cols = q.q().row_cols(j);
    auto vals = q.q().row_values(j);
    for (std::size_t p = 0; p < cols.size(); ++p) acc[cols[p]] += vals[p] * xv[k];
    touched += static_cast<Index>(cols.size());
  }
  for (Index i = 0; i < n; ++i) acc[i] -= q.b()[i];
  if (counters != nullptr) {
    counters->nnz_touched += touched;
    ++counters->full_gradients;
  }
  return acc;
}

std::vector<double> Gradient(const MQuadratic& q, const SparseVector& x,
                             std::span<const Index> coords,
                             Counters* counters) {
  std::vector<double> out;
  out.reserve(coords.size());
  Index touched = 0;
  const auto& xi = x.indices();
  const auto& xv = x.values();
  for (Index i : coords) {
    if (i < 0 || i >= q.dim()) {
      throw std::invalid_argument("gradient coordinate " + std::to_string(i) +
                                  " out of range");
    }
    auto cols = q.q().row_cols(i);
    auto vals = q.q().row_values(i);
    double acc = 0.0;
    // Merge the sorted row with the sorted support of x.
    std::size_t p = 0, k = 0;
    while (p < cols.size() && k < xi.size()) {
      if (cols[p] < xi[k]) {
        ++p;
      } else if (xi[k] < cols[p]) {
        ++k;
      } else {
        if (xv[k] != 0.0) {
          acc += vals[p] * xv[k];
          ++touched;
        }
        ++p;
        ++k;
      }
    }
    out.push_back(acc - q.b()[i]);
  }
  if (counters != nullptr) {
    counters->nnz_touched += touched;
    ++counters->restricted_gradients;
  }
  return out;
}

double Objective(const MQuadratic& q, const SparseVector& x) {
  double quad = 0.0, lin = 0.0;
  const auto& xi = x.indices();
  const auto& xv = x.values();
  std::vector<Index> one(1);
  for (std::size_t k = 0; k < xi.size(); ++k) {
    if (xv[k] == 0.0) continue;
    one[0] = xi[k];
    const double qx = Gradient(q, x, one)[0] + q.b()[xi[k]];
    quad += xv[k] * qx;
    lin += q.b()[xi[k]] * xv[k];
  }
  return 0.5 * quad - lin;
}

double Objective(const MQuadratic& q, std::span<const double> dense_x) {
  if (static_cast<Index>(dense_x.size()) != q.dim()) {
    throw std::invalid_argument("objective: dimension mismatch");
  }
  double quad = 0.0, lin = 0.0;
  for (Index i = 0; i < q.dim(); ++i) {
    if (dense_x[i] == 0.0) continue;
    auto cols = q.q().row_cols(i);
    auto vals = q.q().row_values(i);
    double qx = 0.0;
    for (std::size_t p = 0; p < cols.size(); ++p) qx += vals[p] * dense_x[cols[p]];
    quad += dense_x[i] * qx;
    lin += q.b()[i] * dense_x[i];
  }
  return 0.5 * quad - lin;
}

OptimalityReport CheckOptimality(
    const MQuadratic& q, const SparseVector& x,
    std::optional<std::span<const double>> pagerank_box) {
  if (pagerank_box && static_cast<Index>(pagerank_box->size()) != q.dim()) {
    throw std::invalid_argument("box length does not match dimension");
  }
  const std::vector<double> grad = Gradient(q, x);
  const std::vector<double> dense = x.ToDense();
  OptimalityReport report;
  for (Index i = 0; i < q.dim(); ++i) {
    if (dense[i] < 0.0) {
      throw std::invalid_argument("CheckOptimality: x has a negative entry");
    }
    if (dense[i] > 0.0) {
      report.max_violation_positive =
          std::max(report.max_violation_positive, std::abs(grad[i]));
    } else {
      report.max_violation_zero_low =
          std::max(report.max_violation_zero_low, -grad[i]);
      if (pagerank_box && grad[i] > (*pagerank_box)[i]) {
        report.upper_box_violations.push_back(i);
      }
    }
  }
  return report;
}

double CertifiedGap(const MQuadratic& q, const SparseVector& x) {
  const std::vector<double> grad = Gradient(q, x);
  const std::vector<double> dense = x.ToDense();
  double sq = 0.0;
  for (Index i = 0; i < q.dim(); ++i) {
    const double r = dense[i] > 0.0 ? grad[i] : std::min(grad[i], 0.0);
    sq += r * r;
  }
  return sq / (2.0 * q.alpha());
}

Index Volume(const MQuadratic& q, std::span<const Index> subset) {
  Index total = 0;
  for (Index i : subset) total += q.q().row_nnz(i);
  return total;
}

Index InternalVolume(const MQuadratic& q, std::span<const Index> subset) {
  std::unordered_set<Index> members(subset.begin(), subset.end());
  Index total = 0;
  for (Index i : subset) {
    for (Index j : q.q().row_cols(i)) total += members.count(j);
  }
  return total;
}

}  // namespace sppr
