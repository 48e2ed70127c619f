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

// Quadratics g(x) = 1/2 <x, Qx> - <b, x> whose Hessian Q is a symmetric
// positive-definite M-matrix, and the l1-regularized personalized PageRank
// problem expressed in that form.

#ifndef SPPR_QUADRATIC_H_
#define SPPR_QUADRATIC_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sppr/counters.h"
#include "sppr/csr_matrix.h"
#include "sppr/graph.h"
#include "sppr/types.h"

namespace sppr {

struct MMatrixValidation {
  bool valid = true;
  // One message per violated condition, naming the offending (1-based)
  // index pair, e.g. "positive off-diagonal at (1,2)".
  std::vector<std::string> violations;
  // Extreme eigenvalues, only computed for n <= kDenseSpectrumLimit.
  std::optional<double> min_eigenvalue;
  std::optional<double> max_eigenvalue;
};

inline constexpr Index kDenseSpectrumLimit = 64;
inline constexpr double kSpectrumSlack = 1e-9;

// Checks symmetry, off-diagonal signs, 0 < Q_ii <= L, 0 < alpha <= L and,
// for small n, alpha*I <= Q <= L*I via a dense eigen-decomposition.
MMatrixValidation ValidateMMatrix(const SymmetricCsr& q, double alpha,
                                  double smoothness);
// Same checks on a dense row-major matrix, which need not be symmetric.
MMatrixValidation ValidateMMatrix(std::span<const double> dense, Index n,
                                  double alpha, double smoothness);

class MQuadratic {
 public:
  // Throws std::invalid_argument when the structural checks of
  // ValidateMMatrix fail (the spectral check is skipped here; alpha and
  // smoothness are trusted).
  MQuadratic(SymmetricCsr q, std::vector<double> b, double alpha,
             double smoothness);

  Index dim() const { return q_.size(); }
  const SymmetricCsr& q() const { return q_; }
  const std::vector<double>& b() const { return b_; }
  double alpha() const { return alpha_; }
  double smoothness() const { return smoothness_; }
  double kappa() const { return smoothness_ / alpha_; }
  double b_inf_norm() const { return b_inf_norm_; }

  // Coordinates with b_i > 0, ascending. Off the Q-neighbourhood of supp(x)
  // the gradient equals -b, so these are the only places a negative gradient
  // can appear there.
  const std::vector<Index>& positive_b() const { return positive_b_; }

 private:
  SymmetricCsr q_;
  std::vector<double> b_;
  double alpha_;
  double smoothness_;
  double b_inf_norm_ = 0.0;
  std::vector<Index> positive_b_;
};

// Threshold below which a gradient entry counts as negative:
// 1e-12 * L * ||b||_inf.
double DefaultNegativeTolerance(const MQuadratic& q);

struct PageRankInstance {
  Graph graph;
  double alpha;  // teleportation, in (0, 1)
  double rho;    // l1 weight, > 0
  SparseVector s;

  // Throws std::invalid_argument on out-of-range parameters or when s is not
  // a distribution over the nodes (sum within 1e-12 of one).
  static PageRankInstance Make(Graph graph, double alpha, double rho,
                               SparseVector s);
  static PageRankInstance WithSeedNode(Graph graph, double alpha, double rho,
                                       Index seed_node);
};

// Q = alpha*I + (1-alpha)/2 * (I - D^-1/2 A D^-1/2),
// b = alpha*D^-1/2 s - alpha*rho*D^1/2 1, L = 1.
MQuadratic BuildPageRankQuadratic(const PageRankInstance& instance);

// Upper ends alpha*rho*sqrt(d_i) of the gradient box at zero coordinates.
std::vector<double> PageRankBox(const PageRankInstance& instance);

// Full gradient Qx - b. Charges sum over supp(x) of column nnz.
std::vector<double> Gradient(const MQuadratic& q, const SparseVector& x,
                             Counters* counters = nullptr);

// (Qx - b)_i for i in coords, in the order given. Charges the entries of
// those rows that meet supp(x). Bit-identical to the matching entries of the
// full gradient.
std::vector<double> Gradient(const MQuadratic& q, const SparseVector& x,
                             std::span<const Index> coords,
                             Counters* counters = nullptr);

double Objective(const MQuadratic& q, const SparseVector& x);
double Objective(const MQuadratic& q, std::span<const double> dense_x);

struct OptimalityReport {
  // max |grad_i| over x_i > 0.
  double max_violation_positive = 0.0;
  // max max(0, -grad_i) over x_i = 0.
  double max_violation_zero_low = 0.0;
  // Coordinates with x_i = 0 and grad_i above the PageRank box.
  std::vector<Index> upper_box_violations;

  bool IsStationary(double tol) const {
    return max_violation_positive <= tol && max_violation_zero_low <= tol;
  }
};

OptimalityReport CheckOptimality(
    const MQuadratic& q, const SparseVector& x,
    std::optional<std::span<const double>> pagerank_box = std::nullopt);

// Upper bound on g(x) - min g from alpha-strong convexity:
// ||r||^2 / (2 alpha), where r is the minimum-norm element of the
// subdifferential of g plus the orthant indicator at x.
double CertifiedGap(const MQuadratic& q, const SparseVector& x);

// nnz(Q[:, S]) and nnz(Q[S, S]). S must not contain duplicates.
Index Volume(const MQuadratic& q, std::span<const Index> subset);
Index InternalVolume(const MQuadratic& q, std::span<const Index> subset);

}  // namespace sppr

#endif  // SPPR_QUADRATIC_H_
