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

// Sparse solvers for min g(x) over x >= 0, g an M-matrix quadratic.
//
// All of them grow a set S of coordinates known to lie in the support of the
// optimum, starting from the coordinates where the gradient at zero is
// negative, and only ever write coordinates of S. Work is recorded in
// Counters in units of stored matrix entries read.

#ifndef SPPR_SOLVERS_H_
#define SPPR_SOLVERS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sppr/counters.h"
#include "sppr/quadratic.h"
#include "sppr/types.h"

namespace sppr {

struct Solution {
  SparseVector x;
  std::vector<Index> support;  // ascending, x_i > 0
  // Certified bound on g(x) - min g; empty when the solver is exact up to
  // rounding.
  std::optional<double> gap_bound;
  OptimalityReport report;
  Counters counters;
};

// Thrown when an iteration budget runs out; carries the last iterate.
class IterationLimitError : public SolverError {
 public:
  IterationLimitError(const std::string& what, Solution best)
      : SolverError(what), best_(std::move(best)) {}
  const Solution& best() const { return best_; }

 private:
  Solution best_;
};

// Most negative gradient, ties to the smallest index. Throws
// std::invalid_argument on an empty candidate list or length mismatch.
Index SelectPivot(std::span<const Index> candidates,
                  std::span<const double> gradients);

std::vector<Index> AllCoordinates(Index n);

// T steps of x <- max(0, x - grad_S g(x) / L) on the coordinates of `subset`.
// x0 must be nonnegative and supported in `subset`. When `iterates` is given
// it receives x^(0), ..., x^(T).
SparseVector Pgd(const MQuadratic& q, std::span<const Index> subset,
                 const SparseVector& x0, Index iterations,
                 Counters* counters = nullptr,
                 std::vector<SparseVector>* iterates = nullptr);

// Ratio A_{t+1} / A_t of the accelerated method for t >= 1:
// 2k / (2k + 1 - sqrt(1 + 4k)).
double ApgdGrowthFactor(double kappa);

// A_0, ..., A_T of the accelerated method (A_0 = 0, a_0 = 1).
std::vector<double> ApgdWeights(double kappa, Index iterations);

// Accelerated projected gradient on span{e_i : i in subset} intersected with
// the orthant, run for T iterations from x0; returns y^(T). Throws
// std::invalid_argument when kappa < 1. When `iterates` is given it receives
// y^(0), ..., y^(T).
SparseVector Apgd(const MQuadratic& q, std::span<const Index> subset,
                  const SparseVector& x0, Index iterations,
                  Counters* counters = nullptr,
                  std::vector<SparseVector>* iterates = nullptr);

struct SolverOptions {
  // Threshold for "negative gradient"; DefaultNegativeTolerance(q) if unset.
  std::optional<double> tol_neg;
  Index max_iterations = 10'000'000;
};

// Projected gradient descent on the whole orthant from zero (the ISTA
// iteration for the l1-regularized form), touching only the support and the
// coordinates with negative gradient. Stops once the certified gap
// ||r||^2 / (2 alpha) is at most eps. Throws IterationLimitError past
// max_iterations.
struct IstaTrace {
  // Union of coordinates that ever held a positive value.
  std::vector<Index> ever_nonzero;
};
Solution IstaBaseline(const MQuadratic& q, double eps,
                      const SolverOptions& options = {},
                      IstaTrace* trace = nullptr);

struct CdprStage {
  Index pivot = -1;
  double pivot_gradient = 0.0;
  SparseVector direction;  // d^(t), unnormalized
  double curvature = 0.0;  // <d^(t), Q d^(t)>
  double step = 0.0;       // eta^(t)
  SparseVector iterate;    // x^(t+1)
};
struct CdprTrace {
  std::vector<CdprStage> stages;
};

// Conjugate directions: adds one coordinate per stage and minimizes exactly
// over the grown subspace. Returns the minimizer with gap_bound empty.
Solution Cdpr(const MQuadratic& q, const SolverOptions& options = {},
              CdprTrace* trace = nullptr);

struct AsprVariant {
  // Every full_grad_period inner iterations (|S| if unset), look for new
  // coordinates at the current iterate and leave the inner loop early when
  // some are found and grad_S <= 0 there.
  bool early_termination = false;
  std::optional<Index> full_grad_period;
  // Keep lower bounds l <= x* learned from points with grad_S <= 0 and
  // project onto x >= l instead of x >= 0.
  bool updating_constraints = false;
};

struct AsprStage {
  std::vector<Index> known_good;  // S^(t), in insertion order
  SparseVector start;             // x^(t)
  double delta = 0.0;
  double inner_accuracy = 0.0;  // epsilon-hat_t
  Index inner_budget = 0;       // iterations scheduled
  Index inner_iterations = 0;   // iterations run
  bool stopped_early = false;
  std::vector<Index> added;  // coordinates joining S at the end of the stage
};
struct AsprTrace {
  std::vector<AsprStage> stages;
  SparseVector final_iterate;
  // Union of coordinates that held a positive value in any inner iterate.
  std::vector<Index> ever_nonzero;
  // Lower bounds after each update (updating_constraints only).
  std::vector<SparseVector> lower_bounds;
};

// Retraction width delta_t = sqrt(eps * alpha / ((1 + |S|) L^2)) and inner
// accuracy delta_t^2 alpha / 2.
double AsprRetraction(double eps, double alpha, double smoothness,
                      Index known_good);
double AsprInnerAccuracy(double delta, double alpha);
// 1 + ceil(2 sqrt(kappa) log((L - alpha) ||grad||^2 / (2 eps_hat alpha^2))),
// at least 1; exactly 1 when L == alpha and 0 when grad_norm_sq == 0.
Index AsprInnerIterations(double alpha, double smoothness, double grad_norm_sq,
                          double inner_accuracy);

// Accelerated sparse solver. Returns an eps-minimizer (gap_bound = eps).
// Throws std::invalid_argument on eps <= 0 and SolverError when the stage
// count exceeds n.
Solution Aspr(const MQuadratic& q, double eps, const AsprVariant& variant = {},
              const SolverOptions& options = {}, AsprTrace* trace = nullptr);

}  // namespace sppr

#endif  // SPPR_SOLVERS_H_
