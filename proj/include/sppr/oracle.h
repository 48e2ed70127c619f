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

// Dense reference solvers for small instances. Nothing here shares code with
// the sparse solvers beyond the problem data.

#ifndef SPPR_ORACLE_H_
#define SPPR_ORACLE_H_

#include <span>
#include <string>
#include <vector>

#include "sppr/quadratic.h"
#include "sppr/types.h"

namespace sppr {

struct OracleSolution {
  std::vector<double> x_star;  // dense, nonnegative
  std::vector<Index> support;  // ascending
  double objective = 0.0;
  // |grad_i| on the support, max(0, -grad_i) off it.
  std::vector<double> kkt_residuals;

  double max_kkt_residual() const;
};

inline constexpr Index kEnumerationLimit = 16;
inline constexpr double kSupportThreshold = 1e-9;  // relative to ||x||_inf

// Tries every support S, solving Q_SS x_S = b_S, and keeps the one with
// x_S > 0 and grad >= 0 off S; one Newton refinement step follows. Throws
// std::invalid_argument for n > kEnumerationLimit and SolverError, listing
// the closest candidates, when no support is accepted.
OracleSolution DenseSolveEnumerate(const MQuadratic& q);

// Projected gradient on the full orthant, finished by a direct solve on the
// guessed support once it settles, until the certified gap
// ||r||^2 / (2 alpha) is at most `gap`. Throws std::invalid_argument for
// n > 4096 and SolverError past max_iterations.
OracleSolution DenseSolveProjected(const MQuadratic& q, double gap = 1e-20,
                                   Index max_iterations = 2'000'000);

// Minimizer over span{e_i : i in subset} intersected with the orthant, as a
// dense n-vector.
std::vector<double> SubspaceSolve(const MQuadratic& q,
                                  std::span<const Index> subset);

// Either oracle, by size.
OracleSolution Solve(const MQuadratic& q);

struct GeometryReport {
  std::vector<double> subspace_minimizer;  // x*_C
  bool below_subspace_minimizer = true;    // x0 <= x*_C
  bool subspace_stationary = true;         // grad_S g(x*_C) = 0
  bool positive_where_expected = true;     // statement 2
  bool subspace_positive = true;           // x*_C > 0 on S
  // Only meaningful when subspace_positive: x*_C <= x* and S within supp*.
  bool below_optimum = true;
  bool subset_of_support = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Checks the three monotonicity statements for a state (S, x0) with x0 >= 0,
// x0 zero off S and grad_S g(x0) <= tol. Throws std::invalid_argument when
// the state does not qualify. `optimum` is computed when not supplied.
GeometryReport VerifyGeometry(const MQuadratic& q,
                              std::span<const Index> subset,
                              const SparseVector& x0, double tol = 1e-9,
                              const OracleSolution* optimum = nullptr);

}  // namespace sppr

#endif  // SPPR_ORACLE_H_
