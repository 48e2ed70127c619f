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

#ifndef SPPR_SRC_SUBSPACE_H_
#define SPPR_SRC_SUBSPACE_H_

#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sppr/counters.h"
#include "sppr/quadratic.h"
#include "sppr/types.h"

namespace sppr::internal {

// Q restricted to a growing, ordered set S of coordinates. Members are
// numbered locally in insertion order and vectors over S are dense in that
// numbering.
class Subspace {
 public:
  explicit Subspace(const MQuadratic& q) : q_(&q) {}

  const MQuadratic& quadratic() const { return *q_; }
  Index size() const { return static_cast<Index>(members_.size()); }
  const std::vector<Index>& members() const { return members_; }
  bool Contains(Index i) const { return local_.count(i) != 0; }
  std::optional<Index> Local(Index i) const;

  // Appends coordinate i (must be new). Reads row i of Q once.
  Index Add(Index i, Counters* counters);

  // Row of Q_SS for local index a: (local column, value), diagonal included.
  const std::vector<std::pair<Index, double>>& row(Index a) const {
    return rows_[a];
  }
  Index internal_nnz() const { return internal_nnz_; }

  // out = Q_SS x - b_S. Charges nnz(Q_SS) as one restricted gradient.
  void Gradient(std::span<const double> x, std::span<double> out,
                Counters* counters) const;
  // <x, Q_SS x>. Charges nnz(Q_SS).
  double QuadraticForm(std::span<const double> x, Counters* counters) const;

  SparseVector ToGlobal(std::span<const double> x) const;
  // Throws std::invalid_argument if x has a nonzero outside S.
  std::vector<double> FromGlobal(const SparseVector& x) const;

 private:
  const MQuadratic* q_;
  std::vector<Index> members_;
  std::unordered_map<Index, Index> local_;
  std::vector<std::vector<std::pair<Index, double>>> rows_;
  Index internal_nnz_ = 0;
};

// Result of one full-gradient pass at a point supported on S.
struct FullGradientScan {
  std::vector<double> inside;  // gradient on S, local order
  // Coordinates outside S with gradient below -tol, ascending, and their
  // gradient values.
  std::vector<Index> negative;
  std::vector<double> negative_gradients;
  // Sum of min(grad_i, 0)^2 over coordinates outside S.
  double outside_residual_sq = 0.0;
};

// Scatters the columns of supp(x) (charging their nnz) and checks every
// coordinate that can carry a negative gradient: the Q-neighbourhood of
// supp(x) and the coordinates with b_i > 0.
FullGradientScan ScanFullGradient(const Subspace& s, std::span<const double> x,
                                  double tol, Counters* counters);

struct ApgdHooks {
  // Sees each coupling point and the gradient there.
  std::function<void(std::span<const double> point,
                     std::span<const double> grad)>
      on_gradient;
  // Sees y after each iteration (1-based count). Returning true stops.
  std::function<bool(Index done, std::span<const double> y)> after_iteration;
};

// Accelerated projected gradient on S from x0 for T iterations. The
// projection is onto x >= lower when `lower` is non-null (read fresh every
// iteration), else onto x >= 0. Returns y^(T) or the y at which a hook
// stopped; *iterations_run receives the count.
std::vector<double> ApgdLocal(const Subspace& s, std::span<const double> x0,
                              Index iterations,
                              const std::vector<double>* lower,
                              Counters* counters, const ApgdHooks& hooks,
                              Index* iterations_run);

// T steps of PGD on S. `iterates`, if given, receives every point.
std::vector<double> PgdLocal(const Subspace& s, std::span<const double> x0,
                             Index iterations, Counters* counters,
                             std::vector<std::vector<double>>* iterates);

double ResolveTolerance(const MQuadratic& q, std::optional<double> tol_neg);

}  // namespace sppr::internal

#endif  // SPPR_SRC_SUBSPACE_H_
