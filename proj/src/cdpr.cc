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

#include <string>
#include <vector>

#include "solution_util.h"
#include "sppr/solvers.h"
#include "subspace.h"

namespace sppr {

// Stage t starts at the minimizer over span{e_i : i in S} (gradient zero on
// S), picks one coordinate with negative gradient, Q-orthogonalizes its unit
// vector against the stored directions and steps to the minimizer over the
// enlarged span. Directions are stored densely over S in local numbering; the
// k-th one is supported on the first k+1 members.
Solution Cdpr(const MQuadratic& q, const SolverOptions& options,
              CdprTrace* trace) {
  const double tol = internal::ResolveTolerance(q, options.tol_neg);
  Counters counters;
  internal::Subspace s(q);
  std::vector<double> x;
  std::vector<std::vector<double>> normalized;  // d^(k) / <d^(k), Q d^(k)>
  std::vector<std::vector<double>> directions;
  if (trace != nullptr) trace->stages.clear();

  while (true) {
    internal::FullGradientScan scan =
        internal::ScanFullGradient(s, x, tol, &counters);
    if (scan.negative.empty()) break;
    const Index t = s.size();
    if (t >= q.dim()) {
      throw SolverError("cdpr: stage count exceeds the dimension; the "
                        "negative-gradient tolerance is likely too small");
    }

    const Index pivot = SelectPivot(scan.negative, scan.negative_gradients);
    double pivot_grad = 0.0;
    for (std::size_t k = 0; k < scan.negative.size(); ++k) {
      if (scan.negative[k] == pivot) pivot_grad = scan.negative_gradients[k];
    }
    s.Add(pivot, &counters);
    x.push_back(0.0);

    // beta_k = -<u, Q d^(k)> / <d^(k), Q d^(k)>
    //        = -grad_pivot * <Q[pivot, :], dbar^(k)>, using row `pivot` of
    // Q_SS, which holds only entries inside S.
    const auto& pivot_row = s.row(t);
    std::vector<double> d(t + 1, 0.0);
    d[t] = pivot_grad;
    for (Index k = 0; k < t; ++k) {
      double dot = 0.0;
      for (const auto& [c, v] : pivot_row) {
        if (c <= k) dot += v * normalized[k][c];
      }
      counters.nnz_touched += static_cast<Index>(pivot_row.size());
      const double beta = -pivot_grad * dot;
      for (Index c = 0; c <= k; ++c) d[c] += beta * directions[k][c];
    }

    const double curvature = s.QuadraticForm(d, &counters);
    if (!(curvature > 0.0)) {
      throw SolverError("cdpr: nonpositive curvature " +
                        std::to_string(curvature) + " at stage " +
                        std::to_string(t));
    }
    std::vector<double> dbar(t + 1);
    for (Index c = 0; c <= t; ++c) dbar[c] = d[c] / curvature;

    // eta = -<grad g(x), dbar>, with the gradient on S from the scan and the
    // pivot's own entry.
    double eta = -pivot_grad * dbar[t];
    for (Index c = 0; c < t; ++c) eta -= scan.inside[c] * dbar[c];
    for (Index c = 0; c <= t; ++c) x[c] += eta * d[c];

    ++counters.stages;
    ++counters.inner_iters;
    if (trace != nullptr) {
      CdprStage stage;
      stage.pivot = pivot;
      stage.pivot_gradient = pivot_grad;
      stage.direction = s.ToGlobal(d);
      stage.curvature = curvature;
      stage.step = eta;
      stage.iterate = s.ToGlobal(x);
      trace->stages.push_back(std::move(stage));
    }
    directions.push_back(std::move(d));
    normalized.push_back(std::move(dbar));
  }
  return internal::MakeSolution(q, s.ToGlobal(x), std::nullopt, counters);
}

}  // namespace sppr
