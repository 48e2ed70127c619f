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

#include <algorithm>
#include <string>

#include "solution_util.h"
#include "sppr/solvers.h"
#include "subspace.h"

namespace sppr {

// Iterates from zero are coordinatewise nondecreasing, so the support only
// grows and is kept as a Subspace.
Solution IstaBaseline(const MQuadratic& q, double eps,
                      const SolverOptions& options, IstaTrace* trace) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double tol = internal::ResolveTolerance(q, options.tol_neg);
  const double inv_l = 1.0 / q.smoothness();
  const double target_sq = 2.0 * q.alpha() * eps;

  Counters counters;
  internal::Subspace s(q);
  std::vector<double> x;
  std::vector<char> was_positive;

  for (Index step = 0;; ++step) {
    internal::FullGradientScan scan =
        internal::ScanFullGradient(s, x, tol, &counters);
    double residual_sq = scan.outside_residual_sq;
    for (Index a = 0; a < s.size(); ++a) {
      const double r = x[a] > 0.0 ? scan.inside[a] : std::min(scan.inside[a], 0.0);
      residual_sq += r * r;
    }
    if (residual_sq <= target_sq) break;
    if (step >= options.max_iterations) {
      throw IterationLimitError(
          "ista: no eps-certificate after " + std::to_string(step) +
              " iterations",
          internal::MakeSolution(q, s.ToGlobal(x), eps, counters));
    }

    for (Index a = 0; a < s.size(); ++a) {
      x[a] = std::max(0.0, x[a] - inv_l * scan.inside[a]);
    }
    if (!scan.negative.empty()) ++counters.stages;
    for (std::size_t k = 0; k < scan.negative.size(); ++k) {
      s.Add(scan.negative[k], &counters);
      x.push_back(-inv_l * scan.negative_gradients[k]);
      was_positive.push_back(0);
    }
    for (Index a = 0; a < s.size(); ++a) {
      if (x[a] > 0.0) was_positive[a] = 1;
    }
    ++counters.inner_iters;
  }

  if (trace != nullptr) {
    trace->ever_nonzero.clear();
    for (Index a = 0; a < s.size(); ++a) {
      if (was_positive[a]) trace->ever_nonzero.push_back(s.members()[a]);
    }
    std::sort(trace->ever_nonzero.begin(), trace->ever_nonzero.end());
  }
  return internal::MakeSolution(q, s.ToGlobal(x), eps, counters);
}

}  // namespace sppr
