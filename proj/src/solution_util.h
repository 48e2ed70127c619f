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

#ifndef SPPR_SRC_SOLUTION_UTIL_H_
#define SPPR_SRC_SOLUTION_UTIL_H_

#include <optional>

#include "sppr/solvers.h"

namespace sppr::internal {

// Drops nonpositive entries and attaches the optimality report. The report is
// bookkeeping for the caller and is not charged to the counters.
inline Solution MakeSolution(const MQuadratic& q, const SparseVector& x,
                             std::optional<double> gap_bound,
                             const Counters& counters) {
  Solution sol;
  sol.x = SparseVector(q.dim());
  for (Index k = 0; k < x.nnz(); ++k) {
    if (x.values()[k] > 0.0) sol.x.PushBack(x.indices()[k], x.values()[k]);
  }
  sol.support = sol.x.indices();
  sol.gap_bound = gap_bound;
  sol.report = CheckOptimality(q, sol.x);
  sol.counters = counters;
  return sol;
}

}  // namespace sppr::internal

#endif  // SPPR_SRC_SOLUTION_UTIL_H_
