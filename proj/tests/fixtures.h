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

#ifndef SPPR_TESTS_FIXTURES_H_
#define SPPR_TESTS_FIXTURES_H_

#include <utility>
#include <vector>

#include "sppr/graph.h"
#include "sppr/quadratic.h"
#include "sppr/verify.h"

namespace sppr::testing {

inline MQuadratic TwoNode(double rho) {
  using Edges = std::vector<std::pair<Index, Index>>;
  return BuildPageRankQuadratic(PageRankInstance::WithSeedNode(
      Graph::FromEdges(2, Edges{{0, 1}}), 0.5, rho, 0));
}

using ::sppr::DeskInstances;
using ::sppr::RandomMInstances;
using ::sppr::RandomPageRankInstances;

}  // namespace sppr::testing

#endif  // SPPR_TESTS_FIXTURES_H_
