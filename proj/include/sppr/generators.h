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

// Seeded random instances. Same arguments, same instance, bit for bit.

#ifndef SPPR_GENERATORS_H_
#define SPPR_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "sppr/graph.h"
#include "sppr/quadratic.h"

namespace sppr {

struct MMatrixOptions {
  double density = 0.5;  // probability of each off-diagonal pair
  // Diagonal = off-diagonal row sum + Uniform(margin_min, margin_max).
  double margin_min = 0.1;
  double margin_max = 1.0;
  // b_i ~ Uniform(b_min, b_max).
  double b_min = -0.5;
  double b_max = 1.0;
};

// Symmetric, strictly diagonally dominant M-matrix with off-diagonals drawn
// from -Uniform(0, 1). alpha and L are the extreme eigenvalues for n <= 64
// and Gershgorin bounds beyond (L never below the largest diagonal entry).
MQuadratic RandomMMatrix(Index n, double density, std::uint64_t seed);
MQuadratic RandomMMatrix(Index n, const MMatrixOptions& options,
                         std::uint64_t seed);

enum class GraphFamily { kPath, kCycle, kGrid, kSbm, kStar };

// "path", "cycle", "grid", "sbm", "star".
GraphFamily ParseGraphFamily(const std::string& name);
std::string GraphFamilyName(GraphFamily family);

struct GraphParams {
  // Nodes for path, cycle and sbm; side length for grid (side^2 nodes);
  // leaves for star (hub is node 0).
  Index size = 8;
  Index sbm_blocks = 2;
  double sbm_p_in = 0.6;
  double sbm_p_out = 0.05;
  Index sbm_max_retries = 100;
  // alpha and rho are drawn log-uniformly from these ranges.
  double alpha_min = 0.05, alpha_max = 0.5;
  double rho_min = 1e-3, rho_max = 0.2;
  // Uniform over the nodes when unset.
  std::optional<Index> seed_node;
};

// Connected by construction (sbm redraws up to sbm_max_retries, then throws
// SolverError).
Graph RandomGraph(GraphFamily family, const GraphParams& params,
                  std::uint64_t seed);
PageRankInstance RandomGraphInstance(GraphFamily family,
                                     const GraphParams& params,
                                     std::uint64_t seed);

}  // namespace sppr

#endif  // SPPR_GENERATORS_H_
