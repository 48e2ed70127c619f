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

#ifndef SPPR_GRAPH_H_
#define SPPR_GRAPH_H_

#include <span>
#include <utility>
#include <vector>

#include "sppr/types.h"

namespace sppr {

// Immutable, connected, simple undirected graph in compressed adjacency form.
class Graph {
 public:
  // Validates and builds. Throws std::invalid_argument on self-loops,
  // duplicate edges (in either orientation), out-of-range ids, or a
  // disconnected result.
  static Graph FromEdges(Index num_nodes,
                         std::span<const std::pair<Index, Index>> edges);

  Index num_nodes() const { return static_cast<Index>(offsets_.size()) - 1; }
  Index num_edges() const { return static_cast<Index>(neighbors_.size()) / 2; }
  Index degree(Index v) const { return offsets_[v + 1] - offsets_[v]; }

  // Sorted neighbor list of v.
  std::span<const Index> neighbors(Index v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<std::size_t>(degree(v))};
  }

  // Each undirected edge once, as (i, j) with i < j, sorted.
  std::vector<std::pair<Index, Index>> Edges() const;

 private:
  Graph() = default;

  std::vector<Index> offsets_{0};
  std::vector<Index> neighbors_;
};

// True iff every node is reachable from node 0.
bool IsConnected(Index num_nodes,
                 std::span<const std::pair<Index, Index>> edges);

}  // namespace sppr

#endif  // SPPR_GRAPH_H_
