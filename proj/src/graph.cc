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

#include "sppr/graph.h"

#include <algorithm>
#include <string>

namespace sppr {

bool IsConnected(Index num_nodes,
                 std::span<const std::pair<Index, Index>> edges) {
  if (num_nodes <= 1) return num_nodes == 1;
  // Union-find with path halving.
  std::vector<Index> parent(num_nodes);
  for (Index v = 0; v < num_nodes; ++v) parent[v] = v;
  auto find = [&](Index v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  Index components = num_nodes;
  for (const auto& [a, b] : edges) {
    Index ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

Graph Graph::FromEdges(Index num_nodes,
                       std::span<const std::pair<Index, Index>> edges) {
  if (num_nodes < 1) throw std::invalid_argument("graph has no nodes");
  std::vector<std::pair<Index, Index>> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_nodes || b >= num_nodes) {
      throw std::invalid_argument("edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") out of range");
    }
    if (a == b) {
      throw std::invalid_argument("self-loop at node " + std::to_string(a));
    }
    canon.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(canon.begin(), canon.end());
  auto dup = std::adjacent_find(canon.begin(), canon.end());
  if (dup != canon.end()) {
    throw std::invalid_argument("duplicate edge (" +
                                std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
  }
  if (!IsConnected(num_nodes, canon)) {
    throw std::invalid_argument("graph is not connected");
  }

  Graph g;
  std::vector<Index> degree(num_nodes, 0);
  for (const auto& [a, b] : canon) {
    ++degree[a];
    ++degree[b];
  }
  g.offsets_.assign(num_nodes + 1, 0);
  for (Index v = 0; v < num_nodes; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.neighbors_.resize(g.offsets_.back());
  std::vector<Index> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : canon) {
    g.neighbors_[fill[a]++] = b;
    g.neighbors_[fill[b]++] = a;
  }
  for (Index v = 0; v < num_nodes; ++v) {
    std::sort(g.neighbors_.begin() + g.offsets_[v],
              g.neighbors_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

std::vector<std::pair<Index, Index>> Graph::Edges() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(num_edges());
  for (Index v = 0; v < num_nodes(); ++v) {
    for (Index u : neighbors(v)) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

}  // namespace sppr
