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

#include "sppr/generators.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace sppr {
namespace {

using Edges = std::vector<std::pair<Index, Index>>;

double LogUniform(std::mt19937_64& rng, double lo, double hi) {
  if (lo == hi) return lo;
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

}  // namespace

MQuadratic RandomMMatrix(Index n, double density, std::uint64_t seed) {
  MMatrixOptions options;
  options.density = density;
  return RandomMMatrix(n, options, seed);
}

MQuadratic RandomMMatrix(Index n, const MMatrixOptions& options,
                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(options.density > 0.0 && options.density <= 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  if (!(options.margin_min > 0.0 && options.margin_min <= options.margin_max)) {
    throw std::invalid_argument("diagonal margin must be positive");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> margin(options.margin_min,
                                                options.margin_max);
  std::uniform_real_distribution<double> linear(options.b_min, options.b_max);

  std::vector<Triplet> entries;
  std::vector<double> abs_sum(n, 0.0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (unit(rng) >= options.density) continue;
      const double v = -unit(rng);
      if (v == 0.0) continue;
      entries.push_back({i, j, v});
      abs_sum[i] -= v;
      abs_sum[j] -= v;
    }
  }
  std::vector<double> diag(n);
  for (Index i = 0; i < n; ++i) {
    diag[i] = abs_sum[i] + margin(rng);
    entries.push_back({i, i, diag[i]});
  }
  std::vector<double> b(n);
  for (double& v : b) v = linear(rng);

  SymmetricCsr q = SymmetricCsr::FromTriangle(n, entries);
  double alpha, smoothness;
  if (n <= kDenseSpectrumLimit) {
    const std::vector<double> dense = q.ToDense();
    Eigen::Map<const Eigen::MatrixXd> m(dense.data(), n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
        m, Eigen::EigenvaluesOnly);
    alpha = eig.eigenvalues().minCoeff();
    smoothness = eig.eigenvalues().maxCoeff();
  } else {
    alpha = diag[0] - abs_sum[0];
    smoothness = 0.0;
    for (Index i = 0; i < n; ++i) {
      alpha = std::min(alpha, diag[i] - abs_sum[i]);
      smoothness = std::max(smoothness, diag[i] + abs_sum[i]);
    }
  }
  smoothness = std::max(smoothness, *std::max_element(diag.begin(), diag.end()));
  alpha = std::min(alpha, smoothness);
  return MQuadratic(std::move(q), std::move(b), alpha, smoothness);
}

GraphFamily ParseGraphFamily(const std::string& name) {
  if (name == "path") return GraphFamily::kPath;
  if (name == "cycle") return GraphFamily::kCycle;
  if (name == "grid") return GraphFamily::kGrid;
  if (name == "sbm") return GraphFamily::kSbm;
  if (name == "star") return GraphFamily::kStar;
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

std::string GraphFamilyName(GraphFamily family) {
  switch (family) {
    case GraphFamily::kPath: return "path";
    case GraphFamily::kCycle: return "cycle";
    case GraphFamily::kGrid: return "grid";
    case GraphFamily::kSbm: return "sbm";
    case GraphFamily::kStar: return "star";
  }
  return "?";
}

Graph RandomGraph(GraphFamily family, const GraphParams& params,
                  std::uint64_t seed) {
  const Index k = params.size;
  Edges edges;
  switch (family) {
    case GraphFamily::kPath:
      if (k < 2) throw std::invalid_argument("path needs at least 2 nodes");
      for (Index v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
      return Graph::FromEdges(k, edges);
    case GraphFamily::kCycle:
      if (k < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
      for (Index v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
      return Graph::FromEdges(k, edges);
    case GraphFamily::kGrid:
      if (k < 2) throw std::invalid_argument("grid side must be at least 2");
      for (Index r = 0; r < k; ++r) {
        for (Index c = 0; c < k; ++c) {
          if (c + 1 < k) edges.emplace_back(r * k + c, r * k + c + 1);
          if (r + 1 < k) edges.emplace_back(r * k + c, (r + 1) * k + c);
        }
      }
      return Graph::FromEdges(k * k, edges);
    case GraphFamily::kStar:
      if (k < 1) throw std::invalid_argument("star needs at least 1 leaf");
      for (Index v = 1; v <= k; ++v) edges.emplace_back(0, v);
      return Graph::FromEdges(k + 1, edges);
    case GraphFamily::kSbm: {
      if (k < 2) throw std::invalid_argument("sbm needs at least 2 nodes");
      if (params.sbm_blocks < 1) throw std::invalid_argument("no sbm blocks");
      std::mt19937_64 rng(seed ^ 0x5b3f00d5ULL);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (Index attempt = 0; attempt < params.sbm_max_retries; ++attempt) {
        edges.clear();
        for (Index i = 0; i < k; ++i) {
          for (Index j = i + 1; j < k; ++j) {
            const bool same = i % params.sbm_blocks == j % params.sbm_blocks;
            if (unit(rng) < (same ? params.sbm_p_in : params.sbm_p_out)) {
              edges.emplace_back(i, j);
            }
          }
        }
        if (IsConnected(k, edges)) return Graph::FromEdges(k, edges);
      }
      throw SolverError("sbm draw stayed disconnected after " +
                        std::to_string(params.sbm_max_retries) + " tries");
    }
  }
  throw std::invalid_argument("unknown graph family");
}

PageRankInstance RandomGraphInstance(GraphFamily family,
                                     const GraphParams& params,
                                     std::uint64_t seed) {
  Graph graph = RandomGraph(family, params, seed);
  std::mt19937_64 rng(seed);
  const double alpha = LogUniform(rng, params.alpha_min, params.alpha_max);
  const double rho = LogUniform(rng, params.rho_min, params.rho_max);
  Index node;
  if (params.seed_node) {
    node = *params.seed_node;
  } else {
    std::uniform_int_distribution<Index> pick(0, graph.num_nodes() - 1);
    node = pick(rng);
  }
  return PageRankInstance::WithSeedNode(std::move(graph), alpha, rho, node);
}

}  // namespace sppr
