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

#include "sppr/oracle.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "sppr/generators.h"
#include "sppr/solvers.h"

namespace sppr {
namespace {

using testing::TwoNode;

MQuadratic Diagonal(std::vector<double> b) {
  std::vector<Triplet> entries;
  const Index n = static_cast<Index>(b.size());
  for (Index i = 0; i < n; ++i) entries.push_back({i, i, 1.0});
  return MQuadratic(SymmetricCsr::FromTriangle(n, entries), std::move(b), 1.0,
                    1.0);
}

double RelativeError(const std::vector<double>& x,
                     const std::vector<double>& y) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    diff = std::max(diff, std::abs(x[i] - y[i]));
    scale = std::max(scale, std::abs(y[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

TEST(DenseSolveEnumerateTest, TwoNode) {
  OracleSolution sol = DenseSolveEnumerate(TwoNode(0.1));
  EXPECT_NEAR(sol.x_star[0], 0.65, 1e-15);
  EXPECT_NEAR(sol.x_star[1], 0.15, 1e-15);
  EXPECT_EQ(sol.support, (std::vector<Index>{0, 1}));
  EXPECT_NEAR(sol.objective, -0.1425, 1e-15);
  EXPECT_LE(sol.max_kkt_residual(), 1e-10);
}

TEST(DenseSolveEnumerateTest, LargerRho) {
  OracleSolution sol = DenseSolveEnumerate(TwoNode(0.8));
  EXPECT_NEAR(sol.x_star[0], 2.0 / 15.0, 1e-15);
  EXPECT_EQ(sol.x_star[1], 0.0);
  EXPECT_EQ(sol.support, (std::vector<Index>{0}));
  std::vector<double> grad =
      Gradient(TwoNode(0.8), SparseVector::FromDense(sol.x_star));
  EXPECT_NEAR(grad[1], 11.0 / 30.0, 1e-15);
}

TEST(DenseSolveEnumerateTest, NonpositiveLinearTerm) {
  OracleSolution sol = DenseSolveEnumerate(Diagonal({-1.0, 0.0, -2.0}));
  EXPECT_EQ(sol.x_star, (std::vector<double>{0.0, 0.0, 0.0}));
  EXPECT_TRUE(sol.support.empty());
  EXPECT_EQ(sol.objective, 0.0);
}

TEST(DenseSolveEnumerateTest, RejectsLargeN) {
  EXPECT_THROW(DenseSolveEnumerate(RandomMMatrix(17, 0.3, 1)),
               std::invalid_argument);
}

TEST(DenseSolveProjectedTest, Identity) {
  OracleSolution ones = DenseSolveProjected(Diagonal({1.0, 1.0, 1.0}));
  EXPECT_EQ(ones.x_star, (std::vector<double>{1.0, 1.0, 1.0}));
  OracleSolution zero = DenseSolveProjected(Diagonal({-1.0, -1.0}));
  EXPECT_EQ(zero.x_star, (std::vector<double>{0.0, 0.0}));
  EXPECT_TRUE(zero.support.empty());
}

TEST(DenseSolveProjectedTest, AgreesWithEnumeration) {
  for (const auto& inst : testing::DeskInstances(100, 12, 99)) {
    SCOPED_TRACE(inst.name);
    OracleSolution e = DenseSolveEnumerate(inst.q);
    OracleSolution p = DenseSolveProjected(inst.q);
    EXPECT_LE(RelativeError(p.x_star, e.x_star), 1e-8);
    EXPECT_NEAR(p.objective, e.objective, 1e-10);
    EXPECT_EQ(p.support, e.support);
  }
}

TEST(SubspaceSolveTest, Examples) {
  MQuadratic q = TwoNode(0.1);
  std::vector<Index> first{0};
  std::vector<double> x = SubspaceSolve(q, first);
  EXPECT_NEAR(x[0], 0.6, 1e-15);
  EXPECT_EQ(x[1], 0.0);
  EXPECT_EQ(SubspaceSolve(q, {}), (std::vector<double>{0.0, 0.0}));
  std::vector<double> all = SubspaceSolve(q, AllCoordinates(2));
  EXPECT_EQ(all, DenseSolveEnumerate(q).x_star);
}

TEST(VerifyGeometryTest, TwoNodeStageZero) {
  MQuadratic q = TwoNode(0.1);
  std::vector<Index> first{0};
  GeometryReport r = VerifyGeometry(q, first, SparseVector(2));
  EXPECT_TRUE(r.ok());
  EXPECT_NEAR(r.subspace_minimizer[0], 0.6, 1e-15);
  EXPECT_TRUE(r.subspace_positive);
  EXPECT_TRUE(r.subset_of_support);
}

TEST(VerifyGeometryTest, OptimumIsFixedPoint) {
  MQuadratic q = TwoNode(0.1);
  std::vector<Index> both{0, 1};
  GeometryReport r = VerifyGeometry(
      q, both, SparseVector::FromDense(std::vector{0.65, 0.15}));
  EXPECT_TRUE(r.ok());
}

TEST(VerifyGeometryTest, RejectsBadState) {
  MQuadratic q = TwoNode(0.1);
  std::vector<Index> first{0};
  // Nonzero outside S.
  EXPECT_THROW(VerifyGeometry(q, first,
                              SparseVector::FromDense(std::vector{0.1, 0.1})),
               std::invalid_argument);
  // Positive gradient on S.
  EXPECT_THROW(VerifyGeometry(q, first,
                              SparseVector::FromDense(std::vector{1.0, 0.0})),
               std::invalid_argument);
}

TEST(RandomMMatrixTest, Contract) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Index n = 1 + static_cast<Index>(seed % 20);
    MQuadratic q = RandomMMatrix(n, 0.4, seed);
    MMatrixValidation v =
        ValidateMMatrix(q.q(), q.alpha(), q.smoothness());
    EXPECT_TRUE(v.valid) << (v.violations.empty() ? "" : v.violations[0]);
  }
  MQuadratic one = RandomMMatrix(1, 1.0, 5);
  EXPECT_EQ(one.dim(), 1);
  EXPECT_GT(one.q().at(0, 0), 0.0);
}

TEST(RandomMMatrixTest, Deterministic) {
  MQuadratic a = RandomMMatrix(15, 0.5, 1234);
  MQuadratic b = RandomMMatrix(15, 0.5, 1234);
  EXPECT_EQ(a.q().ToDense(), b.q().ToDense());
  EXPECT_EQ(a.b(), b.b());
  EXPECT_EQ(a.alpha(), b.alpha());
  EXPECT_EQ(a.smoothness(), b.smoothness());
}

TEST(RandomGraphInstanceTest, PathTwoIsTheWorkedInstance) {
  GraphParams params;
  params.size = 2;
  params.alpha_min = params.alpha_max = 0.5;
  params.rho_min = params.rho_max = 0.1;
  params.seed_node = 0;
  MQuadratic q = BuildPageRankQuadratic(
      RandomGraphInstance(GraphFamily::kPath, params, 3));
  MQuadratic ref = TwoNode(0.1);
  EXPECT_EQ(q.q().ToDense(), ref.q().ToDense());
  EXPECT_EQ(q.b(), ref.b());
}

TEST(RandomGraphInstanceTest, GridFourByFour) {
  GraphParams params;
  params.size = 4;
  Graph g = RandomGraph(GraphFamily::kGrid, params, 0);
  EXPECT_EQ(g.num_nodes(), 16);
  EXPECT_EQ(g.num_edges(), 24);
}

TEST(RandomGraphInstanceTest, StarHubInSupport) {
  for (Index k = 1; k <= 10; ++k) {
    GraphParams params;
    params.size = k;
    params.seed_node = 0;
    params.alpha_min = params.alpha_max = 0.3;
    params.rho_min = params.rho_max = 1e-3;
    MQuadratic q = BuildPageRankQuadratic(
        RandomGraphInstance(GraphFamily::kStar, params, k));
    OracleSolution sol = DenseSolveEnumerate(q);
    EXPECT_TRUE(std::find(sol.support.begin(), sol.support.end(), 0) !=
                sol.support.end());
  }
}

TEST(RandomGraphInstanceTest, AllFamiliesConnected) {
  for (const char* name : {"path", "cycle", "grid", "sbm", "star"}) {
    GraphParams params;
    params.size = 6;
    Graph g = RandomGraph(ParseGraphFamily(name), params, 17);
    EXPECT_TRUE(IsConnected(g.num_nodes(), g.Edges())) << name;
  }
  EXPECT_THROW(ParseGraphFamily("torus"), std::invalid_argument);
  GraphParams hopeless;
  hopeless.size = 10;
  hopeless.sbm_p_in = 0.0;
  hopeless.sbm_p_out = 0.0;
  hopeless.sbm_max_retries = 3;
  EXPECT_THROW(RandomGraph(GraphFamily::kSbm, hopeless, 1), SolverError);
}

TEST(OraclePropertyTest, VolumeBoundOnPageRankInstances) {
  for (const auto& inst : testing::RandomPageRankInstances(100, 12, 5)) {
    SCOPED_TRACE(inst.name);
    OracleSolution sol = DenseSolveEnumerate(inst.q);
    const double bound = 1.0 / inst.pagerank->rho +
                         static_cast<double>(sol.support.size());
    EXPECT_LE(static_cast<double>(Volume(inst.q, sol.support)), bound);
  }
}

TEST(OraclePropertyTest, ZeroOptimumWhenRhoDominates) {
  for (const auto& inst : testing::RandomPageRankInstances(50, 12, 6)) {
    const PageRankInstance& pr = *inst.pagerank;
    double ratio = 0.0;
    for (Index k = 0; k < pr.s.nnz(); ++k) {
      ratio = std::max(ratio, pr.s.values()[k] /
                                  static_cast<double>(
                                      pr.graph.degree(pr.s.indices()[k])));
    }
    const std::vector<double> grad0 = Gradient(inst.q, SparseVector(inst.q.dim()));
    const bool any_negative =
        std::any_of(grad0.begin(), grad0.end(), [](double g) { return g < 0.0; });
    EXPECT_EQ(any_negative, ratio > pr.rho) << inst.name;
    if (pr.rho >= ratio) {
      EXPECT_TRUE(DenseSolveEnumerate(inst.q).support.empty()) << inst.name;
    }
  }
}

}  // namespace
}  // namespace sppr
