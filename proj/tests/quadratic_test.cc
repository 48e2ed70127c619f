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

#include "sppr/quadratic.h"

#include <cmath>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "sppr/graph.h"

namespace sppr {
namespace {

using Edges = std::vector<std::pair<Index, Index>>;

Graph TwoNodePath() { return Graph::FromEdges(2, Edges{{0, 1}}); }

MQuadratic TwoNode(double rho) {
  return BuildPageRankQuadratic(
      PageRankInstance::WithSeedNode(TwoNodePath(), 0.5, rho, 0));
}

SparseVector Dense(std::vector<double> v) { return SparseVector::FromDense(v); }

TEST(GraphTest, RejectsSelfLoopDuplicateAndDisconnected) {
  EXPECT_THROW(Graph::FromEdges(2, Edges{{0, 0}, {0, 1}}),
               std::invalid_argument);
  EXPECT_THROW(Graph::FromEdges(2, Edges{{0, 1}, {1, 0}}),
               std::invalid_argument);
  EXPECT_THROW(Graph::FromEdges(4, Edges{{0, 1}, {2, 3}}),
               std::invalid_argument);
  EXPECT_THROW(Graph::FromEdges(3, Edges{{0, 1}}), std::invalid_argument);
}

TEST(GraphTest, TriangleDegreesAndAdjacency) {
  Graph g = Graph::FromEdges(3, Edges{{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.num_edges(), 3);
  for (Index v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_EQ(std::vector<Index>(g.neighbors(1).begin(), g.neighbors(1).end()),
            (std::vector<Index>{0, 2}));
  EXPECT_EQ(g.Edges(), (Edges{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(BuildPageRankQuadraticTest, TwoNodePath) {
  MQuadratic q = TwoNode(0.1);
  EXPECT_DOUBLE_EQ(q.q().at(0, 0), 0.75);
  EXPECT_DOUBLE_EQ(q.q().at(1, 1), 0.75);
  EXPECT_DOUBLE_EQ(q.q().at(0, 1), -0.25);
  EXPECT_DOUBLE_EQ(q.q().at(1, 0), -0.25);
  EXPECT_DOUBLE_EQ(q.b()[0], 0.45);
  EXPECT_DOUBLE_EQ(q.b()[1], -0.05);
  EXPECT_EQ(q.alpha(), 0.5);
  EXPECT_EQ(q.smoothness(), 1.0);
}

TEST(BuildPageRankQuadraticTest, Triangle) {
  Graph g = Graph::FromEdges(3, Edges{{0, 1}, {1, 2}, {2, 0}});
  MQuadratic q = BuildPageRankQuadratic(
      PageRankInstance::WithSeedNode(std::move(g), 0.5, 0.1, 0));
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      EXPECT_DOUBLE_EQ(q.q().at(i, j), i == j ? 0.75 : -0.125);
    }
  }
}

TEST(BuildPageRankQuadraticTest, RejectsBadInstances) {
  EXPECT_THROW(PageRankInstance::WithSeedNode(TwoNodePath(), 0.0, 0.1, 0),
               std::invalid_argument);
  EXPECT_THROW(PageRankInstance::WithSeedNode(TwoNodePath(), 1.0, 0.1, 0),
               std::invalid_argument);
  EXPECT_THROW(PageRankInstance::WithSeedNode(TwoNodePath(), 0.5, 0.0, 0),
               std::invalid_argument);
  EXPECT_THROW(PageRankInstance::WithSeedNode(TwoNodePath(), 0.5, 0.1, 2),
               std::invalid_argument);
  SparseVector off_simplex = SparseVector::FromPairs(2, {{0, 0.5}, {1, 0.4}});
  EXPECT_THROW(PageRankInstance::Make(TwoNodePath(), 0.5, 0.1, off_simplex),
               std::invalid_argument);
  SparseVector negative = SparseVector::FromPairs(2, {{0, 1.5}, {1, -0.5}});
  EXPECT_THROW(PageRankInstance::Make(TwoNodePath(), 0.5, 0.1, negative),
               std::invalid_argument);
}

TEST(GradientTest, TwoNodeExamples) {
  MQuadratic q = TwoNode(0.1);
  std::vector<double> g0 = Gradient(q, SparseVector(2));
  EXPECT_DOUBLE_EQ(g0[0], -0.45);
  EXPECT_DOUBLE_EQ(g0[1], 0.05);

  // x* = Q^-1 b = (0.65, 0.15) from the 2x2 solve.
  std::vector<double> gs = Gradient(q, Dense({0.65, 0.15}));
  EXPECT_NEAR(gs[0], 0.0, 1e-15);
  EXPECT_NEAR(gs[1], 0.0, 1e-15);

  // Q_21 * 0.6 - b_2 = -0.15 + 0.05.
  std::vector<Index> second{1};
  std::vector<double> g2 = Gradient(q, Dense({0.6, 0.0}), second);
  ASSERT_EQ(g2.size(), 1u);
  EXPECT_NEAR(g2[0], -0.1, 1e-15);
}

TEST(GradientTest, CountsTouchedEntries) {
  MQuadratic q = TwoNode(0.1);
  Counters c;
  Gradient(q, Dense({0.6, 0.0}), &c);
  EXPECT_EQ(c.full_gradients, 1);
  EXPECT_EQ(c.nnz_touched, 2);  // column 0 has two entries
  std::vector<Index> both{0, 1};
  Gradient(q, Dense({0.6, 0.0}), both, &c);
  EXPECT_EQ(c.restricted_gradients, 1);
  EXPECT_EQ(c.nnz_touched, 4);  // Q_00 and Q_10 meet supp(x)
}

TEST(GradientTest, RejectsOutOfRangeCoordinate) {
  MQuadratic q = TwoNode(0.1);
  std::vector<Index> bad{2};
  EXPECT_THROW(Gradient(q, SparseVector(2), bad), std::invalid_argument);
}

TEST(ObjectiveTest, TwoNodeExamples) {
  MQuadratic q = TwoNode(0.1);
  EXPECT_EQ(Objective(q, SparseVector(2)), 0.0);
  // -1/2 <b, x*> = -1/2 (0.45 * 0.65 - 0.05 * 0.15).
  EXPECT_NEAR(Objective(q, Dense({0.65, 0.15})), -0.1425, 1e-15);
  EXPECT_NEAR(Objective(q, Dense({1.0, 0.0})), -0.075, 1e-15);
  std::vector<double> dense{0.65, 0.15};
  EXPECT_NEAR(Objective(q, dense), -0.1425, 1e-15);
}

TEST(CheckOptimalityTest, OptimumHasNoViolations) {
  MQuadratic q = TwoNode(0.1);
  OptimalityReport r = CheckOptimality(q, Dense({0.65, 0.15}));
  EXPECT_LE(r.max_violation_positive, 1e-10);
  EXPECT_LE(r.max_violation_zero_low, 1e-10);
  EXPECT_TRUE(r.IsStationary(1e-10));
}

TEST(CheckOptimalityTest, LargeRhoSingleCoordinate) {
  PageRankInstance inst =
      PageRankInstance::WithSeedNode(TwoNodePath(), 0.5, 0.8, 0);
  MQuadratic q = BuildPageRankQuadratic(inst);
  EXPECT_DOUBLE_EQ(q.b()[0], 0.1);
  EXPECT_DOUBLE_EQ(q.b()[1], -0.4);
  std::vector<double> box = PageRankBox(inst);
  SparseVector x = Dense({2.0 / 15.0, 0.0});
  OptimalityReport r = CheckOptimality(q, x, box);
  EXPECT_LE(r.max_violation_positive, 1e-15);
  EXPECT_EQ(r.max_violation_zero_low, 0.0);
  EXPECT_TRUE(r.upper_box_violations.empty());
  EXPECT_NEAR(Gradient(q, x)[1], 11.0 / 30.0, 1e-15);
}

TEST(CheckOptimalityTest, ZeroIsNotOptimal) {
  MQuadratic q = TwoNode(0.1);
  OptimalityReport r = CheckOptimality(q, SparseVector(2));
  EXPECT_DOUBLE_EQ(r.max_violation_zero_low, 0.45);
  EXPECT_EQ(r.max_violation_positive, 0.0);
}

TEST(CheckOptimalityTest, FlagsUpperBoxViolation) {
  MQuadratic q = TwoNode(0.1);
  // grad(0) = (-0.45, 0.05); a box of zero at coordinate 2 is exceeded.
  std::vector<double> tight{1.0, 0.0};
  OptimalityReport r = CheckOptimality(q, SparseVector(2), tight);
  EXPECT_EQ(r.upper_box_violations, (std::vector<Index>{1}));
}

TEST(CheckOptimalityTest, PageRankBoxHoldsForNonnegativePoints) {
  // Off-diagonals of Q are nonpositive, so grad_i <= -b_i <= alpha*rho*sqrt(d)
  // whenever x_i = 0 and x >= 0.
  Graph path3 = Graph::FromEdges(3, Edges{{0, 1}, {1, 2}});
  PageRankInstance inst =
      PageRankInstance::WithSeedNode(std::move(path3), 0.5, 0.1, 1);
  MQuadratic q = BuildPageRankQuadratic(inst);
  std::vector<double> box = PageRankBox(inst);
  for (double t : {0.0, 0.3, 2.0}) {
    SparseVector x = Dense({0.0, t, 0.0});
    EXPECT_TRUE(CheckOptimality(q, x, box).upper_box_violations.empty());
  }
}

TEST(VolumeTest, TwoNodeExamples) {
  MQuadratic q = TwoNode(0.1);
  std::vector<Index> one{0}, both{0, 1}, none;
  EXPECT_EQ(Volume(q, one), 2);
  EXPECT_EQ(InternalVolume(q, one), 1);
  EXPECT_EQ(Volume(q, both), 4);
  EXPECT_EQ(InternalVolume(q, both), 4);
  EXPECT_EQ(Volume(q, none), 0);
  EXPECT_EQ(InternalVolume(q, none), 0);
}

TEST(VolumeTest, GraphVolumeIsDegreeSumPlusSize) {
  Graph g = Graph::FromEdges(4, Edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  Graph copy = g;
  MQuadratic q = BuildPageRankQuadratic(
      PageRankInstance::WithSeedNode(std::move(copy), 0.3, 0.01, 0));
  std::vector<Index> s{0, 1, 3};
  EXPECT_EQ(Volume(q, s), g.degree(0) + g.degree(1) + g.degree(3) + 3);
  // Edges inside {0,1,3}: (0,1), (0,3); each stored twice in Q.
  EXPECT_EQ(InternalVolume(q, s), 3 + 2 * 2);
}

TEST(ValidateMMatrixTest, TwoNodeIsValid) {
  MQuadratic q = TwoNode(0.1);
  MMatrixValidation v = ValidateMMatrix(q.q(), 0.5, 1.0);
  EXPECT_TRUE(v.valid);
  ASSERT_TRUE(v.min_eigenvalue.has_value());
  // Eigenvalues of [[a, c], [c, a]] are a -/+ |c|.
  EXPECT_NEAR(*v.min_eigenvalue, 0.5, 1e-14);
  EXPECT_NEAR(*v.max_eigenvalue, 1.0, 1e-14);
}

TEST(ValidateMMatrixTest, RejectsPositiveOffDiagonal) {
  std::vector<double> dense{0.75, 0.1, 0.1, 0.75};
  MMatrixValidation v = ValidateMMatrix(dense, 2, 0.5, 1.0);
  EXPECT_FALSE(v.valid);
  ASSERT_FALSE(v.violations.empty());
  EXPECT_EQ(v.violations.front(), "positive off-diagonal at (1,2)");

  std::vector<Triplet> t{{0, 0, 0.75}, {1, 1, 0.75}, {0, 1, 0.1}};
  SymmetricCsr m = SymmetricCsr::FromTriangle(2, t);
  EXPECT_FALSE(ValidateMMatrix(m, 0.5, 1.0).valid);
  EXPECT_THROW(MQuadratic(m, {0.0, 0.0}, 0.5, 1.0), std::invalid_argument);
}

TEST(ValidateMMatrixTest, IdentityIsValid) {
  std::vector<double> eye{1, 0, 0, 0, 1, 0, 0, 0, 1};
  EXPECT_TRUE(ValidateMMatrix(eye, 3, 1.0, 1.0).valid);
}

TEST(ValidateMMatrixTest, RejectsAsymmetryAndBadSpectrum) {
  std::vector<double> asym{1.0, -0.2, -0.1, 1.0};
  MMatrixValidation v = ValidateMMatrix(asym, 2, 0.5, 1.5);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.violations.front(), "asymmetric entry at (1,2)");

  // Eigenvalues 0.5 and 1.0: claiming alpha = 0.6 must fail.
  std::vector<double> two{0.75, -0.25, -0.25, 0.75};
  EXPECT_FALSE(ValidateMMatrix(two, 2, 0.6, 1.0).valid);
  EXPECT_FALSE(ValidateMMatrix(two, 2, 0.5, 0.9).valid);
}

TEST(ToleranceTest, DefaultScalesWithBAndL) {
  MQuadratic q = TwoNode(0.1);
  EXPECT_DOUBLE_EQ(DefaultNegativeTolerance(q), 1e-12 * 1.0 * 0.45);
}

}  // namespace
}  // namespace sppr
