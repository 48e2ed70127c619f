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


#include "sppr/cli.h"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "sppr/io.h"
#include "sppr/run_record.h"

namespace sppr {
namespace {

Graph Edges(const std::string& text,
            GraphFormat format = GraphFormat::kEdgeList) {
  std::istringstream in(text);
  return ParseGraph(in, format);
}

std::string ParseError(const std::string& text,
                       GraphFormat format = GraphFormat::kEdgeList) {
  try {
    Edges(text, format);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(LoadGraphTest, SingleEdgeIsPath) {
  const Graph g = Edges("0 1");
  EXPECT_EQ(g.num_nodes(), 2);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 1);
}

TEST(LoadGraphTest, Triangle) {
  const Graph g = Edges("0 1\n1 2\n2 0\n");
  EXPECT_EQ(g.num_nodes(), 3);
  for (Index v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(LoadGraphTest, CommentsAndNodeHeader) {
  const Graph g = Edges("# nodes: 3\n% x\n0 1\n# y\n1 2\n");
  EXPECT_EQ(g.num_nodes(), 3);
}

TEST(LoadGraphTest, Rejections) {
  EXPECT_EQ(ParseError("0 0"), "self-loop at line 1");
  EXPECT_NE(ParseError("0 1\n1 0\n").find("duplicate edge at line 2"),
            std::string::npos);
  EXPECT_NE(ParseError("0 1\nfoo bar\n").find("line 2"), std::string::npos);
  EXPECT_NE(ParseError("0 -1\n"), "");
  EXPECT_NE(ParseError("0 1\n2 3\n"), "");  // disconnected
}

TEST(LoadGraphTest, MatrixMarketIsOneIndexed) {
  const Graph g = Edges(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "% comment\n3 3 2\n2 1\n3 2\n",
      GraphFormat::kMatrixMarket);
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_NE(ParseError("3 3 2\n2 1\n3 2\n", GraphFormat::kMatrixMarket), "");
  EXPECT_NE(ParseError("%%MatrixMarket matrix coordinate pattern symmetric\n"
                       "3 3 3\n2 1\n3 2\n",
                       GraphFormat::kMatrixMarket),
            "");
}

TEST(DistributionTest, NormalizesNearSimplex) {
  std::istringstream in("0 0.5\n2 0.5000004\n");
  const SparseVector s = ParseDistribution(in, 3);
  double total = 0.0;
  for (Index k = 0; k < s.nnz(); ++k) total += s.values()[k];
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_EQ(s.nnz(), 2);
}

TEST(DistributionTest, RejectsBadInput) {
  auto rejects = [](const std::string& text) {
    std::istringstream in(text);
    EXPECT_THROW(ParseDistribution(in, 3), InputError) << text;
  };
  rejects("0 0.5\n1 0.4\n");
  rejects("0 1.5\n1 -0.5\n");
  rejects("3 1\n");
  rejects("0 1\n0 0\n");
}

RunRecord RandomRecord(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto wild = [&] { return std::ldexp(unit(rng), static_cast<int>(rng() % 80) - 40); };
  RunRecord r;
  r.family = "grid";
  r.n = static_cast<Index>(rng() % 100000);
  r.alpha = wild();
  r.rho = wild();
  r.seed = rng();
  r.seed_node = static_cast<Index>(rng() % 1000);
  r.solver = "aspr";
  r.variant = "early";
  r.eps = wild();
  r.counters.stages = static_cast<Index>(rng() % 100);
  r.counters.inner_iters = static_cast<Index>(rng() % 1000000);
  r.counters.nnz_touched = static_cast<Index>(rng() >> 4);
  r.counters.full_gradients = static_cast<Index>(rng() % 100);
  r.counters.restricted_gradients = static_cast<Index>(rng() % 1000);
  r.support_size = static_cast<Index>(rng() % 100);
  r.vol_supp = static_cast<Index>(rng() % 1000);
  r.ivol_supp = static_cast<Index>(rng() % 1000);
  r.gap = wild();
  r.wall_ns = static_cast<std::int64_t>(rng() >> 2);
  return r;
}

TEST(RunRecordTest, JsonRoundTripIsLossless) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    RunRecord r = RandomRecord(rng);
    if (k % 3 == 0) {
      r.solver = "cdpr";
      r.variant = "";
      r.eps.reset();
    }
    EXPECT_EQ(RunRecordFromJson(ToJson(r)), r);
  }
}

TEST(RunRecordTest, CsvRoundTripKeepsEveryColumn) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    const RunRecord r = RandomRecord(rng);
    const RunRecord back = FromCsvRow(ToCsvRow(r));
    EXPECT_EQ(back.family, r.family);
    EXPECT_EQ(back.n, r.n);
    EXPECT_EQ(back.alpha, r.alpha);
    EXPECT_EQ(back.rho, r.rho);
    EXPECT_EQ(back.solver, r.solver);
    EXPECT_EQ(back.variant, r.variant);
    EXPECT_EQ(back.counters.stages, r.counters.stages);
    EXPECT_EQ(back.counters.inner_iters, r.counters.inner_iters);
    EXPECT_EQ(back.counters.nnz_touched, r.counters.nnz_touched);
    EXPECT_EQ(back.counters.full_gradients, r.counters.full_gradients);
    EXPECT_EQ(back.support_size, r.support_size);
    EXPECT_EQ(back.vol_supp, r.vol_supp);
    EXPECT_EQ(back.ivol_supp, r.ivol_supp);
    EXPECT_EQ(back.gap, r.gap);
    EXPECT_EQ(back.wall_ns, r.wall_ns);
  }
  EXPECT_THROW(FromCsvRow("grid,1,2"), std::exception);
}

TEST(RunRecordTest, FormatDoubleIsShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.65), "0.65");
  EXPECT_EQ(FormatDouble(1e-6), "1e-06");
  EXPECT_EQ(std::stod(FormatDouble(0.1 + 0.2)), 0.1 + 0.2);
}

// ---------------------------------------------------------------- RunCli

struct CliResult {
  int code;
  std::string out, err;
};

CliResult Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sppr");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class SolveCommandTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = ::testing::TempDir();
    graph_ = dir_ + "sppr_cli_two_node.txt";
    std::ofstream(graph_) << "0 1\n";
  }
  std::vector<std::string> Base(const std::string& rho) const {
    return {"solve", "--graph", graph_, "--format", "edgelist", "--alpha",
            "0.5",   "--rho",   rho,    "--seed-node", "0"};
  }
  std::string dir_, graph_;
};

nlohmann::json Parse(const CliResult& r) {
  return nlohmann::json::parse(r.out);
}

TEST_F(SolveCommandTest, CdprTwoNode) {
  std::vector<std::string> args = Base("0.1");
  args.insert(args.end(), {"--solver", "cdpr"});
  const CliResult r = Invoke(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json j = Parse(r);
  EXPECT_EQ(j["solver"], "cdpr");
  EXPECT_EQ(j["x"].dump(), "[[0,0.65],[1,0.15]]");
  EXPECT_EQ(j["support_size"], 2);
  EXPECT_EQ(j["gap_bound"], "exact");
  EXPECT_TRUE(j.contains("counters"));
  EXPECT_TRUE(j.contains("residuals"));
  EXPECT_EQ(Invoke(args).out, r.out);
}

TEST_F(SolveCommandTest, LargeRhoGivesZero) {
  std::vector<std::string> args = Base("1.0");
  args.insert(args.end(), {"--solver", "cdpr"});
  const CliResult r = Invoke(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Parse(r)["x"].dump(), "[]");
  EXPECT_EQ(Parse(r)["support_size"], 0);
}

TEST_F(SolveCommandTest, AsprCertifiesEps) {
  for (const char* variant : {"", "early", "constraints"}) {
    std::vector<std::string> args = Base("0.1");
    args.insert(args.end(), {"--solver", "aspr", "--eps", "1e-6"});
    if (*variant) args.insert(args.end(), {"--variant", variant});
    const CliResult r = Invoke(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const nlohmann::json j = Parse(r);
    EXPECT_EQ(j["gap_bound"].get<double>(), 1e-6);
    EXPECT_LE(j["residuals"]["certified_gap"].get<double>(), 1e-6);
    for (const auto& entry : j["x"]) EXPECT_LE(entry[0].get<int>(), 1);
    EXPECT_EQ(Invoke(args).out, r.out);
  }
}

TEST_F(SolveCommandTest, JsonFileMatchesStdout) {
  const std::string path = dir_ + "sppr_cli_out.json";
  std::vector<std::string> args = Base("0.1");
  args.insert(args.end(), {"--solver", "ista", "--eps", "1e-8", "--json", path});
  const CliResult r = Invoke(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(file.str()), Parse(r));
}

TEST_F(SolveCommandTest, DistributionInput) {
  const std::string dist = dir_ + "sppr_cli_dist.txt";
  std::ofstream(dist) << "0 1\n";
  const CliResult r =
      Invoke({"solve", "--graph", graph_, "--format", "edgelist", "--alpha", "0.5",
           "--rho", "0.1", "--dist", dist, "--solver", "cdpr"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Parse(r)["x"].dump(), "[[0,0.65],[1,0.15]]");
}

TEST_F(SolveCommandTest, InputErrorsExitTwo) {
  const std::string loop = dir_ + "sppr_cli_loop.txt";
  std::ofstream(loop) << "0 0\n";
  CliResult r = Invoke({"solve", "--graph", loop, "--format", "edgelist",
                     "--alpha", "0.5", "--rho", "0.1", "--seed-node", "0",
                     "--solver", "cdpr"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("self-loop at line 1"), std::string::npos);

  std::vector<std::string> args = Base("0.1");
  args.insert(args.end(), {"--solver", "newton"});
  EXPECT_EQ(Invoke(args).code, kExitInputError);

  args = Base("0.1");
  args.insert(args.end(), {"--solver", "aspr"});  // no --eps
  EXPECT_EQ(Invoke(args).code, kExitInputError);

  args = Base("0.1");
  args.insert(args.end(), {"--solver", "cdpr", "--bogus"});
  EXPECT_EQ(Invoke(args).code, kExitInputError);

  args = Base("0.1");
  args[6] = "1.5";  // alpha
  args.insert(args.end(), {"--solver", "cdpr"});
  EXPECT_EQ(Invoke(args).code, kExitInputError);

  args = Base("0.1");
  args[10] = "7";  // seed node out of range
  args.insert(args.end(), {"--solver", "cdpr"});
  EXPECT_EQ(Invoke(args).code, kExitInputError);

  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(Invoke({}).code, kExitInputError);
}

TEST_F(SolveCommandTest, IterationCapExitsThree) {
  std::vector<std::string> args = Base("0.1");
  args.insert(args.end(), {"--solver", "ista", "--eps", "1e-12",
                           "--max-iterations", "2"});
  EXPECT_EQ(Invoke(args).code, kExitSolverError);
}

TEST(VerifyCommandTest, ExitCodes) {
  EXPECT_EQ(Invoke({"verify", "--suite", "cdpr", "--instances", "20", "--max-n",
                 "8", "--seed", "7"})
                .code,
            kExitOk);
  EXPECT_EQ(Invoke({"verify", "--suite", "all", "--max-n", "0"}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"verify", "--suite", "bogus"}).code, kExitInputError);
}

TEST(BenchCommandTest, PathSmokeIsWellFormedCsv) {
  const CliResult r =
      Invoke({"bench", "--family", "path", "--sizes", "2", "--alphas", "0.5",
           "--rhos", "0.1", "--solvers", "cdpr", "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, kCsvHeader);
  EXPECT_FALSE(std::getline(lines, extra) && !extra.empty());
  const RunRecord rec = FromCsvRow(row);
  EXPECT_EQ(rec.family, "path");
  EXPECT_EQ(rec.n, 2);
  EXPECT_EQ(rec.solver, "cdpr");
  EXPECT_EQ(rec.support_size, 2);
}

TEST(BenchTest, DeterministicAcrossThreadCounts) {
  BenchConfig config;
  config.family = GraphFamily::kSbm;
  config.sizes = {30, 60};
  config.alphas = {0.1, 0.3};
  config.rhos = {0.01};
  config.solvers = {ParseSolverSpec("ista"), ParseSolverSpec("cdpr"),
                    ParseSolverSpec("aspr:early")};
  config.seed = 5;
  config.repeat = 2;
  config.threads = 1;
  std::vector<RunRecord> one = RunBench(config);
  config.threads = 4;
  std::vector<RunRecord> many = RunBench(config);
  ASSERT_EQ(one.size(), 2u * 2u * 3u * 2u);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    one[k].wall_ns = many[k].wall_ns = 0;
    EXPECT_EQ(one[k], many[k]) << k;
  }
}

TEST(BenchTest, CdprWorkFollowsSupportNotSize) {
  BenchConfig config;
  config.family = GraphFamily::kGrid;
  config.sizes = {400, 1600};
  config.alphas = {0.1};
  config.rhos = {0.02};
  config.solvers = {ParseSolverSpec("cdpr")};
  config.seed = 1;
  std::vector<Predictors> predictors;
  const std::vector<RunRecord> rows = RunBench(config, &predictors);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].n, 4 * rows[0].n);
  EXPECT_LE(rows[1].counters.nnz_touched, 2 * rows[0].counters.nnz_touched);
  ASSERT_EQ(predictors.size(), 2u);
  EXPECT_EQ(predictors[0].support_size, rows[0].support_size);
  EXPECT_GT(predictors[0].cdpr_vs_ista, 0.0);
}

TEST(SolverSpecTest, Parses) {
  EXPECT_EQ(ParseSolverSpec("aspr").variant, "plain");
  EXPECT_EQ(ParseSolverSpec("aspr:constraints").variant, "constraints");
  EXPECT_EQ(ParseSolverSpec("cdpr").variant, "");
  EXPECT_THROW(ParseSolverSpec("aspr:turbo"), std::exception);
  EXPECT_THROW(ParseSolverSpec("lbfgs"), std::exception);
}

}  // namespace
}  // namespace sppr
