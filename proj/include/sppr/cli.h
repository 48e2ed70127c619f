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

// The sppr command line: solve, verify, bench.

#ifndef SPPR_CLI_H_
#define SPPR_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sppr/generators.h"
#include "sppr/run_record.h"

namespace sppr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSolverError = 3;

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);  // args[0] is the program name

// "ista", "cdpr", "aspr", "aspr:early", "aspr:constraints".
struct SolverSpec {
  std::string solver;
  std::string variant;  // "" for ista and cdpr
};
SolverSpec ParseSolverSpec(const std::string& text);

struct BenchConfig {
  GraphFamily family = GraphFamily::kGrid;
  // Node counts; grid uses the nearest square side, star size - 1 leaves.
  std::vector<Index> sizes;
  std::vector<double> alphas;
  std::vector<double> rhos;
  std::vector<SolverSpec> solvers;
  double eps = 1e-6;
  std::uint64_t seed = 0;
  Index repeat = 1;
  // Grid centre or node 0 when unset.
  std::optional<Index> seed_node;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Regime thresholds on kappa computed from the exact support: the first
// solver wins when kappa exceeds the value.
struct Predictors {
  std::string family;
  Index n = 0;
  double alpha = 0.0, rho = 0.0, kappa = 0.0;
  Index support_size = 0, vol = 0, ivol = 0;
  double cdpr_vs_ista = 0.0;  // max(|S|^3 / vol, |S|)
  double aspr_vs_ista = 0.0;  // max((|S| ivol / vol)^2, |S|)
  double cdpr_vs_aspr = 0.0;  // (|S|^2 / ivol)^2
};
inline constexpr const char* kPredictorsHeader =
    "family,n,alpha,rho,kappa,support_size,vol,ivol,cdpr_vs_ista,"
    "aspr_vs_ista,cdpr_vs_aspr";
std::string ToCsvRow(const Predictors& p);

// Rows in (size, alpha, rho, repeat, solver) order regardless of threading.
std::vector<RunRecord> RunBench(const BenchConfig& config,
                                std::vector<Predictors>* predictors = nullptr);

}  // namespace sppr

#endif  // SPPR_CLI_H_
