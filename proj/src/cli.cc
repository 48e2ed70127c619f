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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <thread>

#include "CLI11.hpp"
#include "sppr/io.h"
#include "sppr/oracle.h"
#include "sppr/solvers.h"
#include "sppr/verify.h"

namespace sppr {
namespace {

Solution RunSolver(const MQuadratic& q, const SolverSpec& spec, double eps,
                   const SolverOptions& options) {
  if (spec.solver == "ista") return IstaBaseline(q, eps, options);
  if (spec.solver == "cdpr") return Cdpr(q, options);
  AsprVariant variant;
  variant.early_termination = spec.variant == "early";
  variant.updating_constraints = spec.variant == "constraints";
  return Aspr(q, eps, variant, options);
}

Index DefaultSeedNode(GraphFamily family, Index side) {
  return family == GraphFamily::kGrid ? (side / 2) * side + side / 2 : 0;
}

// Family size parameter for a node count.
Index FamilySize(GraphFamily family, Index nodes) {
  switch (family) {
    case GraphFamily::kGrid:
      return std::max<Index>(
          2, static_cast<Index>(std::llround(std::sqrt(double(nodes)))));
    case GraphFamily::kStar:
      return std::max<Index>(1, nodes - 1);
    default:
      return nodes;
  }
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string graph;
  std::string format = "edgelist";
  double alpha = 0.0;
  double rho = 0.0;
  std::optional<Index> seed_node;
  std::string dist;
  std::string solver;
  std::optional<double> eps;
  std::string variant;
  std::optional<double> tolneg;
  std::string json;
  Index max_iterations = SolverOptions{}.max_iterations;
};

int CmdSolve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Graph graph = LoadGraph(a.graph, ParseGraphFormat(a.format));
  PageRankInstance instance = [&] {
    try {
      if (a.seed_node) {
        return PageRankInstance::WithSeedNode(std::move(graph), a.alpha, a.rho,
                                              *a.seed_node);
      }
      SparseVector s = LoadDistribution(a.dist, graph.num_nodes());
      return PageRankInstance::Make(std::move(graph), a.alpha, a.rho,
                                    std::move(s));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const MQuadratic q = BuildPageRankQuadratic(instance);
  if (a.solver != "cdpr" && !a.eps) {
    throw InputError("--eps is required for " + a.solver);
  }
  if (!a.variant.empty() && a.solver != "aspr") {
    throw InputError("--variant applies to aspr only");
  }
  SolverOptions options;
  options.tol_neg = a.tolneg;
  options.max_iterations = a.max_iterations;
  const SolverSpec spec{a.solver, a.variant};
  const Solution sol = RunSolver(q, spec, a.eps.value_or(0.0), options);
  const std::vector<double> box = PageRankBox(instance);
  const std::string json =
      SolutionJson(a.solver, q, sol, std::span<const double>(box));
  out << json << '\n';
  if (!a.json.empty()) {
    std::ofstream file(a.json);
    if (!file || !(file << json << '\n')) {
      err << "cannot write '" << a.json << "'\n";
      return kExitInputError;
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify

int CmdVerify(const std::string& suite, const VerifyConfig& config,
              std::ostream& out) {
  const SuiteReport report = RunSuite(suite, config);
  Index failed = 0;
  for (const InvariantResult& r : report.invariants) {
    if (r.passed()) {
      out << "PASS " << r.name << " (" << r.checked << " checks)\n";
    } else {
      ++failed;
      out << "FAIL " << r.name << " (" << r.failed << " of " << r.checked
          << " checks)\n  first failure: " << r.first_failure << '\n';
    }
  }
  if (failed == 0) {
    out << "all " << report.invariants.size() << " invariants passed\n";
    return kExitOk;
  }
  out << failed << " invariant(s) failed; reproduce with --suite " << suite
      << " --instances " << config.instances << " --max-n " << config.max_n
      << " --seed " << config.seed << '\n';
  return kExitCheckFailed;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string family = "grid";
  std::vector<Index> sizes;
  std::vector<double> alphas;
  std::vector<double> rhos;
  std::vector<std::string> solvers;
  double eps = 1e-6;
  std::uint64_t seed = 0;
  Index repeat = 1;
  std::optional<Index> seed_node;
  unsigned threads = 0;
  std::string predictors;
};

int CmdBench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.family = [&] {
    try {
      return ParseGraphFamily(a.family);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  config.sizes = a.sizes;
  config.alphas = a.alphas;
  config.rhos = a.rhos;
  for (const std::string& s : a.solvers) config.solvers.push_back(ParseSolverSpec(s));
  config.eps = a.eps;
  config.seed = a.seed;
  config.repeat = a.repeat;
  config.seed_node = a.seed_node;
  config.threads = a.threads;

  std::vector<Predictors> predictors;
  const std::vector<RunRecord> rows =
      RunBench(config, a.predictors.empty() ? nullptr : &predictors);
  out << kCsvHeader << '\n';
  for (const RunRecord& r : rows) out << ToCsvRow(r) << '\n';
  if (!a.predictors.empty()) {
    std::ofstream file(a.predictors);
    file << kPredictorsHeader << '\n';
    for (const Predictors& p : predictors) file << ToCsvRow(p) << '\n';
    if (!file) {
      err << "cannot write '" << a.predictors << "'\n";
      return kExitInputError;
    }
  }
  return kExitOk;
}

}  // namespace

SolverSpec ParseSolverSpec(const std::string& text) {
  if (text == "ista" || text == "cdpr") return {text, ""};
  if (text == "aspr") return {"aspr", "plain"};
  if (text == "aspr:early") return {"aspr", "early"};
  if (text == "aspr:constraints") return {"aspr", "constraints"};
  throw InputError("unknown solver '" + text + "'");
}

std::string ToCsvRow(const Predictors& p) {
  return p.family + ',' + std::to_string(p.n) + ',' + FormatDouble(p.alpha) +
         ',' + FormatDouble(p.rho) + ',' + FormatDouble(p.kappa) + ',' +
         std::to_string(p.support_size) + ',' + std::to_string(p.vol) + ',' +
         std::to_string(p.ivol) + ',' + FormatDouble(p.cdpr_vs_ista) + ',' +
         FormatDouble(p.aspr_vs_ista) + ',' + FormatDouble(p.cdpr_vs_aspr);
}

std::vector<RunRecord> RunBench(const BenchConfig& config,
                                std::vector<Predictors>* predictors) {
  if (config.sizes.empty() || config.alphas.empty() || config.rhos.empty() ||
      config.solvers.empty()) {
    throw InputError("bench needs sizes, alphas, rhos and solvers");
  }
  if (config.repeat < 1) throw InputError("--repeat must be at least 1");
  if (!(config.eps > 0.0)) throw InputError("--eps must be positive");

  struct Cell {
    Index instance;  // into `instances`
    SolverSpec spec;
  };
  struct Instance {
    PageRankInstance pr;
    MQuadratic q;
    std::uint64_t seed;
  };
  std::vector<Instance> instances;
  std::vector<Cell> cells;
  for (Index size : config.sizes) {
    for (double alpha : config.alphas) {
      for (double rho : config.rhos) {
        for (Index r = 0; r < config.repeat; ++r) {
          GraphParams params;
          params.size = FamilySize(config.family, size);
          params.alpha_min = params.alpha_max = alpha;
          params.rho_min = params.rho_max = rho;
          params.seed_node = config.seed_node.value_or(
              DefaultSeedNode(config.family, params.size));
          const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(r);
          PageRankInstance pr = [&] {
            try {
              return RandomGraphInstance(config.family, params, seed);
            } catch (const std::invalid_argument& e) {
              throw InputError(e.what());
            }
          }();
          MQuadratic q = BuildPageRankQuadratic(pr);
          const Index id = static_cast<Index>(instances.size());
          instances.push_back({std::move(pr), std::move(q), seed});
          for (const SolverSpec& spec : config.solvers) cells.push_back({id, spec});
        }
      }
    }
  }

  std::vector<RunRecord> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < cells.size();) {
      try {
        const Instance& inst = instances[cells[k].instance];
        const SolverSpec& spec = cells[k].spec;
        const auto start = std::chrono::steady_clock::now();
        const Solution sol = RunSolver(inst.q, spec, config.eps, {});
        const auto stop = std::chrono::steady_clock::now();
        RunRecord& r = rows[k];
        r.family = GraphFamilyName(config.family);
        r.n = inst.q.dim();
        r.alpha = inst.pr.alpha;
        r.rho = inst.pr.rho;
        r.seed = inst.seed;
        r.seed_node = inst.pr.s.indices().front();
        r.solver = spec.solver;
        r.variant = spec.variant;
        if (spec.solver != "cdpr") r.eps = config.eps;
        r.counters = sol.counters;
        r.support_size = static_cast<Index>(sol.support.size());
        r.vol_supp = Volume(inst.q, sol.support);
        r.ivol_supp = InternalVolume(inst.q, sol.support);
        r.gap = CertifiedGap(inst.q, sol.x);
        r.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        stop - start)
                        .count();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads != 0
                         ? config.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  if (predictors != nullptr) {
    predictors->clear();
    for (const Instance& inst : instances) {
      const Solution exact = Cdpr(inst.q);
      Predictors p;
      p.family = GraphFamilyName(config.family);
      p.n = inst.q.dim();
      p.alpha = inst.pr.alpha;
      p.rho = inst.pr.rho;
      p.kappa = inst.q.kappa();
      p.support_size = static_cast<Index>(exact.support.size());
      p.vol = Volume(inst.q, exact.support);
      p.ivol = InternalVolume(inst.q, exact.support);
      const double s = static_cast<double>(p.support_size);
      const double vol = static_cast<double>(p.vol);
      const double ivol = static_cast<double>(p.ivol);
      if (p.support_size > 0) {
        p.cdpr_vs_ista = std::max(s * s * s / vol, s);
        p.aspr_vs_ista = std::max(std::pow(s * ivol / vol, 2.0), s);
        p.cdpr_vs_aspr = std::pow(s * s / ivol, 2.0);
      }
      predictors->push_back(p);
    }
  }
  return rows;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Sparse solvers for l1-regularized personalized PageRank"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Solve one PageRank instance, print JSON");
  solve_cmd->add_option("--graph", solve.graph, "Graph file")->required();
  solve_cmd->add_option("--format", solve.format, "edgelist or matrixmarket")
      ->check(CLI::IsMember({"edgelist", "matrixmarket"}));
  solve_cmd->add_option("--alpha", solve.alpha, "Teleportation in (0, 1)")
      ->required();
  solve_cmd->add_option("--rho", solve.rho, "l1 weight, > 0")->required();
  CLI::Option* seed_opt =
      solve_cmd->add_option("--seed-node", solve.seed_node, "Seed node id");
  CLI::Option* dist_opt =
      solve_cmd->add_option("--dist", solve.dist, "File of 'node weight' lines");
  seed_opt->excludes(dist_opt);
  solve_cmd->add_option("--solver", solve.solver, "ista, cdpr or aspr")
      ->required()
      ->check(CLI::IsMember({"ista", "cdpr", "aspr"}));
  solve_cmd->add_option("--eps", solve.eps, "Target gap (ista, aspr)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--variant", solve.variant, "early or constraints")
      ->check(CLI::IsMember({"early", "constraints"}));
  solve_cmd->add_option("--tolneg", solve.tolneg, "Negative-gradient threshold")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--max-iterations", solve.max_iterations,
                        "Iteration cap")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--json", solve.json, "Also write the JSON here");

  std::string suite;
  VerifyConfig verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run oracle-checked invariant suites");
  verify_cmd->add_option("--suite", suite, "core, geometry, rates, cdpr, aspr or all")
      ->required()
      ->check(CLI::IsMember(SuiteNames()));
  verify_cmd->add_option("--instances", verify.instances, "Instances")
      ->check(CLI::Range(Index{1}, Index{1'000'000}));
  verify_cmd->add_option("--max-n", verify.max_n, "Largest dimension")
      ->check(CLI::Range(Index{1}, kEnumerationLimit));
  verify_cmd->add_option("--seed", verify.seed, "Generator seed");

  BenchArgs bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Counter benchmark over a graph family, CSV");
  bench_cmd->add_option("--family", bench.family, "grid, sbm, star, path or cycle")
      ->check(CLI::IsMember({"grid", "sbm", "star", "path", "cycle"}));
  bench_cmd->add_option("--sizes", bench.sizes, "Node counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--alphas", bench.alphas, "Teleportation values")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--rhos", bench.rhos, "l1 weights")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--solvers", bench.solvers,
                        "ista, cdpr, aspr, aspr:early, aspr:constraints")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--eps", bench.eps, "Target gap")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Seed");
  bench_cmd->add_option("--repeat", bench.repeat, "Runs per cell")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed-node", bench.seed_node,
                        "Seed node (grid centre or node 0 by default)");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads");
  bench_cmd->add_option("--predictors", bench.predictors,
                        "Write regime predictors CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) {
      if (!solve.seed_node && solve.dist.empty()) {
        throw InputError("one of --seed-node or --dist is required");
      }
      return CmdSolve(solve, out, err);
    }
    if (verify_cmd->parsed()) return CmdVerify(suite, verify, out);
    return CmdBench(bench, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolverError;
  }
}

}  // namespace sppr
