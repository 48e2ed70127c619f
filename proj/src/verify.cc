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

#include "sppr/verify.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "sppr/generators.h"
#include "sppr/oracle.h"
#include "sppr/solvers.h"

namespace sppr {
namespace {

// Collects pass/fail counts per invariant, keeping the first failure.
class Recorder {
 public:
  void Check(const std::string& name, bool ok, const std::string& where,
             const std::string& detail) {
    InvariantResult& r = Get(name);
    ++r.checked;
    if (ok) return;
    if (r.failed++ == 0) r.first_failure = where + ": " + detail;
  }
  // Registers an invariant that may see no checks on this run.
  void Touch(const std::string& name) { Get(name); }

  SuiteReport Finish() {
    SuiteReport report;
    for (const std::string& name : order_) {
      report.invariants.push_back(std::move(results_[name]));
    }
    return report;
  }

 private:
  InvariantResult& Get(const std::string& name) {
    auto it = results_.find(name);
    if (it == results_.end()) {
      order_.push_back(name);
      InvariantResult fresh;
      fresh.name = name;
      it = results_.emplace(name, std::move(fresh)).first;
    }
    return it->second;
  }
  std::vector<std::string> order_;
  std::map<std::string, InvariantResult> results_;
};

std::string Where(const NamedInstance& inst) {
  return inst.name + " [" + DumpInstance(inst.q) + "]";
}

std::string Num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<double> MatVec(const MQuadratic& q, const std::vector<double>& x) {
  const Index n = q.dim();
  std::vector<double> out(n, 0.0);
  for (Index i = 0; i < n; ++i) {
    auto cols = q.q().row_cols(i);
    auto vals = q.q().row_values(i);
    double acc = 0.0;
    for (std::size_t k = 0; k < cols.size(); ++k) acc += vals[k] * x[cols[k]];
    out[i] = acc;
  }
  return out;
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double DistSq(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

double InfNorm(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

bool InSupport(const OracleSolution& opt, Index i) {
  return std::binary_search(opt.support.begin(), opt.support.end(), i);
}

// First coordinate where lhs exceeds rhs by more than slack, or -1.
Index FirstExceed(const std::vector<double>& lhs,
                  const std::vector<double>& rhs, double slack) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] > rhs[i] + slack) return static_cast<Index>(i);
  }
  return -1;
}

double GradScale(const MQuadratic& q) { return std::max(1.0, q.b_inf_norm()); }

void CheckInstanceRange(const VerifyConfig& config) {
  if (config.instances < 1) throw std::invalid_argument("instances must be >= 1");
  if (config.max_n < 1) throw std::invalid_argument("max-n must be >= 1");
}

// ---------------------------------------------------------------- cdpr

void RunCdpr(const VerifyConfig& config, Recorder& rec) {
  for (const NamedInstance& inst :
       DeskInstances(config.instances, config.max_n, config.seed)) {
    const MQuadratic& q = inst.q;
    const OracleSolution opt = Solve(q);
    CdprTrace trace;
    Solution sol;
    try {
      sol = Cdpr(q, {}, &trace);
    } catch (const std::exception& e) {
      rec.Check("cdpr.exact", false, Where(inst), e.what());
      continue;
    }
    const std::vector<double> x = sol.x.ToDense();
    const double rel = std::sqrt(DistSq(x, opt.x_star)) /
                       std::max(InfNorm(opt.x_star), 1e-300);
    const double x_err = opt.support.empty() ? InfNorm(x) : rel;
    const double obj_err = std::abs(Objective(q, x) - opt.objective);
    rec.Check("cdpr.exact", x_err <= 1e-8 && obj_err <= 1e-10, Where(inst),
              "x error " + Num(x_err) + ", objective error " + Num(obj_err));
    rec.Check("cdpr.stage_count",
              sol.counters.stages == static_cast<Index>(opt.support.size()),
              Where(inst),
              std::to_string(sol.counters.stages) + " stages, |supp*| = " +
                  std::to_string(opt.support.size()));

    std::vector<std::vector<double>> dirs, q_dirs;
    std::vector<double> prev(q.dim(), 0.0);
    std::vector<Index> pivots;
    for (std::size_t t = 0; t < trace.stages.size(); ++t) {
      const CdprStage& st = trace.stages[t];
      std::vector<double> d = st.direction.ToDense();
      std::vector<double> qd = MatVec(q, d);
      const double dqd = Dot(d, qd);
      for (std::size_t k = 0; k < dirs.size(); ++k) {
        const double cross = std::abs(Dot(d, q_dirs[k]));
        const double bound =
            1e-8 * std::sqrt(dqd * Dot(dirs[k], q_dirs[k]));
        rec.Check("cdpr.q_orthogonal", cross <= bound, Where(inst),
                  "stage " + std::to_string(t) + " vs " + std::to_string(k) +
                      ": " + Num(cross) + " > " + Num(bound));
      }
      dirs.push_back(std::move(d));
      q_dirs.push_back(std::move(qd));

      pivots.push_back(st.pivot);
      const std::vector<double> grad = Gradient(q, st.iterate);
      for (Index i : pivots) {
        rec.Check("cdpr.annihilation",
                  std::abs(grad[i]) <= 1e-8 * GradScale(q), Where(inst),
                  "stage " + std::to_string(t) + " coordinate " +
                      std::to_string(i) + " gradient " + Num(grad[i]));
      }
      const std::vector<double> cur = st.iterate.ToDense();
      const Index drop = FirstExceed(prev, cur, 1e-10);
      bool positive = true;
      for (Index i : pivots) positive = positive && cur[i] > 0.0;
      rec.Check("cdpr.monotone", drop < 0 && positive, Where(inst),
                "stage " + std::to_string(t) +
                    (drop >= 0 ? " decreases coordinate " + std::to_string(drop)
                               : std::string(" leaves a pivot at zero")));
      prev = cur;
    }
  }
}

// ---------------------------------------------------------------- aspr

struct VariantCase {
  const char* name;
  AsprVariant variant;
};

const VariantCase kVariants[] = {
    {"plain", AsprVariant{}},
    {"early", AsprVariant{true, std::nullopt, false}},
    {"constraints", AsprVariant{false, std::nullopt, true}},
};

void RunAspr(const VerifyConfig& config, Recorder& rec) {
  rec.Touch("aspr.gap");
  rec.Touch("aspr.support_purity");
  rec.Touch("ista.support_purity");
  rec.Touch("aspr.sandwich");
  rec.Touch("aspr.early_soundness");
  rec.Touch("aspr.bound_soundness");
  const std::vector<NamedInstance> instances =
      DeskInstances(config.instances, config.max_n, config.seed);
  for (std::size_t n_inst = 0; n_inst < instances.size(); ++n_inst) {
    const NamedInstance& inst = instances[n_inst];
    const MQuadratic& q = inst.q;
    const OracleSolution opt = Solve(q);
    const double slack = 1e-9 * std::max(1.0, InfNorm(opt.x_star));
    const bool sandwich = static_cast<Index>(n_inst) < config.sandwich_instances;

    for (double eps : {1e-3, 1e-6}) {
      for (const VariantCase& vc : kVariants) {
        const std::string tag =
            std::string(vc.name) + " eps=" + Num(eps);
        AsprTrace trace;
        Solution sol;
        try {
          sol = Aspr(q, eps, vc.variant, {}, &trace);
        } catch (const std::exception& e) {
          rec.Check("aspr.gap", false, Where(inst), tag + ": " + e.what());
          continue;
        }
        const double gap = Objective(q, sol.x) - opt.objective;
        rec.Check("aspr.gap", gap <= eps, Where(inst),
                  tag + ": gap " + Num(gap));

        bool pure = true;
        std::string bad;
        for (Index i : trace.ever_nonzero) {
          if (!InSupport(opt, i)) pure = false, bad = std::to_string(i);
        }
        for (const AsprStage& st : trace.stages) {
          for (Index i : st.known_good) {
            if (!InSupport(opt, i)) pure = false, bad = std::to_string(i);
          }
        }
        rec.Check("aspr.support_purity", pure, Where(inst),
                  tag + ": coordinate " + bad + " outside supp*");

        for (const AsprStage& st : trace.stages) {
          if (!st.stopped_early) continue;
          for (Index i : st.added) {
            rec.Check("aspr.early_soundness", InSupport(opt, i), Where(inst),
                      tag + ": added " + std::to_string(i));
          }
        }
        for (const SparseVector& lower : trace.lower_bounds) {
          const Index at = FirstExceed(lower.ToDense(), opt.x_star, slack);
          rec.Check("aspr.bound_soundness", at < 0, Where(inst),
                    tag + ": lower bound exceeds x* at " + std::to_string(at));
        }

        if (!sandwich) continue;
        // x^(t) <= argmin over C^(t-1) <= x*, for every stage start after
        // the first and for the final iterate.
        for (std::size_t t = 1; t <= trace.stages.size(); ++t) {
          const std::vector<Index>& prev = trace.stages[t - 1].known_good;
          const std::vector<double> mid = SubspaceSolve(q, prev);
          const std::vector<double> x = t < trace.stages.size()
                                            ? trace.stages[t].start.ToDense()
                                            : trace.final_iterate.ToDense();
          const Index lo = FirstExceed(x, mid, slack);
          const Index hi = FirstExceed(mid, opt.x_star, slack);
          rec.Check("aspr.sandwich", lo < 0 && hi < 0, Where(inst),
                    tag + " stage " + std::to_string(t) + ": " +
                        (lo >= 0 ? "iterate above subspace minimizer at " +
                                       std::to_string(lo)
                                 : "subspace minimizer above x* at " +
                                       std::to_string(hi)));
        }
      }
    }

    IstaTrace ista;
    try {
      IstaBaseline(q, 1e-6, {}, &ista);
      bool pure = true;
      for (Index i : ista.ever_nonzero) pure = pure && InSupport(opt, i);
      rec.Check("ista.support_purity", pure, Where(inst),
                "coordinate outside supp*");
    } catch (const std::exception& e) {
      rec.Check("ista.support_purity", false, Where(inst), e.what());
    }
  }
}

// ---------------------------------------------------------------- rates

void RunRates(const VerifyConfig& config, Recorder& rec) {
  rec.Touch("pgd.rate");
  rec.Touch("apgd.rate");
  rec.Touch("apgd.growth");
  std::mt19937_64 rng(config.seed ^ 0x7a7e5ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (Index p = 0; p < config.rate_problems; ++p) {
    // Diagonal margins from 10^-3.5 to 10^0.5 spread kappa over [1, 1e4].
    MQuadratic q = RandomMMatrix(1, 1.0, 0);
    std::string name;
    for (int attempt = 0;; ++attempt) {
      const Index n =
          std::uniform_int_distribution<Index>(1, config.max_n)(rng);
      MMatrixOptions opts;
      opts.density = 0.2 + 0.8 * unit(rng);
      opts.margin_min = std::pow(10.0, -3.5 + 4.0 * unit(rng));
      opts.margin_max = opts.margin_min * 1.5;
      const std::uint64_t s = rng();
      MQuadratic cand = RandomMMatrix(n, opts, s);
      if (cand.kappa() <= 1e4 || attempt > 50) {
        name = "rate problem n=" + std::to_string(n) + " margin=" +
               Num(opts.margin_min) + " density=" + Num(opts.density) +
               " seed=" + std::to_string(s);
        q = std::move(cand);
        break;
      }
    }
    const NamedInstance inst{name, q, std::nullopt};
    const Index n = q.dim();

    std::vector<Index> subset;
    for (Index i = 0; i < n; ++i) {
      if (unit(rng) < 0.7) subset.push_back(i);
    }
    if (subset.empty()) subset.push_back(n - 1);
    SparseVector x0(n);
    if (unit(rng) < 0.5) {
      for (Index i : subset) x0.PushBack(i, unit(rng));
    }
    const std::vector<double> xc = SubspaceSolve(q, subset);
    const double gc = Objective(q, xc);
    const double d0 = DistSq(x0.ToDense(), xc);
    const double alpha = q.alpha(), smoothness = q.smoothness();
    const double dist_floor =
        std::pow(1e-12 * std::max(1.0, InfNorm(xc)), 2) * static_cast<double>(n);
    const double obj_floor =
        1e-13 * std::max({1.0, std::abs(gc), std::abs(Dot(q.b(), xc))});
    const std::string where = Where(inst) + " kappa=" + Num(q.kappa());

    std::vector<SparseVector> pgd;
    Pgd(q, subset, x0, config.rate_iterations, nullptr, &pgd);
    const double pgd_ratio = 1.0 - alpha / smoothness;
    bool pgd_ok = true;
    std::string pgd_bad;
    for (std::size_t t = 0; t < pgd.size(); ++t) {
      const double lhs = DistSq(pgd[t].ToDense(), xc);
      const double rhs = std::pow(pgd_ratio, static_cast<double>(t)) * d0;
      if (lhs > rhs * (1.0 + 1e-9) + dist_floor && pgd_ok) {
        pgd_ok = false;
        pgd_bad = "t=" + std::to_string(t) + " " + Num(lhs) + " > " + Num(rhs);
      }
    }
    rec.Check("pgd.rate", pgd_ok, where, pgd_bad);

    std::vector<SparseVector> apgd;
    Apgd(q, subset, x0, config.rate_iterations, nullptr, &apgd);
    const double apgd_ratio = 1.0 - 1.0 / (2.0 * std::sqrt(q.kappa()));
    bool apgd_ok = true;
    std::string apgd_bad;
    for (std::size_t t = 1; t < apgd.size(); ++t) {
      const double lhs = Objective(q, apgd[t]) - gc;
      const double rhs = std::pow(apgd_ratio, static_cast<double>(t) - 1.0) *
                         (smoothness - alpha) * d0 / 2.0;
      if (lhs > rhs * (1.0 + 1e-9) + obj_floor && apgd_ok) {
        apgd_ok = false;
        apgd_bad = "t=" + std::to_string(t) + " " + Num(lhs) + " > " + Num(rhs);
      }
    }
    rec.Check("apgd.rate", apgd_ok, where, apgd_bad);

    const std::vector<double> weights =
        ApgdWeights(q.kappa(), std::min<Index>(config.rate_iterations, 200));
    const double growth_floor = 1.0 / apgd_ratio;
    bool grow_ok = true;
    for (std::size_t t = 1; t + 1 < weights.size(); ++t) {
      grow_ok = grow_ok &&
                weights[t + 1] / weights[t] >= growth_floor * (1.0 - 1e-12);
    }
    rec.Check("apgd.growth", grow_ok, where,
              "growth " + Num(ApgdGrowthFactor(q.kappa())) + " < " +
                  Num(growth_floor));
  }
}

// ------------------------------------------------------------- geometry

struct State {
  std::vector<Index> subset;
  SparseVector x;
};

void RunGeometry(const VerifyConfig& config, Recorder& rec) {
  rec.Touch("geometry.proposition");
  const std::vector<NamedInstance> instances =
      DeskInstances(config.instances, config.max_n, config.seed);
  std::mt19937_64 rng(config.seed ^ 0x6e0ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Index per_instance = std::max<Index>(
      1, (config.geometry_states + static_cast<Index>(instances.size()) - 1) /
             static_cast<Index>(instances.size()));

  struct Pool {
    std::vector<State> states;
    std::size_t next = 0;
    OracleSolution opt;
  };
  std::vector<Pool> pools(instances.size());
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const MQuadratic& q = instances[k].q;
    Pool& pool = pools[k];
    // CDPR stage iterates on the pivots so far.
    CdprTrace cdpr;
    Cdpr(q, {}, &cdpr);
    std::vector<Index> pivots;
    for (const CdprStage& st : cdpr.stages) {
      pivots.push_back(st.pivot);
      pool.states.push_back({pivots, st.iterate});
    }
    // ASPR stage starts.
    AsprTrace aspr;
    AsprVariant early{true, Index{1}, false};
    Aspr(q, 1e-6, early, {}, &aspr);
    for (const AsprStage& st : aspr.stages) {
      pool.states.push_back({st.known_good, st.start});
    }
    pool.opt = Solve(q);
  }

  // Rounds over the instances; PGD from zero on random subsets fills in
  // once an instance's traced states run out.
  Index harvested = 0;
  for (Index round = 0; harvested < config.geometry_states && round < 1000;
       ++round) {
    for (std::size_t k = 0; k < instances.size(); ++k) {
      if (harvested >= config.geometry_states) break;
      const NamedInstance& inst = instances[k];
      const MQuadratic& q = inst.q;
      const Index n = q.dim();
      const double tol = 1e-9 * GradScale(q);
      Pool& pool = pools[k];
      auto random_state = [&] {
        std::vector<Index> subset;
        for (Index i = 0; i < n; ++i) {
          if (unit(rng) < 0.5) subset.push_back(i);
        }
        const Index t = std::uniform_int_distribution<Index>(0, 30)(rng);
        return State{subset, Pgd(q, subset, SparseVector(n), t)};
      };
      Index used = 0;
      for (Index attempt = 0; used < per_instance &&
                              harvested < config.geometry_states &&
                              attempt < 10 * per_instance + 100;
           ++attempt) {
        State s = pool.next < pool.states.size()
                      ? std::move(pool.states[pool.next++])
                      : random_state();
        std::sort(s.subset.begin(), s.subset.end());
        const std::vector<double> grad = Gradient(q, s.x, s.subset);
        if (std::any_of(grad.begin(), grad.end(),
                        [&](double g) { return g > tol; })) {
          continue;
        }
        GeometryReport r = VerifyGeometry(q, s.subset, s.x, tol, &pool.opt);
        rec.Check("geometry.proposition", r.ok(), Where(inst),
                  r.ok() ? "" : r.failures.front());
        ++used;
        ++harvested;
      }
    }
  }
}

// ------------------------------------------------------------------ core

void RunCore(const VerifyConfig& config, Recorder& rec) {
  rec.Touch("volume.bound");
  std::mt19937_64 rng(config.seed ^ 0xc0e5ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Index fd_max_n = std::max<Index>(config.max_n, 20);
  const std::vector<NamedInstance> instances =
      DeskInstances(config.instances, fd_max_n, config.seed + 11);

  for (const NamedInstance& inst : instances) {
    const MQuadratic& q = inst.q;
    const Index n = q.dim();
    std::vector<double> x(n);
    for (double& v : x) v = unit(rng) < 0.3 ? 0.0 : unit(rng);
    const SparseVector sx = SparseVector::FromDense(x);
    const std::vector<double> grad = Gradient(q, sx);

    // Central differences at h = 1e-5.
    const double h = 1e-5;
    double worst = 0.0;
    for (Index i = 0; i < n; ++i) {
      std::vector<double> up = x, down = x;
      up[i] += h;
      down[i] -= h;
      const double fd = (Objective(q, up) - Objective(q, down)) / (2.0 * h);
      worst = std::max(worst,
                       std::abs(fd - grad[i]) / std::max(1.0, std::abs(grad[i])));
    }
    rec.Check("gradient.finite_difference", worst <= 1e-6, Where(inst),
              "relative error " + Num(worst));

    std::vector<Index> coords;
    for (Index i = 0; i < n; ++i) {
      if (unit(rng) < 0.5) coords.push_back(i);
    }
    std::shuffle(coords.begin(), coords.end(), rng);
    const std::vector<double> part = Gradient(q, sx, coords);
    bool same = true;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      same = same && part[k] == grad[coords[k]];
    }
    rec.Check("gradient.restricted_bit_exact", same, Where(inst),
              "restricted gradient differs from the full one");

    if (inst.pagerank && n <= kEnumerationLimit) {
      const OracleSolution opt = Solve(q);
      const double bound = 1.0 / inst.pagerank->rho +
                           static_cast<double>(opt.support.size());
      const Index vol = Volume(q, opt.support);
      rec.Check("volume.bound", static_cast<double>(vol) <= bound, Where(inst),
                "vol " + std::to_string(vol) + " > " + Num(bound));
    }
    if (n <= std::min<Index>(config.max_n, 12)) {
      const OracleSolution e = DenseSolveEnumerate(q);
      const OracleSolution p = DenseSolveProjected(q);
      const double err = std::sqrt(DistSq(e.x_star, p.x_star)) /
                         std::max(InfNorm(e.x_star), 1e-300);
      const double ok_x = e.support.empty() ? InfNorm(p.x_star) : err;
      rec.Check("oracle.agreement",
                ok_x <= 1e-8 && std::abs(e.objective - p.objective) <= 1e-10,
                Where(inst), "x error " + Num(ok_x));
    }
  }

  // grad_j g(x - eps e_i) >= grad_j g(x) for j != i.
  for (Index k = 0; k < config.lemma_tuples; ++k) {
    const NamedInstance& inst = instances[k % instances.size()];
    const MQuadratic& q = inst.q;
    const Index n = q.dim();
    std::vector<double> x(n);
    for (double& v : x) v = unit(rng) < 0.3 ? 0.0 : 2.0 * unit(rng) - 0.5;
    const Index i = std::uniform_int_distribution<Index>(0, n - 1)(rng);
    const double eps = std::pow(10.0, -6.0 + 7.0 * unit(rng));
    const std::vector<double> before = Gradient(q, SparseVector::FromDense(x));
    x[i] -= eps;
    const std::vector<double> after = Gradient(q, SparseVector::FromDense(x));
    Index bad = -1;
    for (Index j = 0; j < n; ++j) {
      if (j != i && after[j] < before[j] - 1e-12) bad = j;
    }
    rec.Check("lemma.gradient_monotone", bad < 0, Where(inst),
              "i=" + std::to_string(i) + " eps=" + Num(eps) + " j=" +
                  std::to_string(bad));
  }
}

}  // namespace

std::vector<NamedInstance> RandomMInstances(Index count, Index max_n,
                                            std::uint64_t seed) {
  std::vector<NamedInstance> out;
  std::mt19937_64 rng(seed);
  for (Index k = 0; k < count; ++k) {
    const Index n = std::uniform_int_distribution<Index>(1, max_n)(rng);
    const double density =
        std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    const std::uint64_t s = rng();
    out.push_back({"m-matrix n=" + std::to_string(n) + " density=" +
                       Num(density) + " seed=" + std::to_string(s),
                   RandomMMatrix(n, density, s), std::nullopt});
  }
  return out;
}

std::vector<NamedInstance> RandomPageRankInstances(Index count, Index max_n,
                                                   std::uint64_t seed) {
  if (max_n < 2) throw std::invalid_argument("PageRank instances need n >= 2");
  std::vector<NamedInstance> out;
  std::mt19937_64 rng(seed);
  const GraphFamily families[] = {GraphFamily::kPath, GraphFamily::kCycle,
                                  GraphFamily::kGrid, GraphFamily::kSbm,
                                  GraphFamily::kStar};
  for (Index k = 0; k < count; ++k) {
    GraphFamily family = families[k % 5];
    if (family == GraphFamily::kCycle && max_n < 3) family = GraphFamily::kPath;
    if (family == GraphFamily::kGrid && max_n < 4) family = GraphFamily::kStar;
    GraphParams params;
    params.rho_min = 1e-3;
    params.rho_max = 0.3;
    switch (family) {
      case GraphFamily::kPath:
      case GraphFamily::kSbm:
        params.size = std::uniform_int_distribution<Index>(2, max_n)(rng);
        break;
      case GraphFamily::kCycle:
        params.size = std::uniform_int_distribution<Index>(3, max_n)(rng);
        break;
      case GraphFamily::kGrid: {
        Index side = 2;
        while ((side + 1) * (side + 1) <= max_n) ++side;
        params.size = std::uniform_int_distribution<Index>(2, side)(rng);
        break;
      }
      case GraphFamily::kStar:
        params.size = std::uniform_int_distribution<Index>(1, max_n - 1)(rng);
        break;
    }
    const std::uint64_t s = rng();
    PageRankInstance inst = RandomGraphInstance(family, params, s);
    MQuadratic q = BuildPageRankQuadratic(inst);
    out.push_back({GraphFamilyName(family) + " size=" +
                       std::to_string(params.size) + " seed=" +
                       std::to_string(s) + " alpha=" + Num(inst.alpha) +
                       " rho=" + Num(inst.rho),
                   std::move(q), std::move(inst)});
  }
  return out;
}

std::vector<NamedInstance> DeskInstances(Index count, Index max_n,
                                         std::uint64_t seed) {
  const Index pagerank = max_n >= 2 ? count / 5 : 0;
  std::vector<NamedInstance> out =
      RandomMInstances(count - pagerank, max_n, seed);
  for (auto& inst : RandomPageRankInstances(pagerank, max_n, seed + 1)) {
    out.push_back(std::move(inst));
  }
  return out;
}

std::string DumpInstance(const MQuadratic& q) {
  std::ostringstream os;
  os.precision(17);
  os << "n=" << q.dim() << " alpha=" << q.alpha() << " L=" << q.smoothness()
     << " b=[";
  for (Index i = 0; i < q.dim(); ++i) os << (i ? "," : "") << q.b()[i];
  os << "] Q=[";
  bool first = true;
  for (Index i = 0; i < q.dim(); ++i) {
    auto cols = q.q().row_cols(i);
    auto vals = q.q().row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] < i) continue;
      os << (first ? "" : ",") << "(" << i << "," << cols[k] << ","
         << vals[k] << ")";
      first = false;
    }
  }
  os << "]";
  return os.str();
}

bool SuiteReport::passed() const {
  return !invariants.empty() &&
         std::all_of(invariants.begin(), invariants.end(),
                     [](const InvariantResult& r) { return r.passed(); });
}

const InvariantResult* SuiteReport::Find(const std::string& name) const {
  for (const InvariantResult& r : invariants) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

void SuiteReport::Merge(SuiteReport other) {
  for (InvariantResult& r : other.invariants) {
    invariants.push_back(std::move(r));
  }
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names{"core", "geometry", "rates",
                                              "cdpr", "aspr", "all"};
  return names;
}

SuiteReport RunSuite(const std::string& suite, const VerifyConfig& config) {
  CheckInstanceRange(config);
  if (suite == "all") {
    SuiteReport all;
    for (const std::string& name : SuiteNames()) {
      if (name != "all") all.Merge(RunSuite(name, config));
    }
    return all;
  }
  Recorder rec;
  if (suite == "core") {
    RunCore(config, rec);
  } else if (suite == "geometry") {
    RunGeometry(config, rec);
  } else if (suite == "rates") {
    RunRates(config, rec);
  } else if (suite == "cdpr") {
    RunCdpr(config, rec);
  } else if (suite == "aspr") {
    RunAspr(config, rec);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return rec.Finish();
}

}  // namespace sppr
