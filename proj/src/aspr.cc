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

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "solution_util.h"
#include "sppr/solvers.h"
#include "subspace.h"

namespace sppr {
namespace {

bool AllNonpositive(std::span<const double> grad) {
  return std::all_of(grad.begin(), grad.end(),
                     [](double g) { return g <= 0.0; });
}

// l <- max(l, x). Returns true when some bound rose.
bool RaiseBounds(std::vector<double>& lower, std::span<const double> x) {
  bool raised = false;
  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (x[k] > lower[k]) {
      lower[k] = x[k];
      raised = true;
    }
  }
  return raised;
}

}  // namespace

double AsprRetraction(double eps, double alpha, double smoothness,
                      Index known_good) {
  return std::sqrt(eps * alpha /
                   ((1.0 + static_cast<double>(known_good)) * smoothness *
                    smoothness));
}

double AsprInnerAccuracy(double delta, double alpha) {
  return delta * delta * alpha / 2.0;
}

Index AsprInnerIterations(double alpha, double smoothness, double grad_norm_sq,
                          double inner_accuracy) {
  if (grad_norm_sq == 0.0) return 0;
  if (smoothness == alpha) return 1;
  const double kappa = smoothness / alpha;
  const double ratio = (smoothness - alpha) * grad_norm_sq /
                       (2.0 * inner_accuracy * alpha * alpha);
  const double steps = 2.0 * std::sqrt(kappa) * std::log(ratio);
  if (!(steps > 0.0)) return 1;
  if (steps > 1e15) return std::numeric_limits<Index>::max();
  return 1 + static_cast<Index>(std::ceil(steps));
}

Solution Aspr(const MQuadratic& q, double eps, const AsprVariant& variant,
              const SolverOptions& options, AsprTrace* trace) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (variant.full_grad_period && *variant.full_grad_period < 1) {
    throw std::invalid_argument("full_grad_period must be at least 1");
  }
  const double tol = internal::ResolveTolerance(q, options.tol_neg);
  const double alpha = q.alpha(), smoothness = q.smoothness();

  Counters counters;
  internal::Subspace s(q);
  std::vector<double> x;      // x^(t) over S
  std::vector<double> lower;  // constraint variant only
  std::set<Index> ever_nonzero;
  if (trace != nullptr) *trace = AsprTrace{};

  auto note_positive = [&](std::span<const double> v) {
    if (trace == nullptr) return;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] > 0.0) ever_nonzero.insert(s.members()[k]);
    }
  };
  auto snapshot_bounds = [&] {
    if (trace != nullptr) trace->lower_bounds.push_back(s.ToGlobal(lower));
  };

  // S^(0): coordinates with negative gradient at zero.
  std::vector<Index> added =
      internal::ScanFullGradient(s, x, tol, &counters).negative;

  while (!added.empty()) {
    for (Index i : added) {
      s.Add(i, &counters);
      x.push_back(0.0);
      lower.push_back(0.0);
    }
    if (counters.stages >= q.dim()) {
      throw SolverError("aspr: stage count exceeds the dimension");
    }
    ++counters.stages;
    const Index m = s.size();

    AsprStage stage;
    if (trace != nullptr) {
      stage.known_good = s.members();
      stage.start = s.ToGlobal(x);
    }

    std::vector<double> grad(m);
    s.Gradient(x, grad, &counters);
    if (variant.updating_constraints) {
      if (AllNonpositive(grad) && RaiseBounds(lower, x)) snapshot_bounds();
      bool lifted = false;
      for (Index k = 0; k < m; ++k) {
        if (x[k] < lower[k]) {
          x[k] = lower[k];
          lifted = true;
        }
      }
      if (lifted) s.Gradient(x, grad, &counters);
    }
    double grad_sq = 0.0;
    for (double g : grad) grad_sq += g * g;

    const double delta = AsprRetraction(eps, alpha, smoothness, m);
    const double inner_accuracy = AsprInnerAccuracy(delta, alpha);
    const Index budget =
        AsprInnerIterations(alpha, smoothness, grad_sq, inner_accuracy);
    if (budget > options.max_iterations) {
      throw IterationLimitError(
          "aspr: inner budget " + std::to_string(budget) +
              " exceeds max_iterations",
          internal::MakeSolution(q, s.ToGlobal(x), eps, counters));
    }

    internal::ApgdHooks hooks;
    std::vector<Index> early_added;
    if (variant.updating_constraints) {
      hooks.on_gradient = [&](std::span<const double> point,
                              std::span<const double> g) {
        if (AllNonpositive(g) && RaiseBounds(lower, point)) snapshot_bounds();
      };
    }
    const Index period = variant.full_grad_period.value_or(m);
    std::vector<double> probe(m);
    hooks.after_iteration = [&](Index done, std::span<const double> y) {
      note_positive(y);
      if (!variant.early_termination || done % period != 0) return false;
      s.Gradient(y, probe, &counters);
      if (!AllNonpositive(probe)) return false;
      internal::FullGradientScan scan =
          internal::ScanFullGradient(s, y, tol, &counters);
      if (scan.negative.empty()) return false;
      early_added = std::move(scan.negative);
      return true;
    };

    Index ran = 0;
    std::vector<double> next =
        internal::ApgdLocal(s, x, budget,
                            variant.updating_constraints ? &lower : nullptr,
                            &counters, hooks, &ran);

    if (!early_added.empty()) {
      x = std::move(next);
      added = std::move(early_added);
    } else {
      for (Index k = 0; k < m; ++k) x[k] = std::max(0.0, next[k] - delta);
      added = internal::ScanFullGradient(s, x, tol, &counters).negative;
    }
    note_positive(x);

    if (trace != nullptr) {
      stage.delta = delta;
      stage.inner_accuracy = inner_accuracy;
      stage.inner_budget = budget;
      stage.inner_iterations = ran;
      stage.stopped_early = ran < budget;
      stage.added = added;
      trace->stages.push_back(std::move(stage));
    }
  }

  SparseVector result = s.ToGlobal(x);
  if (trace != nullptr) {
    trace->final_iterate = result;
    trace->ever_nonzero.assign(ever_nonzero.begin(), ever_nonzero.end());
  }
  return internal::MakeSolution(q, result, eps, counters);
}

}  // namespace sppr
