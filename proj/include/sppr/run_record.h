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

#ifndef SPPR_RUN_RECORD_H_
#define SPPR_RUN_RECORD_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sppr/counters.h"
#include "sppr/solvers.h"

namespace sppr {

// One solver run on one instance, as emitted by `bench`.
struct RunRecord {
  std::string family;  // generator family or input file
  Index n = 0;
  double alpha = 0.0;
  double rho = 0.0;
  std::uint64_t seed = 0;
  Index seed_node = 0;
  std::string solver;   // ista, cdpr, aspr
  std::string variant;  // plain, early, constraints ("" if not applicable)
  std::optional<double> eps;  // unset for cdpr
  Counters counters;
  // Support of the returned point and its volumes.
  Index support_size = 0;
  Index vol_supp = 0;
  Index ivol_supp = 0;
  double gap = 0.0;  // certified ||r||^2 / (2 alpha) at the returned point
  std::int64_t wall_ns = 0;

  bool operator==(const RunRecord&) const = default;
};

inline constexpr const char* kCsvHeader =
    "family,n,alpha,rho,solver,variant,stages,inner_iters,nnz_touched,"
    "full_gradients,support_size,vol_supp,ivol_supp,gap,wall_ns";

// Shortest representation that reads back to the same double (at most 17
// significant digits).
std::string FormatDouble(double v);

std::string ToCsvRow(const RunRecord& r);
// Parses the CSV columns back; fields absent from the CSV (seed, seed_node,
// eps, restricted_gradients) are left default. Throws std::invalid_argument.
RunRecord FromCsvRow(const std::string& row);

std::string ToJson(const RunRecord& r);
RunRecord RunRecordFromJson(const std::string& text);

// {"solver", "x": [[node, value], ...], "support_size", "gap_bound"
// ("exact" or a number), "counters", "residuals"}. Residuals are recomputed
// against `box` when given.
std::string SolutionJson(const std::string& solver, const MQuadratic& q,
                         const Solution& sol,
                         std::optional<std::span<const double>> box =
                             std::nullopt);

}  // namespace sppr

#endif  // SPPR_RUN_RECORD_H_
