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

#include "sppr/run_record.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sppr {
namespace {

using Json = nlohmann::ordered_json;

Json CountersJson(const Counters& c) {
  return Json{{"stages", c.stages},
              {"inner_iters", c.inner_iters},
              {"nnz_touched", c.nnz_touched},
              {"full_gradients", c.full_gradients},
              {"restricted_gradients", c.restricted_gradients}};
}

Counters CountersFrom(const Json& j) {
  Counters c;
  c.stages = j.at("stages").get<Index>();
  c.inner_iters = j.at("inner_iters").get<Index>();
  c.nnz_touched = j.at("nnz_touched").get<Index>();
  c.full_gradients = j.at("full_gradients").get<Index>();
  c.restricted_gradients = j.at("restricted_gradients").get<Index>();
  return c;
}

std::vector<std::string> SplitCsv(const std::string& row) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(row);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!row.empty() && row.back() == ',') out.emplace_back();
  return out;
}

double ParseDouble(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number '" + s + "'");
  }
  return v;
}

template <typename Int>
Int ParseInt(const std::string& s) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string ToCsvRow(const RunRecord& r) {
  std::ostringstream os;
  os << r.family << ',' << r.n << ',' << FormatDouble(r.alpha) << ','
     << FormatDouble(r.rho) << ',' << r.solver << ',' << r.variant << ','
     << r.counters.stages << ',' << r.counters.inner_iters << ','
     << r.counters.nnz_touched << ',' << r.counters.full_gradients << ','
     << r.support_size << ',' << r.vol_supp << ',' << r.ivol_supp << ','
     << FormatDouble(r.gap) << ',' << r.wall_ns;
  return os.str();
}

RunRecord FromCsvRow(const std::string& row) {
  const std::vector<std::string> f = SplitCsv(row);
  if (f.size() != 15) {
    throw std::invalid_argument("expected 15 CSV fields, got " +
                                std::to_string(f.size()));
  }
  RunRecord r;
  r.family = f[0];
  r.n = ParseInt<Index>(f[1]);
  r.alpha = ParseDouble(f[2]);
  r.rho = ParseDouble(f[3]);
  r.solver = f[4];
  r.variant = f[5];
  r.counters.stages = ParseInt<Index>(f[6]);
  r.counters.inner_iters = ParseInt<Index>(f[7]);
  r.counters.nnz_touched = ParseInt<Index>(f[8]);
  r.counters.full_gradients = ParseInt<Index>(f[9]);
  r.support_size = ParseInt<Index>(f[10]);
  r.vol_supp = ParseInt<Index>(f[11]);
  r.ivol_supp = ParseInt<Index>(f[12]);
  r.gap = ParseDouble(f[13]);
  r.wall_ns = ParseInt<std::int64_t>(f[14]);
  return r;
}

std::string ToJson(const RunRecord& r) {
  Json j{{"family", r.family},
         {"n", r.n},
         {"alpha", r.alpha},
         {"rho", r.rho},
         {"seed", r.seed},
         {"seed_node", r.seed_node},
         {"solver", r.solver},
         {"variant", r.variant},
         {"eps", r.eps ? Json(*r.eps) : Json(nullptr)},
         {"counters", CountersJson(r.counters)},
         {"support_size", r.support_size},
         {"vol_supp", r.vol_supp},
         {"ivol_supp", r.ivol_supp},
         {"gap", r.gap},
         {"wall_ns", r.wall_ns}};
  return j.dump();
}

RunRecord RunRecordFromJson(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    RunRecord r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<Index>();
    r.alpha = j.at("alpha").get<double>();
    r.rho = j.at("rho").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.seed_node = j.at("seed_node").get<Index>();
    r.solver = j.at("solver").get<std::string>();
    r.variant = j.at("variant").get<std::string>();
    if (!j.at("eps").is_null()) r.eps = j.at("eps").get<double>();
    r.counters = CountersFrom(j.at("counters"));
    r.support_size = j.at("support_size").get<Index>();
    r.vol_supp = j.at("vol_supp").get<Index>();
    r.ivol_supp = j.at("ivol_supp").get<Index>();
    r.gap = j.at("gap").get<double>();
    r.wall_ns = j.at("wall_ns").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad run record: ") + e.what());
  }
}

std::string SolutionJson(const std::string& solver, const MQuadratic& q,
                         const Solution& sol,
                         std::optional<std::span<const double>> box) {
  Json x = Json::array();
  for (Index k = 0; k < sol.x.nnz(); ++k) {
    x.push_back(Json::array({sol.x.indices()[k], sol.x.values()[k]}));
  }
  const OptimalityReport report = CheckOptimality(q, sol.x, box);
  Json residuals{{"max_violation_positive", report.max_violation_positive},
                 {"max_violation_zero_low", report.max_violation_zero_low},
                 {"certified_gap", CertifiedGap(q, sol.x)}};
  if (box) residuals["upper_box_violations"] = report.upper_box_violations;
  Json j{{"solver", solver},
         {"x", std::move(x)},
         {"support_size", static_cast<Index>(sol.support.size())},
         {"gap_bound",
          sol.gap_bound ? Json(*sol.gap_bound) : Json("exact")},
         {"counters", CountersJson(sol.counters)},
         {"residuals", std::move(residuals)}};
  return j.dump();
}

}  // namespace sppr
