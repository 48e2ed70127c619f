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

// Oracle-checked invariant suites over generated instances.

#ifndef SPPR_VERIFY_H_
#define SPPR_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sppr/quadratic.h"

namespace sppr {

struct NamedInstance {
  std::string name;  // family, size and seed: enough to regenerate it
  MQuadratic q;
  std::optional<PageRankInstance> pagerank;
};

// Random M-matrices with n in [1, max_n] and density in [0.2, 1].
std::vector<NamedInstance> RandomMInstances(Index count, Index max_n,
                                            std::uint64_t seed);
// PageRank instances cycling through the five graph families, at most max_n
// nodes each.
std::vector<NamedInstance> RandomPageRankInstances(Index count, Index max_n,
                                                   std::uint64_t seed);
// 4/5 M-matrices, 1/5 PageRank.
std::vector<NamedInstance> DeskInstances(Index count, Index max_n,
                                         std::uint64_t seed);

// n, alpha, L, b and the upper triangle of Q at 17 digits.
std::string DumpInstance(const MQuadratic& q);

struct InvariantResult {
  std::string name;
  Index checked = 0;
  Index failed = 0;
  std::string first_failure;  // instance name, detail and dump

  bool passed() const { return failed == 0; }
};

struct SuiteReport {
  std::vector<InvariantResult> invariants;

  bool passed() const;
  const InvariantResult* Find(const std::string& name) const;
  void Merge(SuiteReport other);
};

struct VerifyConfig {
  Index instances = 100;
  Index max_n = 12;
  std::uint64_t seed = 7;
  Index sandwich_instances = 50;
  Index geometry_states = 1000;
  Index lemma_tuples = 100000;
  Index rate_problems = 50;
  Index rate_iterations = 500;
};

// Suites: "core", "geometry", "rates", "cdpr", "aspr"; "all" runs every one.
const std::vector<std::string>& SuiteNames();
// Throws std::invalid_argument on an unknown suite or an empty range.
SuiteReport RunSuite(const std::string& suite, const VerifyConfig& config);

}  // namespace sppr

#endif  // SPPR_VERIFY_H_
