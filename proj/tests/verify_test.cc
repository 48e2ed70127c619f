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

#include <string>

#include "gtest/gtest.h"

namespace sppr {
namespace {

VerifyConfig Small() {
  VerifyConfig c;
  c.instances = 30;
  c.max_n = 10;
  c.seed = 3;
  c.sandwich_instances = 10;
  c.geometry_states = 100;
  c.lemma_tuples = 2000;
  c.rate_problems = 10;
  c.rate_iterations = 200;
  return c;
}

void ExpectPassed(const SuiteReport& r) {
  EXPECT_TRUE(r.passed());
  for (const InvariantResult& inv : r.invariants) {
    EXPECT_TRUE(inv.passed()) << inv.name << " " << inv.failed << "/"
                              << inv.checked << " " << inv.first_failure;
  }
}

class SuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, PassesOnSmallRun) { ExpectPassed(RunSuite(GetParam(), Small())); }

INSTANTIATE_TEST_SUITE_P(Suites, SuiteTest,
                         ::testing::Values("core", "geometry", "rates", "cdpr",
                                           "aspr"),
                         [](const auto& info) { return info.param; });

TEST(RunSuiteTest, RejectsBadArguments) {
  VerifyConfig c = Small();
  EXPECT_THROW(RunSuite("nope", c), std::invalid_argument);
  c.max_n = 0;
  EXPECT_THROW(RunSuite("cdpr", c), std::invalid_argument);
}

TEST(RunSuiteTest, Deterministic) {
  VerifyConfig c = Small();
  c.instances = 10;
  SuiteReport a = RunSuite("cdpr", c);
  SuiteReport b = RunSuite("cdpr", c);
  ASSERT_EQ(a.invariants.size(), b.invariants.size());
  for (std::size_t k = 0; k < a.invariants.size(); ++k) {
    EXPECT_EQ(a.invariants[k].checked, b.invariants[k].checked);
  }
}

TEST(DumpInstanceTest, ListsUpperTriangle) {
  const std::string dump = DumpInstance(RandomMInstances(1, 1, 4)[0].q);
  EXPECT_NE(dump.find("n=1"), std::string::npos);
  EXPECT_NE(dump.find("Q=[(0,0,"), std::string::npos);
}

}  // namespace
}  // namespace sppr
