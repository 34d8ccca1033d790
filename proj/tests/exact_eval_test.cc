// Copyright 2026 The subknap Authors.
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

#include <gtest/gtest.h>

#include <sstream>

#include "subknap/bounds.h"
#include "subknap/errors.h"
#include "subknap/exact_eval.h"
#include "subknap/instance_io.h"
#include "support/fixtures.h"
#include "support/reference.h"

namespace subknap {
namespace {

using namespace subknap::testing;

Instance Modular(const std::vector<Size>& sizes) {
  std::vector<Item> items;
  std::map<std::string, double> w;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::string id = "i" + std::to_string(10 + i);
    items.push_back({id, sizes[i]});
    w[id] = 1.0;
  }
  return Instance(items, make_modular_oracle(w));
}

TEST(BruteForceOptTest, Ex1) {
  EXPECT_EQ(brute_force_opt(Ex1(), 2).items, (ItemSet{1}));
  EXPECT_DOUBLE_EQ(brute_force_opt(Ex1(), 2).value, 1.9);
  EXPECT_EQ(brute_force_opt(Ex1(), 3).items, (ItemSet{0, 1}));
  EXPECT_DOUBLE_EQ(brute_force_opt(Ex1(), 3).value, 2.9);
}

TEST(BruteForceOptTest, NothingFits) {
  const Solution s = brute_force_opt(Modular({3, 4}), 2);
  EXPECT_TRUE(s.items.empty());
  EXPECT_EQ(s.value, 0.0);
}

TEST(BruteForceOptTest, TiesGoToSmallestIdSequence) {
  // {i10} and {i11} tie; {i10} comes first.
  EXPECT_EQ(brute_force_opt(Modular({1, 1}), 1).items, (ItemSet{0}));
}

TEST(BruteForceOptTest, MatchesRecursiveEnumeration) {
  for (const auto& e : Corpus(15)) {
    for (Size g : breakpoints(e.instance).capacities) {
      const Solution got = brute_force_opt(e.instance, g);
      const RefSolution ref = ref_opt(e.instance, g);
      EXPECT_NEAR(got.value, ref.value, 1e-9 * std::max(1.0, ref.value));
      EXPECT_LE(got.total_size, g);
    }
  }
}

TEST(BruteForceOptTest, GuardAboveTwentyTwoItems) {
  std::vector<Size> sizes(23, 1);
  EXPECT_THROW(brute_force_opt(Modular(sizes), 5), ResourceGuardError);
  EXPECT_THROW(breakpoints(Modular(sizes)), ResourceGuardError);
  EXPECT_THROW(robustness_sweep(Modular(sizes)), ResourceGuardError);
}

TEST(BreakpointsTest, Examples) {
  EXPECT_EQ(breakpoints(Modular({1, 2})).capacities, (std::vector<Size>{1, 2, 3}));
  EXPECT_EQ(breakpoints(Modular({1, 1})).capacities, (std::vector<Size>{1, 2}));
  EXPECT_EQ(breakpoints(Modular({5})).capacities, (std::vector<Size>{5}));
}

TEST(BreakpointsTest, MatchesReachabilityTable) {
  for (const auto& e : Corpus(10)) {
    EXPECT_EQ(breakpoints(e.instance).capacities, ref_breakpoints(e.instance));
  }
}

TEST(SweepTest, Ex1) {
  const SweepReport r = robustness_sweep(Ex1());
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) EXPECT_DOUBLE_EQ(row.ratio_policy, 1.0);
  EXPECT_EQ(r.empirical_robustness, 1.0);
  EXPECT_EQ(r.curvature, 0.0);
  EXPECT_EQ(r.alpha_bound, 0.5);
}

TEST(SweepTest, Ex3) {
  const SweepReport r = robustness_sweep(Ex3());
  const SweepRow& row = r.rows.at(1);
  EXPECT_EQ(row.gamma, 2);
  EXPECT_DOUBLE_EQ(row.policy_value, 1.0);
  EXPECT_DOUBLE_EQ(row.opt_value, 1.9);
  EXPECT_NEAR(row.ratio_policy, 1.0 / 1.9, 1e-12);
  EXPECT_NEAR(r.empirical_robustness, 0.5263, 1e-4);
  EXPECT_GE(r.empirical_robustness, alpha(1.0));
  EXPECT_NEAR(r.alpha_bound, 0.3578, 5e-4);
}

TEST(SweepTest, SingleItem) {
  const Instance inst({{"a", 3}}, make_modular_oracle({{"a", 2.0}}));
  const SweepReport r = robustness_sweep(inst);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].ratio_mg, 1.0);
  EXPECT_EQ(r.rows[0].ratio_ag, 1.0);
  EXPECT_EQ(r.rows[0].ratio_policy, 1.0);
}

TEST(SweepTest, ParallelIsIdentical) {
  for (const auto& e : Corpus(5)) {
    const std::string serial = sweep_csv(robustness_sweep(e.instance));
    EXPECT_EQ(sweep_csv(robustness_sweep(e.instance, {.parallel = true, .threads = 3})), serial);
    EXPECT_EQ(sweep_csv(robustness_sweep(e.instance)), serial);
  }
}

TEST(SweepTest, CsvLayout) {
  const std::string csv = sweep_csv(robustness_sweep(Ex3()));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "gamma,opt_value,mg_value,ag_value,policy_value,ratio_mg,ratio_ag,ratio_policy");
  std::getline(in, line);
  EXPECT_EQ(line, "1,1,1,1,1,1,1,1");
  std::getline(in, line);
  EXPECT_EQ(line, "2,1.9,1.9,1,1,1,0.5263157894736842,0.5263157894736842");
  EXPECT_NE(csv.find("# curvature=1\n"), std::string::npos);
  EXPECT_NE(csv.find("# alpha_bound=0.35779"), std::string::npos);
  EXPECT_NE(csv.find("# empirical_robustness=0.5263157894736842\n"), std::string::npos);
  EXPECT_NE(csv.find("# instance_digest=fnv1a64:"), std::string::npos);
}

TEST(DigestTest, StableAndSensitive) {
  EXPECT_EQ(instance_digest(Ex1()), instance_digest(parse_instance_json(instance_to_json(Ex1()))));
  EXPECT_NE(instance_digest(Ex1()), instance_digest(Ex3()));
  EXPECT_EQ(instance_digest(Ex1()).size(), std::string("fnv1a64:").size() + 16);
}

}  // namespace
}  // namespace subknap
