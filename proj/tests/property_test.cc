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

#include "subknap/bounds.h"
#include "subknap/checks.h"
#include "subknap/exact_eval.h"
#include "support/fixtures.h"
#include "support/reference.h"

namespace subknap {
namespace {

using namespace subknap::testing;

class CorpusProperty : public ::testing::TestWithParam<int> {
 protected:
  static const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> c = Corpus(12);
    return c;
  }
  const CorpusEntry& entry() const { return corpus()[static_cast<std::size_t>(GetParam())]; }
};

TEST_P(CorpusProperty, VerifierPasses) {
  const VerificationReport r = verify_instance(entry().instance, {.trials = 2000, .seed = 1});
  EXPECT_TRUE(r.validation.ok());
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.passed()) << c.name << ": "
                            << (c.failures.empty() ? "" : c.failures.front().witness);
  }
}

// Values from the independent reference implementations, so these hold
// without trusting the library's own sweep.
TEST_P(CorpusProperty, OrderingAgainstReferences) {
  const Instance& inst = entry().instance;
  const double a = ref_alpha(std::clamp(ref_curvature(inst), 0.0, 1.0));
  for (Size g : ref_breakpoints(inst)) {
    const double opt = ref_opt(inst, g).value;
    const double mg = ref_mgreedy(inst, g).value;
    const double ag = ref_agreedy(inst, g).value;
    const double pol = ref_policy(inst, g).value;
    const double tol = 1e-9 * std::max(1.0, opt);
    EXPECT_GE(opt + tol, mg) << "gamma=" << g;
    EXPECT_GE(mg + tol, ag) << "gamma=" << g;
    EXPECT_GE(pol + tol, ag) << "gamma=" << g;
    EXPECT_GE(ag + tol, (a - 1e-9) * opt) << "gamma=" << g;
  }
}

TEST_P(CorpusProperty, SweepMatchesReferences) {
  const Instance& inst = entry().instance;
  const SweepReport r = robustness_sweep(inst);
  for (const SweepRow& row : r.rows) {
    EXPECT_NEAR(row.opt_value, ref_opt(inst, row.gamma).value, 1e-9 * std::max(1.0, row.opt_value));
    EXPECT_DOUBLE_EQ(row.policy_value, ref_policy(inst, row.gamma).value);
    EXPECT_DOUBLE_EQ(row.ag_value, ref_agreedy(inst, row.gamma).value);
    EXPECT_DOUBLE_EQ(row.mg_value, ref_mgreedy(inst, row.gamma).value);
  }
}

TEST_P(CorpusProperty, RandomizedCurvatureLemma) {
  const CheckReport r = check_curvature_lemma(
      entry().instance, {.trials = 3000, .seed = static_cast<std::uint64_t>(GetParam()), .force_random = true});
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front().witness);
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusProperty, ::testing::Range(0, 48));

}  // namespace
}  // namespace subknap
