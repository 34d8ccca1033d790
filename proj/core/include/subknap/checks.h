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

#ifndef SUBKNAP_CHECKS_H_
#define SUBKNAP_CHECKS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "subknap/exact_eval.h"
#include "subknap/instance.h"
#include "subknap/validation.h"

namespace subknap {

struct CheckFailure {
  std::string witness;
  double slack = 0.0;
};

// Outcome of checking one inequality family. Slack is the margin of
// "lhs >= rhs" scaled by max(1, |lhs|, |rhs|); a check fails when its
// slack drops below -1e-9, so failures is empty iff worst_slack >= -1e-9.
struct CheckReport {
  static constexpr std::size_t kMaxWitnesses = 20;

  std::string name;
  std::int64_t trials = 0;
  std::int64_t failure_count = 0;
  std::vector<CheckFailure> failures;  // first kMaxWitnesses
  double worst_slack = 0.0;
  std::map<std::string, std::int64_t> counts;  // trials per sub-check
  std::vector<std::string> notes;

  // Greedy-versus-optimum bookkeeping: 1 if the j-th greedy item is in the
  // optimum, and s(OPT intersect G_j).
  std::vector<int> opt_indicator;
  std::vector<Size> opt_prefix_sizes;
  std::string optimum;

  bool passed() const { return failure_count == 0; }

  void record(std::string_view sub_check, double lhs, double rhs,
              const std::function<std::string()>& witness);
  void merge(const CheckReport& other);

 private:
  bool any_trial_ = false;
};

// Shared exhaustive state for repeated checks on one instance.
class ExactContext {
 public:
  explicit ExactContext(const Instance& instance);

  const Instance& instance() const { return instance_; }
  const SubsetTable& table() const { return table_; }
  double curvature() const { return curvature_; }
  Solution optimum(Size capacity) const;

 private:
  Instance instance_;
  SubsetTable table_;
  double curvature_;
};

// f(G_j) >= (1/c)(1 - exp(-c s(G_j)/gamma)) f(OPT) for j = 1..k, with the
// limit (s(G_j)/gamma) f(OPT) when c is zero.
CheckReport check_prefix_bound(const Instance& instance, Size gamma);
CheckReport check_prefix_bound(const ExactContext& ctx, Size gamma);

// Both per-step lower bounds on the greedy marginals for j = 1..k+1.
// Capacities where G_k equals the optimum are skipped with a note.
CheckReport check_marginal_bounds(const Instance& instance, Size gamma);
CheckReport check_marginal_bounds(const ExactContext& ctx, Size gamma);

struct CurvatureLemmaOptions {
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  // Sample even when the instance is small enough to enumerate.
  bool force_random = false;
};

// Exhaustive for n <= this, sampled otherwise.
inline constexpr std::size_t kMaxExhaustiveLemmaItems = 8;

// For all A, j not in A: f(A + j) - f(A) >= (1 - c) f({j}).
// For disjoint A, B: f(A u B) >= f(A) + (1 - c) sum_{i in B} f({i}).
// For A subset of B: f(B) <= f(A) + sum_{u in B \ A} (f(A + u) - f(A)).
CheckReport check_curvature_lemma(const Instance& instance,
                                  const CurvatureLemmaOptions& options);

// Indispensable-item structure over every item and breakpoint:
//  - flagged items have a nonempty prefix of smaller total size;
//  - AGreedy returns an item alone exactly on its computed interval;
//  - at the first capacity that reorders the interval's greedy head, the
//    first larger item is either first in the order or returned alone.
CheckReport check_indispensable_properties(const Instance& instance);
CheckReport check_indispensable_properties(const ExactContext& ctx);

// Row-wise comparisons on a sweep: OPT >= MG >= AG, policy >= AG, the
// curvature bound for AG, feasibility, empirical robustness and the
// constancy of every algorithm inside a breakpoint interval.
std::vector<CheckReport> check_sweep(const ExactContext& ctx, const SweepReport& sweep);

struct VerificationReport {
  ValidationReport validation;
  std::vector<CheckReport> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

// Every checker above plus oracle validation. Stops after validation when
// the objective is not monotone submodular.
VerificationReport verify_instance(const Instance& instance,
                                   const CurvatureLemmaOptions& options);

}  // namespace subknap

#endif  // SUBKNAP_CHECKS_H_
