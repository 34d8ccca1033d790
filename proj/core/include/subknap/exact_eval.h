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

#ifndef SUBKNAP_EXACT_EVAL_H_
#define SUBKNAP_EXACT_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subknap/greedy.h"
#include "subknap/instance.h"
#include "subknap/numeric.h"

namespace subknap {

// Exhaustive routines enumerate 2^n subsets and refuse larger instances.
inline constexpr std::size_t kMaxExhaustiveItems = 22;

// ResourceGuardError when the instance exceeds kMaxExhaustiveItems.
void require_exhaustive_size(const Instance& instance, std::string_view caller);

// Values and sizes of every subset, indexed by mask.
class SubsetTable {
 public:
  explicit SubsetTable(const Instance& instance);

  std::size_t item_count() const { return item_count_; }
  double value(std::uint64_t mask) const { return values_[mask]; }
  Size size(std::uint64_t mask) const { return sizes_[mask]; }

  // Best subset of total size <= capacity. Values within tolerance tie;
  // ties go to the lexicographically smallest id sequence.
  ItemSet best_feasible(Size capacity) const;

 private:
  std::size_t item_count_;
  std::vector<double> values_;
  std::vector<Size> sizes_;
};

Solution brute_force_opt(const Instance& instance, Size capacity);

// Sorted distinct nonempty subset sums. Between consecutive breakpoints
// every feasible family, greedy run and policy execution is constant.
struct BreakpointSet {
  std::vector<Size> capacities;
};

BreakpointSet breakpoints(const Instance& instance);

struct SweepRow {
  Size gamma = 0;
  double opt_value = 0.0;
  double ag_value = 0.0;
  double mg_value = 0.0;
  double policy_value = 0.0;
  double ratio_policy = 1.0;
  double ratio_ag = 1.0;
  double ratio_mg = 1.0;
  Size opt_size = 0;
  Size ag_size = 0;
  Size mg_size = 0;
  Size policy_size = 0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  double empirical_robustness = 1.0;  // min ratio_policy
  double curvature = 0.0;
  double alpha_bound = 0.0;
  std::string instance_digest;
};

struct SweepOptions {
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// One row per breakpoint: brute-force optimum, MGreedy, AGreedy and the
// robust policy driven by a fresh fit oracle. Rows are independent; the
// report is identical with and without `parallel`.
SweepReport robustness_sweep(const Instance& instance, const SweepOptions& options = {});

// Header gamma,opt_value,mg_value,ag_value,policy_value,ratio_mg,ratio_ag,
// ratio_policy; trailing comment lines carry curvature, alpha_bound,
// empirical_robustness and the instance digest.
std::string sweep_csv(const SweepReport& report);

// 64-bit FNV-1a over the canonical instance file, as "fnv1a64:<hex>".
std::string instance_digest(const Instance& instance);

}  // namespace subknap

#endif  // SUBKNAP_EXACT_EVAL_H_
