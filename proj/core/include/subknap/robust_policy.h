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

#ifndef SUBKNAP_ROBUST_POLICY_H_
#define SUBKNAP_ROBUST_POLICY_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "subknap/greedy.h"
#include "subknap/instance.h"
#include "subknap/numeric.h"

namespace subknap {

// An item is indispensable when AGreedy returns it alone, instead of the
// greedy prefix, for some capacity. It suffices to test capacity s(item).
struct IndispensabilityResult {
  bool indispensable = false;
  // Greedy prefix in front of the item, in greedy order; empty unless
  // indispensable.
  std::vector<ItemIndex> greedy_prefix;
};

IndispensabilityResult is_indispensable(const Instance& instance, ItemIndex item);

// Capacities [gamma1, gamma2) for which the item is indispensable.
struct IndispensabilityInterval {
  Size gamma1 = 0;
  Size gamma2 = 0;

  bool contains(Size gamma) const { return gamma1 <= gamma && gamma < gamma2; }
  friend bool operator==(const IndispensabilityInterval&,
                         const IndispensabilityInterval&) = default;
};

// Absent unless the item is indispensable. gamma2 is the smaller of the
// size of prefix + item and the first capacity above gamma1 at which the
// leading k+1 entries of the greedy order change.
std::optional<IndispensabilityInterval> indispensability_interval(const Instance& instance,
                                                                  ItemIndex item);

enum class StartReason { kIndispensable, kFirstGreedy };
std::string_view to_string(StartReason reason);

struct StartEntry {
  ItemIndex item = 0;
  StartReason reason = StartReason::kIndispensable;
  // Prefix reported by is_indispensable; empty for first_greedy entries.
  std::vector<ItemIndex> greedy_prefix;

  friend bool operator==(const StartEntry&, const StartEntry&) = default;
};

// Candidate opening items, smallest size first, sizes strictly increasing.
struct StartList {
  std::vector<StartEntry> entries;
};

// Walks items by ascending size (then id). Indispensable items are always
// added; an item that heads the greedy order for capacity s(item) is added
// once the list is nonempty.
StartList start_item_list(const Instance& instance);

// Answers "does a load of this total size fit?" for a capacity the policy
// never sees directly. Every call is counted.
class FitOracle {
 public:
  virtual ~FitOracle() = default;

  bool fits(Size candidate_total_size) {
    ++query_count_;
    return answer(candidate_total_size);
  }
  std::int64_t query_count() const { return query_count_; }

 protected:
  virtual bool answer(Size candidate_total_size) const = 0;

 private:
  std::int64_t query_count_ = 0;
};

// fits(x) == (x <= capacity).
class CapacityFitOracle final : public FitOracle {
 public:
  explicit CapacityFitOracle(Size capacity);

 protected:
  bool answer(Size candidate_total_size) const override {
    return candidate_total_size <= capacity_;
  }

 private:
  Size capacity_;
};

// UsageError when capacity < 1.
CapacityFitOracle make_fit_oracle(Size capacity);

enum class PolicyPhase { kStartItem, kGreedyPrefix, kMainGreedy };
std::string_view to_string(PolicyPhase phase);

struct PolicyAttempt {
  ItemIndex item = 0;
  bool fitted = false;
  PolicyPhase phase = PolicyPhase::kStartItem;
  Size queried_total = 0;  // s(S) + s(item) at the time of the query

  friend bool operator==(const PolicyAttempt&, const PolicyAttempt&) = default;
};

struct PolicyTrace {
  std::vector<PolicyAttempt> attempts;
  Solution packed;
  std::int64_t query_count = 0;

  friend bool operator==(const PolicyTrace&, const PolicyTrace&) = default;
};

// Capacity-oblivious packing policy. Built once per instance; each
// execution talks to the hidden capacity only through a FitOracle.
class RobustPolicy {
 public:
  explicit RobustPolicy(const Instance& instance);
  RobustPolicy(const Instance& instance, StartList start_list);

  const StartList& start_list() const { return start_list_; }

  // 1. Try start-list entries largest first; a miss drops every item at
  //    least that large. The first hit is packed.
  // 2. Try the hit's greedy prefix in order.
  // 3. Repeatedly try the densest remaining item relative to the packed
  //    set; a hit packs it, a miss drops every item at least that large.
  PolicyTrace execute(FitOracle& oracle) const;

 private:
  Instance instance_;
  StartList start_list_;
};

PolicyTrace execute_policy(const Instance& instance, FitOracle& oracle);
PolicyTrace execute_policy(const Instance& instance, const StartList& start_list,
                           FitOracle& oracle);

}  // namespace subknap

#endif  // SUBKNAP_ROBUST_POLICY_H_
