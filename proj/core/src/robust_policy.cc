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

#include "subknap/robust_policy.h"

#include <algorithm>
#include <set>

#include "subknap/errors.h"

namespace subknap {

IndispensabilityResult is_indispensable(const Instance& instance, ItemIndex item) {
  const GreedyRun run = greedy_sequence(instance, instance.item_size(item));
  IndispensabilityResult result;
  // The item must be the first to overflow capacity s(item), behind a
  // nonempty prefix, and AGreedy must prefer it over that prefix. When the
  // eligible items run out first the item never overflows.
  if (run.overflow_item == item && run.k >= 1 &&
      agreedy_pick(run) == GreedyPick::kOverflowItem) {
    result.indispensable = true;
    result.greedy_prefix.assign(run.order.begin(), run.order.begin() + run.k);
  }
  return result;
}

std::optional<IndispensabilityInterval> indispensability_interval(const Instance& instance,
                                                                  ItemIndex item) {
  const IndispensabilityResult r = is_indispensable(instance, item);
  if (!r.indispensable) return std::nullopt;

  const Size gamma1 = instance.item_size(item);
  Size gamma2 = gamma1;
  for (ItemIndex i : r.greedy_prefix) gamma2 += instance.item_size(i);

  std::vector<ItemIndex> head = r.greedy_prefix;
  head.push_back(item);

  // The greedy order depends on the capacity only through the eligible
  // set, which changes exactly at item sizes.
  std::set<Size> sizes;
  for (const auto& it : instance.items()) {
    if (it.size > gamma1 && it.size < gamma2) sizes.insert(it.size);
  }
  for (Size candidate : sizes) {
    const GreedyRun run = greedy_sequence(instance, candidate);
    if (!std::equal(head.begin(), head.end(), run.order.begin())) {
      gamma2 = candidate;
      break;
    }
  }
  return IndispensabilityInterval{gamma1, gamma2};
}

std::string_view to_string(StartReason reason) {
  return reason == StartReason::kIndispensable ? "indispensable" : "first_greedy";
}

StartList start_item_list(const Instance& instance) {
  instance.require_algorithm_ready("start_item_list");
  std::vector<ItemIndex> by_size(instance.size());
  for (ItemIndex i = 0; i < by_size.size(); ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(), [&](ItemIndex a, ItemIndex b) {
    return instance.item_size(a) < instance.item_size(b);
  });

  StartList list;
  for (ItemIndex i : by_size) {
    const Size size = instance.item_size(i);
    if (!list.entries.empty() && instance.item_size(list.entries.back().item) >= size) {
      continue;
    }
    IndispensabilityResult r = is_indispensable(instance, i);
    if (r.indispensable) {
      list.entries.push_back({i, StartReason::kIndispensable, std::move(r.greedy_prefix)});
    } else if (!list.entries.empty()) {
      const GreedyRun run = greedy_sequence(instance, size);
      if (run.order.front() == i) {
        list.entries.push_back({i, StartReason::kFirstGreedy, {}});
      }
    }
  }
  return list;
}

CapacityFitOracle::CapacityFitOracle(Size capacity) : capacity_(capacity) {
  if (capacity < 1) throw UsageError("fit oracle capacity must be >= 1");
}

CapacityFitOracle make_fit_oracle(Size capacity) { return CapacityFitOracle(capacity); }

std::string_view to_string(PolicyPhase phase) {
  switch (phase) {
    case PolicyPhase::kStartItem:
      return "start_item";
    case PolicyPhase::kGreedyPrefix:
      return "greedy_prefix";
    case PolicyPhase::kMainGreedy:
      return "main_greedy";
  }
  return "unknown";
}

RobustPolicy::RobustPolicy(const Instance& instance)
    : RobustPolicy(instance, start_item_list(instance)) {}

RobustPolicy::RobustPolicy(const Instance& instance, StartList start_list)
    : instance_(instance), start_list_(std::move(start_list)) {
  instance_.require_algorithm_ready("RobustPolicy");
}

namespace {

class Packer {
 public:
  Packer(const Instance& instance, FitOracle& oracle, PolicyTrace& trace)
      : instance_(instance), oracle_(oracle), trace_(trace) {}

  bool attempt(ItemIndex item, PolicyPhase phase) {
    const Size total = size_ + instance_.item_size(item);
    const bool fitted = oracle_.fits(total);
    trace_.attempts.push_back({item, fitted, phase, total});
    if (fitted) {
      packed_.insert(item);
      size_ = total;
      value_ = instance_.value(packed_);
    }
    return fitted;
  }

  const ItemSet& packed() const { return packed_; }
  double value() const { return value_; }

 private:
  const Instance& instance_;
  FitOracle& oracle_;
  PolicyTrace& trace_;
  ItemSet packed_;
  Size size_ = 0;
  double value_ = 0.0;
};

void drop_at_least(const Instance& instance, ItemSet& pool, Size size) {
  ItemSet kept;
  for (ItemIndex i : pool) {
    if (instance.item_size(i) < size) kept.insert(i);
  }
  pool = std::move(kept);
}

}  // namespace

PolicyTrace RobustPolicy::execute(FitOracle& oracle) const {
  const std::int64_t queries_before = oracle.query_count();
  PolicyTrace trace;
  Packer packer(instance_, oracle, trace);
  ItemSet pool = instance_.all_items();

  const std::vector<ItemIndex>* prefix = nullptr;
  for (auto it = start_list_.entries.rbegin(); it != start_list_.entries.rend(); ++it) {
    if (!pool.contains(it->item)) continue;
    if (packer.attempt(it->item, PolicyPhase::kStartItem)) {
      pool.erase(it->item);
      prefix = &it->greedy_prefix;
      break;
    }
    drop_at_least(instance_, pool, instance_.item_size(it->item));
  }

  if (prefix != nullptr) {
    for (ItemIndex i : *prefix) {
      if (!pool.contains(i)) continue;
      packer.attempt(i, PolicyPhase::kGreedyPrefix);
      pool.erase(i);
    }
  }

  while (!pool.empty()) {
    const ItemIndex next = *densest_candidate(instance_, packer.packed(), packer.value(), pool);
    if (packer.attempt(next, PolicyPhase::kMainGreedy)) {
      pool.erase(next);
    } else {
      drop_at_least(instance_, pool, instance_.item_size(next));
    }
  }

  trace.packed = make_solution(instance_, packer.packed());
  trace.query_count = oracle.query_count() - queries_before;
  return trace;
}

PolicyTrace execute_policy(const Instance& instance, FitOracle& oracle) {
  return RobustPolicy(instance).execute(oracle);
}

PolicyTrace execute_policy(const Instance& instance, const StartList& start_list,
                           FitOracle& oracle) {
  return RobustPolicy(instance, start_list).execute(oracle);
}

}  // namespace subknap
