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

#include "subknap/greedy.h"

#include "subknap/errors.h"

namespace subknap {

ItemSet GreedyRun::prefix(std::size_t j) const {
  return ItemSet(std::vector<ItemIndex>(order.begin(), order.begin() + j));
}

Solution make_solution(const Instance& instance, ItemSet items) {
  Solution s;
  s.value = instance.value(items);
  s.total_size = instance.total_size(items);
  s.items = std::move(items);
  return s;
}

std::optional<ItemIndex> densest_candidate(const Instance& instance, const ItemSet& base,
                                           double base_value, const ItemSet& candidates) {
  std::optional<ItemIndex> best;
  double best_density = 0.0;
  for (ItemIndex i : candidates) {
    const double marginal = instance.value(base.with(i)) - base_value;
    const double density = marginal / static_cast<double>(instance.item_size(i));
    if (!best || definitely_greater(density, best_density)) {
      best = i;
      best_density = density;
    }
  }
  return best;
}

GreedyRun greedy_sequence(const Instance& instance, Size capacity) {
  if (capacity < 1) throw UsageError("greedy_sequence: capacity must be >= 1");
  instance.require_algorithm_ready("greedy_sequence");

  GreedyRun run;
  run.capacity = capacity;
  for (ItemIndex i = 0; i < instance.size(); ++i) {
    if (instance.item_size(i) <= capacity) run.eligible.insert(i);
  }

  ItemSet remaining = run.eligible;
  ItemSet packed;
  double value = 0.0;
  Size size = 0;
  bool overflowed = false;
  while (auto next = densest_candidate(instance, packed, value, remaining)) {
    packed.insert(*next);
    remaining.erase(*next);
    const double new_value = instance.value(packed);
    size += instance.item_size(*next);
    run.order.push_back(*next);
    run.marginals.push_back(new_value - value);
    run.prefix_values.push_back(new_value);
    run.prefix_sizes.push_back(size);
    value = new_value;
    if (!overflowed) {
      if (size <= capacity) {
        run.k = run.order.size();
      } else {
        overflowed = true;
        run.overflow_item = *next;
      }
    }
  }
  return run;
}

GreedyPick mgreedy_pick(const Instance& instance, const GreedyRun& run) {
  if (!run.overflow_item) return GreedyPick::kPrefix;
  const double single = instance.singleton_value(*run.overflow_item);
  return definitely_greater(single, run.prefix_value(run.k)) ? GreedyPick::kOverflowItem
                                                             : GreedyPick::kPrefix;
}

GreedyPick agreedy_pick(const GreedyRun& run) {
  if (!run.overflow_item) return GreedyPick::kPrefix;
  return definitely_greater(run.overflow_marginal(), run.prefix_value(run.k))
             ? GreedyPick::kOverflowItem
             : GreedyPick::kPrefix;
}

namespace {

Solution pick_solution(const Instance& instance, const GreedyRun& run, GreedyPick pick) {
  if (pick == GreedyPick::kOverflowItem) {
    return make_solution(instance, ItemSet{*run.overflow_item});
  }
  return make_solution(instance, run.prefix(run.k));
}

}  // namespace

Solution mgreedy(const Instance& instance, const GreedyRun& run) {
  return pick_solution(instance, run, mgreedy_pick(instance, run));
}

Solution mgreedy(const Instance& instance, Size capacity) {
  return mgreedy(instance, greedy_sequence(instance, capacity));
}

Solution agreedy(const Instance& instance, const GreedyRun& run) {
  return pick_solution(instance, run, agreedy_pick(run));
}

Solution agreedy(const Instance& instance, Size capacity) {
  return agreedy(instance, greedy_sequence(instance, capacity));
}

}  // namespace subknap
