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

#ifndef SUBKNAP_GREEDY_H_
#define SUBKNAP_GREEDY_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "subknap/instance.h"
#include "subknap/item_set.h"
#include "subknap/numeric.h"

namespace subknap {

// Greedy order of every item that fits an empty knapsack of the given
// capacity, computed without the packing restriction. The first k entries
// form the packed prefix G_k; entry k (0-based) is the first item that
// overflows.
struct GreedyRun {
  Size capacity = 0;
  ItemSet eligible;
  std::vector<ItemIndex> order;
  std::vector<double> marginals;     // f(G_j) - f(G_{j-1})
  std::vector<double> prefix_values;  // f(G_j)
  std::vector<Size> prefix_sizes;     // s(G_j)
  std::size_t k = 0;
  std::optional<ItemIndex> overflow_item;

  // G_j, the first j entries; prefix(0) is empty.
  ItemSet prefix(std::size_t j) const;
  double prefix_value(std::size_t j) const { return j == 0 ? 0.0 : prefix_values[j - 1]; }
  Size prefix_size(std::size_t j) const { return j == 0 ? 0 : prefix_sizes[j - 1]; }
  // f(G_k + i_{k+1}) - f(G_k); requires overflow_item.
  double overflow_marginal() const { return marginals[k]; }
};

struct Solution {
  ItemSet items;
  double value = 0.0;
  Size total_size = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

Solution make_solution(const Instance& instance, ItemSet items);

// Candidate maximizing (f(base + i) - f(base)) / s(i). Densities within
// tolerance tie, and ties go to the smallest index (= smallest id).
std::optional<ItemIndex> densest_candidate(const Instance& instance, const ItemSet& base,
                                           double base_value, const ItemSet& candidates);

// Throws UsageError for capacity < 1 or an invalid objective,
// PreconditionError for an unnormalized instance.
GreedyRun greedy_sequence(const Instance& instance, Size capacity);

enum class GreedyPick { kPrefix, kOverflowItem };

// MGreedy keeps G_k unless f({i_{k+1}}) exceeds f(G_k).
GreedyPick mgreedy_pick(const Instance& instance, const GreedyRun& run);
// AGreedy keeps G_k unless the marginal of i_{k+1} on G_k exceeds f(G_k).
GreedyPick agreedy_pick(const GreedyRun& run);

Solution mgreedy(const Instance& instance, Size capacity);
Solution mgreedy(const Instance& instance, const GreedyRun& run);
Solution agreedy(const Instance& instance, Size capacity);
Solution agreedy(const Instance& instance, const GreedyRun& run);

}  // namespace subknap

#endif  // SUBKNAP_GREEDY_H_
