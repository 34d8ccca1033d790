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

#ifndef SUBKNAP_TESTS_SUPPORT_REFERENCE_H_
#define SUBKNAP_TESTS_SUPPORT_REFERENCE_H_

// Straightforward re-implementations used as test oracles. They share no
// code with the library beyond Instance::value and the tolerance helpers,
// and favor literal transcription over speed.

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "subknap/instance.h"
#include "subknap/numeric.h"

namespace subknap::testing {

struct RefSolution {
  std::vector<ItemIndex> items;  // ascending
  double value = 0.0;
  Size size = 0;
};

inline RefSolution ref_eval(const Instance& inst, std::vector<ItemIndex> items) {
  std::sort(items.begin(), items.end());
  RefSolution out{items, inst.value(ItemSet(items)), 0};
  for (ItemIndex i : items) out.size += inst.item_size(i);
  return out;
}

// Include/exclude recursion over items in index order.
inline RefSolution ref_opt(const Instance& inst, Size gamma) {
  RefSolution best = ref_eval(inst, {});
  std::vector<ItemIndex> current;
  std::function<void(ItemIndex, Size)> rec = [&](ItemIndex next, Size used) {
    if (next == inst.size()) {
      const RefSolution cand = ref_eval(inst, current);
      if (definitely_greater(cand.value, best.value) ||
          (approx_equal(cand.value, best.value) && cand.items < best.items)) {
        best = cand;
      }
      return;
    }
    if (used + inst.item_size(next) <= gamma) {
      current.push_back(next);
      rec(next + 1, used + inst.item_size(next));
      current.pop_back();
    }
    rec(next + 1, used);
  };
  rec(0, 0);
  return best;
}

struct RefGreedy {
  std::vector<ItemIndex> packed;        // G_k in greedy order
  std::optional<ItemIndex> overflow;    // i_{k+1}
  double packed_value = 0.0;
};

// Densest remaining candidate; earlier index wins unless beaten beyond
// tolerance.
inline std::optional<ItemIndex> ref_densest(const Instance& inst,
                                            const std::vector<ItemIndex>& base,
                                            const std::vector<ItemIndex>& pool) {
  const double base_value = inst.value(ItemSet(std::vector<ItemIndex>(base)));
  std::optional<ItemIndex> best;
  double best_density = 0.0;
  for (ItemIndex i : pool) {
    std::vector<ItemIndex> with = base;
    with.push_back(i);
    std::sort(with.begin(), with.end());
    const double d = (inst.value(ItemSet(with)) - base_value) /
                     static_cast<double>(inst.item_size(i));
    if (!best || definitely_greater(d, best_density)) {
      best = i;
      best_density = d;
    }
  }
  return best;
}

// Greedy with a stop at the first item that does not fit.
inline RefGreedy ref_greedy(const Instance& inst, Size gamma) {
  std::vector<ItemIndex> pool;
  for (ItemIndex i = 0; i < inst.size(); ++i) {
    if (inst.item_size(i) <= gamma) pool.push_back(i);
  }
  RefGreedy out;
  Size used = 0;
  while (!pool.empty()) {
    const ItemIndex i = *ref_densest(inst, out.packed, pool);
    if (used + inst.item_size(i) > gamma) {
      out.overflow = i;
      break;
    }
    used += inst.item_size(i);
    out.packed.push_back(i);
    pool.erase(std::find(pool.begin(), pool.end(), i));
  }
  out.packed_value = inst.value(ItemSet(std::vector<ItemIndex>(out.packed)));
  return out;
}

inline RefSolution ref_mgreedy(const Instance& inst, Size gamma) {
  const RefGreedy g = ref_greedy(inst, gamma);
  if (g.overflow && definitely_greater(inst.value(ItemSet{*g.overflow}), g.packed_value)) {
    return ref_eval(inst, {*g.overflow});
  }
  return ref_eval(inst, g.packed);
}

inline RefSolution ref_agreedy(const Instance& inst, Size gamma) {
  const RefGreedy g = ref_greedy(inst, gamma);
  if (g.overflow) {
    std::vector<ItemIndex> with = g.packed;
    with.push_back(*g.overflow);
    const double marginal = ref_eval(inst, with).value - g.packed_value;
    if (definitely_greater(marginal, g.packed_value)) return ref_eval(inst, {*g.overflow});
  }
  return ref_eval(inst, g.packed);
}

// Literal indispensability test: greedy at capacity s(item) over items no
// larger than it; true iff the item overflows first, behind a nonempty
// prefix whose value its marginal exceeds.
inline std::optional<std::vector<ItemIndex>> ref_indispensable_prefix(const Instance& inst,
                                                                      ItemIndex item) {
  const RefGreedy g = ref_greedy(inst, inst.item_size(item));
  if (g.overflow != item || g.packed.empty()) return std::nullopt;
  std::vector<ItemIndex> with = g.packed;
  with.push_back(item);
  if (!definitely_greater(ref_eval(inst, with).value - g.packed_value, g.packed_value)) {
    return std::nullopt;
  }
  return g.packed;
}

struct RefStart {
  ItemIndex item;
  std::vector<ItemIndex> prefix;
};

inline std::vector<RefStart> ref_start_list(const Instance& inst) {
  std::vector<ItemIndex> by_size(inst.size());
  for (ItemIndex i = 0; i < inst.size(); ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(), [&](ItemIndex x, ItemIndex y) {
    return inst.item_size(x) < inst.item_size(y);
  });
  std::vector<RefStart> list;
  for (ItemIndex i : by_size) {
    if (!list.empty() && inst.item_size(list.back().item) >= inst.item_size(i)) continue;
    if (auto prefix = ref_indispensable_prefix(inst, i)) {
      list.push_back({i, *prefix});
    } else if (!list.empty()) {
      const RefGreedy g = ref_greedy(inst, inst.item_size(i));
      const ItemIndex head = g.packed.empty() ? *g.overflow : g.packed.front();
      if (head == i) list.push_back({i, {}});
    }
  }
  return list;
}

// The robust policy with direct capacity comparisons.
inline RefSolution ref_policy(const Instance& inst, Size gamma) {
  const std::vector<RefStart> list = ref_start_list(inst);
  std::vector<ItemIndex> pool(inst.size());
  for (ItemIndex i = 0; i < inst.size(); ++i) pool[i] = i;
  std::vector<ItemIndex> packed;
  Size used = 0;
  auto drop_at_least = [&](Size s) {
    std::erase_if(pool, [&](ItemIndex j) { return inst.item_size(j) >= s; });
  };
  auto drop = [&](ItemIndex j) { std::erase(pool, j); };

  for (auto it = list.rbegin(); it != list.rend(); ++it) {
    if (inst.item_size(it->item) <= gamma) {
      packed.push_back(it->item);
      used = inst.item_size(it->item);
      drop(it->item);
      for (ItemIndex p : it->prefix) {
        if (used + inst.item_size(p) <= gamma) {
          packed.push_back(p);
          used += inst.item_size(p);
        }
        drop(p);
      }
      break;
    }
    drop_at_least(inst.item_size(it->item));
  }
  while (!pool.empty()) {
    const ItemIndex i = *ref_densest(inst, packed, pool);
    if (used + inst.item_size(i) <= gamma) {
      packed.push_back(i);
      used += inst.item_size(i);
      drop(i);
    } else {
      drop_at_least(inst.item_size(i));
    }
  }
  return ref_eval(inst, packed);
}

inline double ref_curvature(const Instance& inst) {
  std::vector<ItemIndex> all(inst.size());
  for (ItemIndex i = 0; i < inst.size(); ++i) all[i] = i;
  const double f_all = inst.value(ItemSet(all));
  double min_ratio = 1.0;
  for (ItemIndex j = 0; j < inst.size(); ++j) {
    std::vector<ItemIndex> rest;
    for (ItemIndex i : all) {
      if (i != j) rest.push_back(i);
    }
    min_ratio = std::min(min_ratio, (f_all - inst.value(ItemSet(rest))) /
                                        inst.value(ItemSet{j}));
  }
  return 1.0 - min_ratio;
}

// Subset sums by reachability table.
inline std::vector<Size> ref_breakpoints(const Instance& inst) {
  Size total = 0;
  for (ItemIndex i = 0; i < inst.size(); ++i) total += inst.item_size(i);
  std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
  reach[0] = true;
  for (ItemIndex i = 0; i < inst.size(); ++i) {
    for (Size s = total; s >= inst.item_size(i); --s) {
      if (reach[s - inst.item_size(i)]) reach[s] = true;
    }
  }
  std::vector<Size> out;
  for (Size s = 1; s <= total; ++s) {
    if (reach[s]) out.push_back(s);
  }
  return out;
}

// Root of the curvature bound equation via TOMS 748 rather than bisection.
inline double ref_alpha(double c) {
  if (c == 0.0) return 0.5;
  auto h = [c](double z) { return -std::expm1(-c * z) / c - (1 - z) / (2 - (2 - c) * z); };
  boost::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      h, 0.0, 1.0, boost::math::tools::eps_tolerance<double>(50), iters);
  const double x = 0.5 * (lo + hi);
  return (1 - x) / (2 - (2 - c) * x);
}

}  // namespace subknap::testing

#endif  // SUBKNAP_TESTS_SUPPORT_REFERENCE_H_
