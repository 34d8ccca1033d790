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

#include "subknap/item_set.h"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>

namespace subknap {

ItemSet::ItemSet(std::initializer_list<ItemIndex> members)
    : ItemSet(std::vector<ItemIndex>(members)) {}

ItemSet::ItemSet(std::vector<ItemIndex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ItemSet ItemSet::from_mask(std::uint64_t mask) {
  ItemSet set;
  set.members_.reserve(std::popcount(mask));
  while (mask != 0) {
    set.members_.push_back(static_cast<ItemIndex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return set;
}

bool ItemSet::contains(ItemIndex item) const {
  return std::binary_search(members_.begin(), members_.end(), item);
}

bool ItemSet::insert(ItemIndex item) {
  auto it = std::lower_bound(members_.begin(), members_.end(), item);
  if (it != members_.end() && *it == item) return false;
  members_.insert(it, item);
  return true;
}

bool ItemSet::erase(ItemIndex item) {
  auto it = std::lower_bound(members_.begin(), members_.end(), item);
  if (it == members_.end() || *it != item) return false;
  members_.erase(it);
  return true;
}

ItemSet ItemSet::with(ItemIndex item) const {
  ItemSet copy = *this;
  copy.insert(item);
  return copy;
}

ItemSet ItemSet::without(ItemIndex item) const {
  ItemSet copy = *this;
  copy.erase(item);
  return copy;
}

std::uint64_t ItemSet::mask() const {
  std::uint64_t mask = 0;
  for (ItemIndex i : members_) {
    if (i >= 64) throw std::out_of_range("ItemSet::mask: index >= 64");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool ItemSet::is_subset_of(const ItemSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

ItemSet set_union(const ItemSet& a, const ItemSet& b) {
  std::vector<ItemIndex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ItemSet(std::move(out));
}

ItemSet set_intersection(const ItemSet& a, const ItemSet& b) {
  std::vector<ItemIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ItemSet(std::move(out));
}

ItemSet set_difference(const ItemSet& a, const ItemSet& b) {
  std::vector<ItemIndex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ItemSet(std::move(out));
}

}  // namespace subknap
