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

#ifndef SUBKNAP_ITEM_SET_H_
#define SUBKNAP_ITEM_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace subknap {

// Position of an item in its instance. Instances keep items sorted by
// ascending id, so ascending index order is ascending id order.
using ItemIndex = std::size_t;

// Duplicate-free set of item indices, stored in ascending order.
class ItemSet {
 public:
  ItemSet() = default;
  ItemSet(std::initializer_list<ItemIndex> members);
  explicit ItemSet(std::vector<ItemIndex> members);

  // Members are the set bits of `mask` (bit i is item i).
  static ItemSet from_mask(std::uint64_t mask);

  bool contains(ItemIndex item) const;
  // Returns false when already present.
  bool insert(ItemIndex item);
  bool erase(ItemIndex item);

  ItemSet with(ItemIndex item) const;
  ItemSet without(ItemIndex item) const;

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  std::span<const ItemIndex> members() const { return members_; }

  // Requires every member < 64.
  std::uint64_t mask() const;

  bool is_subset_of(const ItemSet& other) const;

  friend bool operator==(const ItemSet&, const ItemSet&) = default;
  friend auto operator<=>(const ItemSet&, const ItemSet&) = default;

 private:
  std::vector<ItemIndex> members_;
};

ItemSet set_union(const ItemSet& a, const ItemSet& b);
ItemSet set_intersection(const ItemSet& a, const ItemSet& b);
ItemSet set_difference(const ItemSet& a, const ItemSet& b);

}  // namespace subknap

#endif  // SUBKNAP_ITEM_SET_H_
