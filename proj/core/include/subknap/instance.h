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

#ifndef SUBKNAP_INSTANCE_H_
#define SUBKNAP_INSTANCE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subknap/item_set.h"
#include "subknap/numeric.h"
#include "subknap/value_oracle.h"

namespace subknap {

struct Item {
  std::string id;
  Size size = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

// Items with integer sizes plus a value oracle over exactly their ids.
// Immutable; items are kept in ascending id order.
class Instance {
 public:
  // Throws ConfigurationError on duplicate ids, sizes < 1, or an oracle
  // whose domain differs from the item ids. Table oracles are validated
  // here (see oracle_valid()).
  Instance(std::vector<Item> items, ValueOracle oracle);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Item>& items() const { return items_; }
  const Item& item(ItemIndex i) const { return items_.at(i); }
  const std::string& id(ItemIndex i) const { return items_.at(i).id; }
  Size item_size(ItemIndex i) const { return items_.at(i).size; }
  const ValueOracle& oracle() const { return oracle_; }

  // UsageError on unknown id.
  ItemIndex index_of(std::string_view id) const;
  ItemSet to_item_set(std::span<const std::string> ids) const;
  std::vector<std::string> ids_of(const ItemSet& set) const;
  // "{a,b}"
  std::string describe(const ItemSet& set) const;

  ItemSet all_items() const;
  double value(const ItemSet& set) const { return oracle_.evaluate(set); }
  double singleton_value(ItemIndex i) const { return singletons_.at(i); }
  Size total_size(const ItemSet& set) const;
  Size total_size() const { return total_size_; }

  // False only for table oracles that fail validate_oracle.
  bool oracle_valid() const { return oracle_valid_; }
  // Every singleton value is strictly positive.
  bool normalized() const { return normalized_; }

  // Throws UsageError unless oracle_valid(), PreconditionError unless
  // normalized(). Called by the algorithm entry points.
  void require_algorithm_ready(std::string_view caller) const;

 private:
  std::vector<Item> items_;
  ValueOracle oracle_;
  std::vector<double> singletons_;
  Size total_size_ = 0;
  bool oracle_valid_ = true;
  bool normalized_ = true;
};

// Drops every item whose singleton value is zero.
Instance normalize_instance(const Instance& instance);

// c = 1 - min_j (f(N) - f(N \ {j})) / f({j}). Requires a normalized,
// nonempty instance (PreconditionError otherwise). Values outside [0, 1]
// by at most 1e-9 are clamped; larger excursions raise ValidationError.
double curvature(const Instance& instance);

}  // namespace subknap

#endif  // SUBKNAP_INSTANCE_H_
