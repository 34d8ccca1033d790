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

#include "subknap/instance.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "subknap/errors.h"
#include "subknap/validation.h"

namespace subknap {

Instance::Instance(std::vector<Item> items, ValueOracle oracle)
    : items_(std::move(items)), oracle_(std::move(oracle)) {
  std::sort(items_.begin(), items_.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].size < 1) {
      throw ConfigurationError("item '" + items_[i].id + "' must have size >= 1");
    }
    if (i > 0 && items_[i].id == items_[i - 1].id) {
      throw ConfigurationError("duplicate item id '" + items_[i].id + "'");
    }
    total_size_ += items_[i].size;
  }

  const auto& domain = oracle_.domain();
  std::vector<std::string> ids;
  ids.reserve(items_.size());
  for (const auto& item : items_) ids.push_back(item.id);
  if (ids != domain) {
    for (const auto& id : ids) {
      if (!std::binary_search(domain.begin(), domain.end(), id)) {
        throw ConfigurationError("objective has no definition for item '" + id + "'");
      }
    }
    for (const auto& id : domain) {
      if (!std::binary_search(ids.begin(), ids.end(), id)) {
        throw ConfigurationError("objective refers to unknown item '" + id + "'");
      }
    }
  }

  singletons_.reserve(items_.size());
  for (ItemIndex i = 0; i < items_.size(); ++i) {
    singletons_.push_back(oracle_.evaluate(ItemSet{i}));
    if (!(singletons_.back() > 0.0)) normalized_ = false;
  }

  if (oracle_.kind() == OracleKind::kTable) {
    oracle_valid_ = validate_oracle(*this).ok();
  }
}

ItemIndex Instance::index_of(std::string_view id) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), id,
                             [](const Item& a, std::string_view b) { return a.id < b; });
  if (it == items_.end() || it->id != id) {
    throw UsageError("unknown item id '" + std::string(id) + "'");
  }
  return static_cast<ItemIndex>(it - items_.begin());
}

ItemSet Instance::to_item_set(std::span<const std::string> ids) const {
  std::vector<ItemIndex> members;
  for (const auto& id : ids) members.push_back(index_of(id));
  return ItemSet(std::move(members));
}

std::vector<std::string> Instance::ids_of(const ItemSet& set) const {
  std::vector<std::string> out;
  for (ItemIndex i : set) out.push_back(id(i));
  return out;
}

std::string Instance::describe(const ItemSet& set) const {
  std::string out = "{";
  bool first = true;
  for (ItemIndex i : set) {
    if (!first) out += ',';
    out += id(i);
    first = false;
  }
  return out + "}";
}

ItemSet Instance::all_items() const {
  std::vector<ItemIndex> members(items_.size());
  for (ItemIndex i = 0; i < members.size(); ++i) members[i] = i;
  return ItemSet(std::move(members));
}

Size Instance::total_size(const ItemSet& set) const {
  Size total = 0;
  for (ItemIndex i : set) total += item_size(i);
  return total;
}

void Instance::require_algorithm_ready(std::string_view caller) const {
  if (!oracle_valid_) {
    throw UsageError(std::string(caller) +
                     ": objective failed monotone/submodular validation");
  }
  if (!normalized_) {
    throw PreconditionError(std::string(caller) +
                            ": instance has zero-valued items; run normalize_instance");
  }
}

Instance normalize_instance(const Instance& instance) {
  if (instance.normalized()) return instance;
  std::vector<ItemIndex> keep;
  std::vector<Item> items;
  for (ItemIndex i = 0; i < instance.size(); ++i) {
    if (instance.singleton_value(i) > 0.0) {
      keep.push_back(i);
      items.push_back(instance.item(i));
    }
  }
  return Instance(std::move(items), instance.oracle().restricted_to(ItemSet(keep)));
}

double curvature(const Instance& instance) {
  if (instance.empty()) {
    throw PreconditionError("curvature: instance has no items");
  }
  if (!instance.normalized()) {
    throw PreconditionError("curvature: zero-valued singleton; normalize first");
  }
  const ItemSet all = instance.all_items();
  const double f_all = instance.value(all);
  double min_ratio = 0.0;
  for (ItemIndex j = 0; j < instance.size(); ++j) {
    const double ratio =
        (f_all - instance.value(all.without(j))) / instance.singleton_value(j);
    if (j == 0 || ratio < min_ratio) min_ratio = ratio;
  }
  const double c = 1.0 - min_ratio;
  if (c < -kTolerance || c > 1.0 + kTolerance) {
    std::ostringstream msg;
    msg << "curvature " << c << " lies outside [0, 1]; objective is not monotone "
        << "submodular";
    throw ValidationError(msg.str());
  }
  // Rounding in f(N) - f(N \ {j}) leaves modular objectives a few ulps
  // away from zero.
  if (std::fabs(c) <= 1e-12) return 0.0;
  return std::clamp(c, 0.0, 1.0);
}

}  // namespace subknap
