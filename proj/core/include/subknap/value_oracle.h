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

#ifndef SUBKNAP_VALUE_ORACLE_H_
#define SUBKNAP_VALUE_ORACLE_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subknap/item_set.h"

namespace subknap {

enum class OracleKind { kModular, kCoverage, kConcaveModular, kTable };

std::string_view to_string(OracleKind kind);
std::optional<OracleKind> parse_oracle_kind(std::string_view name);

// Tables hold 2^n values, so they are limited to this many items.
inline constexpr std::size_t kMaxTableItems = 22;

// Parameters are stored against the oracle's domain, i.e. indexed by the
// position of the item id in domain().
struct ModularParams {
  std::vector<double> weights;
};

struct CoverageParams {
  std::vector<std::string> elements;  // ascending
  std::vector<double> element_weights;
  std::vector<std::vector<std::size_t>> covers;  // per item, element indices
};

struct ConcaveModularParams {
  std::vector<double> weights;
  double exponent = 1.0;
};

struct TableParams {
  std::vector<double> values;  // indexed by subset mask over the domain
};

using OracleParams =
    std::variant<ModularParams, CoverageParams, ConcaveModularParams, TableParams>;

// Immutable monotone submodular set function over a finite domain of item
// ids. Copies share state; evaluate() is safe for concurrent callers.
class ValueOracle {
 public:
  OracleKind kind() const;
  // Item ids in ascending order. ItemSet indices refer to this order.
  const std::vector<std::string>& domain() const;
  std::size_t domain_size() const { return domain().size(); }
  const OracleParams& params() const;

  // Throws UsageError when the set references an index outside the domain.
  double evaluate(const ItemSet& set) const;
  double evaluate(std::span<const std::string> ids) const;

  // Maps ids to domain indices; UsageError on an unknown id.
  ItemSet to_item_set(std::span<const std::string> ids) const;

  // Same function restricted to the kept items, re-indexed over the
  // smaller domain.
  ValueOracle restricted_to(const ItemSet& keep) const;

 private:
  struct State;
  explicit ValueOracle(std::shared_ptr<const State> state);

  friend ValueOracle make_modular_oracle(const std::map<std::string, double>&);
  friend ValueOracle make_coverage_oracle(
      const std::map<std::string, double>&,
      const std::map<std::string, std::vector<std::string>>&);
  friend ValueOracle make_concave_modular_oracle(
      const std::map<std::string, double>&, double);
  friend ValueOracle make_table_oracle(
      const std::map<std::vector<std::string>, double>&);

  std::shared_ptr<const State> state_;
};

// f(S) = sum of weights.
ValueOracle make_modular_oracle(const std::map<std::string, double>& weights);

// f(S) = total weight of the elements covered by S.
ValueOracle make_coverage_oracle(
    const std::map<std::string, double>& element_weights,
    const std::map<std::string, std::vector<std::string>>& covers);

// f(S) = (sum of weights)^exponent, exponent in (0, 1].
ValueOracle make_concave_modular_oracle(
    const std::map<std::string, double>& weights, double exponent);

// Explicit lookup table. Keys are id lists (any order); all 2^n subsets of
// the ids that appear must be present and the empty set must map to 0.
// Submodularity is not checked here; Instance runs validate_oracle.
ValueOracle make_table_oracle(
    const std::map<std::vector<std::string>, double>& values);

}  // namespace subknap

#endif  // SUBKNAP_VALUE_ORACLE_H_
