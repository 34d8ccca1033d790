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

#include "subknap/value_oracle.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "subknap/errors.h"

namespace subknap {

struct ValueOracle::State {
  OracleKind kind;
  std::vector<std::string> domain;
  OracleParams params;
};

namespace {

void check_weight(const std::string& what, const std::string& id, double w) {
  if (!std::isfinite(w) || w < 0.0) {
    std::ostringstream msg;
    msg << what << " for '" << id << "' must be finite and nonnegative, got " << w;
    throw ConfigurationError(msg.str());
  }
}

std::vector<std::string> keys_of(const std::map<std::string, double>& m) {
  std::vector<std::string> keys;
  keys.reserve(m.size());
  for (const auto& [k, v] : m) keys.push_back(k);
  return keys;
}

std::vector<double> values_of(const std::map<std::string, double>& m,
                              const char* what) {
  std::vector<double> values;
  values.reserve(m.size());
  for (const auto& [k, v] : m) {
    check_weight(what, k, v);
    values.push_back(v);
  }
  return values;
}

std::size_t index_in(const std::vector<std::string>& sorted, std::string_view id) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
  if (it == sorted.end() || *it != id) return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

struct Evaluator {
  const ItemSet& set;

  double operator()(const ModularParams& p) const {
    double sum = 0.0;
    for (ItemIndex i : set) sum += p.weights[i];
    return sum;
  }

  double operator()(const CoverageParams& p) const {
    std::vector<char> covered(p.elements.size(), 0);
    for (ItemIndex i : set) {
      for (std::size_t e : p.covers[i]) covered[e] = 1;
    }
    double sum = 0.0;
    for (std::size_t e = 0; e < covered.size(); ++e) {
      if (covered[e]) sum += p.element_weights[e];
    }
    return sum;
  }

  double operator()(const ConcaveModularParams& p) const {
    if (set.empty()) return 0.0;
    double sum = 0.0;
    for (ItemIndex i : set) sum += p.weights[i];
    if (p.exponent == 1.0) return sum;
    return std::pow(sum, p.exponent);
  }

  double operator()(const TableParams& p) const { return p.values[set.mask()]; }
};

}  // namespace

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::kModular:
      return "modular";
    case OracleKind::kCoverage:
      return "coverage";
    case OracleKind::kConcaveModular:
      return "concave_modular";
    case OracleKind::kTable:
      return "table";
  }
  return "unknown";
}

std::optional<OracleKind> parse_oracle_kind(std::string_view name) {
  for (OracleKind k : {OracleKind::kModular, OracleKind::kCoverage,
                       OracleKind::kConcaveModular, OracleKind::kTable}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ValueOracle::ValueOracle(std::shared_ptr<const State> state)
    : state_(std::move(state)) {}

OracleKind ValueOracle::kind() const { return state_->kind; }

const std::vector<std::string>& ValueOracle::domain() const {
  return state_->domain;
}

const OracleParams& ValueOracle::params() const { return state_->params; }

double ValueOracle::evaluate(const ItemSet& set) const {
  if (!set.empty() && *std::prev(set.end()) >= state_->domain.size()) {
    throw UsageError("evaluate: item index outside the oracle domain");
  }
  return std::visit(Evaluator{set}, state_->params);
}

double ValueOracle::evaluate(std::span<const std::string> ids) const {
  return evaluate(to_item_set(ids));
}

ItemSet ValueOracle::to_item_set(std::span<const std::string> ids) const {
  std::vector<ItemIndex> members;
  members.reserve(ids.size());
  for (const auto& id : ids) {
    std::size_t i = index_in(state_->domain, id);
    if (i == state_->domain.size()) {
      throw UsageError("unknown item id '" + id + "'");
    }
    members.push_back(i);
  }
  return ItemSet(std::move(members));
}

ValueOracle ValueOracle::restricted_to(const ItemSet& keep) const {
  const auto& old_domain = state_->domain;
  std::vector<std::string> domain;
  for (ItemIndex i : keep) {
    if (i >= old_domain.size()) {
      throw UsageError("restricted_to: index outside the oracle domain");
    }
    domain.push_back(old_domain[i]);
  }
  auto pick = [&](const std::vector<double>& w) {
    std::vector<double> out;
    for (ItemIndex i : keep) out.push_back(w[i]);
    return out;
  };
  OracleParams params = std::visit(
      [&](const auto& p) -> OracleParams {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ModularParams>) {
          return ModularParams{pick(p.weights)};
        } else if constexpr (std::is_same_v<T, ConcaveModularParams>) {
          return ConcaveModularParams{pick(p.weights), p.exponent};
        } else if constexpr (std::is_same_v<T, CoverageParams>) {
          CoverageParams out{p.elements, p.element_weights, {}};
          for (ItemIndex i : keep) out.covers.push_back(p.covers[i]);
          return out;
        } else {
          const std::size_t n = domain.size();
          TableParams out;
          out.values.resize(std::size_t{1} << n);
          for (std::uint64_t mask = 0; mask < out.values.size(); ++mask) {
            std::uint64_t old_mask = 0;
            for (std::size_t b = 0; b < n; ++b) {
              if (mask >> b & 1) old_mask |= std::uint64_t{1} << keep.members()[b];
            }
            out.values[mask] = p.values[old_mask];
          }
          return out;
        }
      },
      state_->params);
  return ValueOracle(std::make_shared<const State>(
      State{state_->kind, std::move(domain), std::move(params)}));
}

ValueOracle make_modular_oracle(const std::map<std::string, double>& weights) {
  return ValueOracle(std::make_shared<const ValueOracle::State>(
      ValueOracle::State{OracleKind::kModular, keys_of(weights),
                         ModularParams{values_of(weights, "weight")}}));
}

ValueOracle make_coverage_oracle(
    const std::map<std::string, double>& element_weights,
    const std::map<std::string, std::vector<std::string>>& covers) {
  CoverageParams params;
  params.elements = keys_of(element_weights);
  params.element_weights = values_of(element_weights, "element weight");
  std::vector<std::string> domain;
  for (const auto& [id, elements] : covers) {
    domain.push_back(id);
    std::vector<std::size_t> indices;
    for (const auto& e : elements) {
      std::size_t idx = index_in(params.elements, e);
      if (idx == params.elements.size()) {
        throw ConfigurationError("cover of '" + id + "' references unknown element '" +
                                 e + "'");
      }
      indices.push_back(idx);
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    params.covers.push_back(std::move(indices));
  }
  return ValueOracle(std::make_shared<const ValueOracle::State>(ValueOracle::State{
      OracleKind::kCoverage, std::move(domain), std::move(params)}));
}

ValueOracle make_concave_modular_oracle(const std::map<std::string, double>& weights,
                                        double exponent) {
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    std::ostringstream msg;
    msg << "concave_modular exponent must lie in (0, 1], got " << exponent;
    throw ConfigurationError(msg.str());
  }
  return ValueOracle(std::make_shared<const ValueOracle::State>(ValueOracle::State{
      OracleKind::kConcaveModular, keys_of(weights),
      ConcaveModularParams{values_of(weights, "weight"), exponent}}));
}

ValueOracle make_table_oracle(const std::map<std::vector<std::string>, double>& values) {
  std::set<std::string> ids;
  for (const auto& [key, v] : values) ids.insert(key.begin(), key.end());
  std::vector<std::string> domain(ids.begin(), ids.end());
  const std::size_t n = domain.size();
  if (n > kMaxTableItems) {
    throw ConfigurationError("table oracle supports at most " +
                             std::to_string(kMaxTableItems) + " items");
  }

  const std::size_t count = std::size_t{1} << n;
  TableParams params;
  params.values.assign(count, 0.0);
  std::vector<char> seen(count, 0);
  for (const auto& [key, v] : values) {
    std::uint64_t mask = 0;
    for (const auto& id : key) {
      std::uint64_t bit = std::uint64_t{1} << index_in(domain, id);
      if (mask & bit) {
        throw ConfigurationError("table key repeats item '" + id + "'");
      }
      mask |= bit;
    }
    if (seen[mask]) throw ConfigurationError("table lists a subset twice");
    if (!std::isfinite(v) || v < 0.0) {
      throw ConfigurationError("table values must be finite and nonnegative");
    }
    seen[mask] = 1;
    params.values[mask] = v;
  }
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (!seen[mask]) {
      std::string key;
      for (ItemIndex i : ItemSet::from_mask(mask)) {
        if (!key.empty()) key += ',';
        key += domain[i];
      }
      throw ConfigurationError("table is missing subset {" + key + "}");
    }
  }
  if (params.values[0] != 0.0) {
    throw ConfigurationError("table must map the empty set to 0");
  }
  return ValueOracle(std::make_shared<const ValueOracle::State>(
      ValueOracle::State{OracleKind::kTable, std::move(domain), std::move(params)}));
}

}  // namespace subknap
