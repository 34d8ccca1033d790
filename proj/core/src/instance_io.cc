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

#include "subknap/instance_io.h"

#include <fstream>
#include <sstream>

#include "json_codec.h"
#include "subknap/errors.h"

namespace subknap {
namespace internal {
namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ConfigurationError(std::string(where) + ": missing field '" + key + "'");
  }
  return *it;
}

std::map<std::string, double> weight_map(const json& obj, const char* where) {
  if (!obj.is_object()) throw ConfigurationError(std::string(where) + " must be an object");
  std::map<std::string, double> out;
  for (const auto& [k, v] : obj.items()) {
    if (!v.is_number()) {
      throw ConfigurationError(std::string(where) + "['" + k + "'] must be a number");
    }
    out[k] = v.get<double>();
  }
  return out;
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> ids;
  if (key.empty()) return ids;
  std::string part;
  std::istringstream in(key);
  while (std::getline(in, part, ',')) {
    if (part.empty()) throw ConfigurationError("table key '" + key + "' has an empty id");
    ids.push_back(part);
  }
  if (key.back() == ',') throw ConfigurationError("table key '" + key + "' has an empty id");
  return ids;
}

ValueOracle objective_from_json(const json& obj) {
  if (!obj.is_object()) throw ConfigurationError("objective must be an object");
  const json& kind_field = require(obj, "kind", "objective");
  if (!kind_field.is_string()) throw ConfigurationError("objective.kind must be a string");
  const auto kind = parse_oracle_kind(kind_field.get<std::string>());
  if (!kind) {
    throw ConfigurationError("unknown objective kind '" + kind_field.get<std::string>() +
                             "'");
  }
  switch (*kind) {
    case OracleKind::kModular:
      return make_modular_oracle(weight_map(require(obj, "weights", "objective"), "weights"));
    case OracleKind::kConcaveModular: {
      const json& e = require(obj, "exponent", "objective");
      if (!e.is_number()) throw ConfigurationError("exponent must be a number");
      return make_concave_modular_oracle(
          weight_map(require(obj, "weights", "objective"), "weights"), e.get<double>());
    }
    case OracleKind::kCoverage: {
      auto elements = weight_map(require(obj, "elements", "objective"), "elements");
      const json& covers_json = require(obj, "covers", "objective");
      if (!covers_json.is_object()) throw ConfigurationError("covers must be an object");
      std::map<std::string, std::vector<std::string>> covers;
      for (const auto& [id, list] : covers_json.items()) {
        if (!list.is_array()) {
          throw ConfigurationError("covers['" + id + "'] must be an array");
        }
        for (const auto& e : list) {
          if (!e.is_string()) {
            throw ConfigurationError("covers['" + id + "'] must list element names");
          }
          covers[id].push_back(e.get<std::string>());
        }
        covers.try_emplace(id);
      }
      return make_coverage_oracle(elements, covers);
    }
    case OracleKind::kTable: {
      const json& values_json = require(obj, "values", "objective");
      if (!values_json.is_object()) throw ConfigurationError("values must be an object");
      std::map<std::vector<std::string>, double> values;
      for (const auto& [key, v] : values_json.items()) {
        if (!v.is_number()) {
          throw ConfigurationError("values['" + key + "'] must be a number");
        }
        auto ids = split_key(key);
        std::sort(ids.begin(), ids.end());
        if (!values.emplace(std::move(ids), v.get<double>()).second) {
          throw ConfigurationError("table lists subset '" + key + "' twice");
        }
      }
      return make_table_oracle(values);
    }
  }
  throw ConfigurationError("unsupported objective kind");
}

json objective_to_json(const ValueOracle& oracle) {
  const auto& domain = oracle.domain();
  json obj;
  obj["kind"] = std::string(to_string(oracle.kind()));
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ModularParams> ||
                      std::is_same_v<T, ConcaveModularParams>) {
          json weights = json::object();
          for (std::size_t i = 0; i < domain.size(); ++i) weights[domain[i]] = p.weights[i];
          obj["weights"] = weights;
          if constexpr (std::is_same_v<T, ConcaveModularParams>) obj["exponent"] = p.exponent;
        } else if constexpr (std::is_same_v<T, CoverageParams>) {
          json elements = json::object();
          for (std::size_t e = 0; e < p.elements.size(); ++e) {
            elements[p.elements[e]] = p.element_weights[e];
          }
          json covers = json::object();
          for (std::size_t i = 0; i < domain.size(); ++i) {
            json list = json::array();
            for (std::size_t e : p.covers[i]) list.push_back(p.elements[e]);
            covers[domain[i]] = list;
          }
          obj["elements"] = elements;
          obj["covers"] = covers;
        } else {
          json values = json::object();
          for (std::uint64_t mask = 0; mask < p.values.size(); ++mask) {
            std::string key;
            for (ItemIndex i : ItemSet::from_mask(mask)) {
              if (!key.empty()) key += ',';
              key += domain[i];
            }
            values[key] = p.values[mask];
          }
          obj["values"] = values;
        }
      },
      oracle.params());
  return obj;
}

}  // namespace

json instance_to_json_value(const Instance& instance) {
  json items = json::array();
  for (const auto& item : instance.items()) {
    items.push_back({{"id", item.id}, {"size", item.size}});
  }
  return {{"items", items}, {"objective", objective_to_json(instance.oracle())}};
}

Instance instance_from_json_value(const json& doc) {
  if (!doc.is_object()) throw ConfigurationError("instance must be a JSON object");
  const json& items_json = require(doc, "items", "instance");
  if (!items_json.is_array()) throw ConfigurationError("items must be an array");
  std::vector<Item> items;
  for (const auto& entry : items_json) {
    if (!entry.is_object()) throw ConfigurationError("each item must be an object");
    const json& id = require(entry, "id", "item");
    const json& size = require(entry, "size", "item");
    if (!id.is_string()) throw ConfigurationError("item id must be a string");
    if (!size.is_number_integer()) {
      throw ConfigurationError("size of item '" + id.get<std::string>() +
                               "' must be an integer");
    }
    items.push_back({id.get<std::string>(), size.get<Size>()});
  }
  return Instance(std::move(items), objective_from_json(require(doc, "objective", "instance")));
}

}  // namespace internal

Instance parse_instance_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("malformed instance JSON: ") + e.what());
  }
  try {
    return internal::instance_from_json_value(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("malformed instance: ") + e.what());
  }
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string instance_to_json(const Instance& instance) {
  return internal::instance_to_json_value(instance).dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace subknap
