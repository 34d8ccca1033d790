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

#include "subknap/generator.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "json_codec.h"
#include "subknap/errors.h"
#include "subknap/random.h"
#include "subknap/robust_policy.h"

namespace subknap {
namespace {

constexpr int kMaxItems = 1000;

double draw_weight(Rng& rng) { return static_cast<double>(rng.between(1, 100)) / 10.0; }

std::string item_id(int i, int n) {
  const int width = std::max(2, static_cast<int>(std::to_string(n - 1).size()));
  std::string digits = std::to_string(i);
  return "i" + std::string(width - digits.size(), '0') + digits;
}

std::string element_id(int e, int count) {
  std::string id = item_id(e, count);
  id[0] = 'e';
  return id;
}

void check_spec(const GeneratorSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxItems) {
    throw ConfigurationError("n must lie in [1, " + std::to_string(kMaxItems) + "]");
  }
  if (spec.size_max < 1) throw ConfigurationError("size_max must be >= 1");
  if (spec.elements < 0) throw ConfigurationError("elements must be >= 0");
  if (!(spec.density > 0.0 && spec.density <= 1.0)) {
    throw ConfigurationError("density must lie in (0, 1]");
  }
  if (!(spec.exponent > 0.0 && spec.exponent <= 1.0)) {
    throw ConfigurationError("exponent must lie in (0, 1]");
  }
  if (spec.kind == GeneratorKind::kPlanted) {
    if (spec.n < 2) throw ConfigurationError("planted instances need n >= 2");
    if (spec.size_max < 3) throw ConfigurationError("planted instances need size_max >= 3");
  }
}

// Each item covers every element with probability `density`, and at least
// one element.
void draw_covers(Rng& rng, const std::vector<std::string>& ids, int first, int element_count,
                 double density, std::map<std::string, std::vector<std::string>>& covers) {
  for (std::size_t i = first; i < ids.size(); ++i) {
    auto& list = covers[ids[i]];
    for (int e = 0; e < element_count; ++e) {
      if (rng.chance(density)) list.push_back(element_id(e, element_count));
    }
    if (list.empty()) {
      list.push_back(element_id(static_cast<int>(rng.below(element_count)), element_count));
    }
  }
}

Instance draw_instance(const GeneratorSpec& spec, Rng& rng) {
  std::vector<std::string> ids;
  for (int i = 0; i < spec.n; ++i) ids.push_back(item_id(i, spec.n));
  const int element_count = spec.elements > 0 ? spec.elements : spec.n + 2;

  std::vector<Item> items;
  switch (spec.kind) {
    case GeneratorKind::kModular:
    case GeneratorKind::kConcaveModular: {
      std::map<std::string, double> weights;
      for (const auto& id : ids) {
        items.push_back({id, rng.between(1, spec.size_max)});
        weights[id] = draw_weight(rng);
      }
      return Instance(std::move(items),
                      spec.kind == GeneratorKind::kModular
                          ? make_modular_oracle(weights)
                          : make_concave_modular_oracle(weights, spec.exponent));
    }
    case GeneratorKind::kCoverage: {
      std::map<std::string, double> elements;
      for (int e = 0; e < element_count; ++e) {
        elements[element_id(e, element_count)] = draw_weight(rng);
      }
      std::map<std::string, std::vector<std::string>> covers;
      for (const auto& id : ids) items.push_back({id, rng.between(1, spec.size_max)});
      draw_covers(rng, ids, 0, element_count, spec.density, covers);
      return Instance(std::move(items), make_coverage_oracle(elements, covers));
    }
    case GeneratorKind::kPlanted: {
      // Core: i00 (size a, density d0) and i01 (size b > 2a, density 0.9 d0),
      // so the large item is next in line and its value exceeds the small one.
      const Size a = rng.between(1, std::max<Size>(1, (spec.size_max - 1) / 2));
      const Size b = rng.between(2 * a + 1, spec.size_max);
      const double d0 = 10.0 + draw_weight(rng);
      const double w0 = std::round(d0 * static_cast<double>(a) * 100.0) / 100.0;
      const double w1 = std::round(0.9 * d0 * static_cast<double>(b) * 100.0) / 100.0;

      std::map<std::string, double> elements = {{"core0", w0}, {"core1", w1}};
      for (int e = 0; e < element_count; ++e) {
        elements[element_id(e, element_count)] = draw_weight(rng);
      }
      std::map<std::string, std::vector<std::string>> covers = {{ids[0], {"core0"}},
                                                                {ids[1], {"core1"}}};
      items.push_back({ids[0], a});
      items.push_back({ids[1], b});
      for (std::size_t i = 2; i < ids.size(); ++i) {
        items.push_back({ids[i], rng.between(1, spec.size_max)});
      }
      draw_covers(rng, ids, 2, element_count, spec.density, covers);
      return Instance(std::move(items), make_coverage_oracle(elements, covers));
    }
  }
  throw ConfigurationError("unknown generator kind");
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kModular: return "modular";
    case GeneratorKind::kCoverage: return "coverage";
    case GeneratorKind::kConcaveModular: return "concave_modular";
    case GeneratorKind::kPlanted: return "planted";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (auto kind : {GeneratorKind::kModular, GeneratorKind::kCoverage,
                    GeneratorKind::kConcaveModular, GeneratorKind::kPlanted}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

GeneratedInstance generate_instance(const GeneratorSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  int attempts = 1;
  Instance instance = draw_instance(spec, rng);
  if (spec.kind == GeneratorKind::kPlanted) {
    while (!is_indispensable(instance, 1).indispensable) {
      if (attempts == kMaxPlantAttempts) {
        throw ConfigurationError("planting an indispensable item failed after " +
                                 std::to_string(kMaxPlantAttempts) + " attempts");
      }
      ++attempts;
      instance = draw_instance(spec, rng);
    }
  }

  nlohmann::json doc = internal::instance_to_json_value(instance);
  nlohmann::json header = {{"algorithm", std::string(Rng::kAlgorithm)},
                           {"kind", std::string(to_string(spec.kind))},
                           {"n", spec.n},
                           {"size_max", spec.size_max},
                           {"seed", spec.seed},
                           {"attempts", attempts}};
  if (spec.kind == GeneratorKind::kCoverage || spec.kind == GeneratorKind::kPlanted) {
    header["elements"] = spec.elements > 0 ? spec.elements : spec.n + 2;
    header["density"] = spec.density;
  }
  if (spec.kind == GeneratorKind::kConcaveModular) header["exponent"] = spec.exponent;
  doc["generator"] = header;
  return {std::move(instance), doc.dump(2) + "\n", attempts};
}

}  // namespace subknap
