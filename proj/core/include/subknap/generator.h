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

#ifndef SUBKNAP_GENERATOR_H_
#define SUBKNAP_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "subknap/instance.h"

namespace subknap {

enum class GeneratorKind { kModular, kCoverage, kConcaveModular, kPlanted };

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

// Seeded synthetic instances. Ids are "i00", "i01", ... so that id order
// matches creation order. Weights are drawn from {0.1, 0.2, ..., 10.0} and
// sizes from {1, ..., size_max}.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kModular;
  int n = 6;
  Size size_max = 10;
  std::uint64_t seed = 0;
  int elements = 0;        // coverage / planted ground elements; 0 means n + 2
  double density = 0.3;    // coverage: probability an item covers an element
  double exponent = 0.5;   // concave_modular
};

// Attempts a planted instance gets before generation gives up.
inline constexpr int kMaxPlantAttempts = 100;

struct GeneratedInstance {
  Instance instance;
  // Canonical instance file with a "generator" header describing the spec.
  std::string json;
  int attempts = 1;
};

// Planted instances have a coverage core: a small dense item and a large
// item whose marginal exceeds the small item's value, padded with fillers
// over separate elements. The large item is checked with is_indispensable
// and the draw repeats up to kMaxPlantAttempts times.
//
// ConfigurationError on an invalid spec or when planting keeps failing.
GeneratedInstance generate_instance(const GeneratorSpec& spec);

}  // namespace subknap

#endif  // SUBKNAP_GENERATOR_H_
