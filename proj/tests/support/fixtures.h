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

#ifndef SUBKNAP_TESTS_SUPPORT_FIXTURES_H_
#define SUBKNAP_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "subknap/generator.h"
#include "subknap/instance.h"
#include "subknap/value_oracle.h"

namespace subknap::testing {

// Modular; a(size 1, weight 1.0), b(size 2, weight 1.9).
inline Instance Ex1() {
  return Instance({{"a", 1}, {"b", 2}}, make_modular_oracle({{"a", 1.0}, {"b", 1.9}}));
}

// EX1 plus c(size 3, weight 10.0).
inline Instance Ex1WithC() {
  return Instance({{"a", 1}, {"b", 2}, {"c", 3}},
                  make_modular_oracle({{"a", 1.0}, {"b", 1.9}, {"c", 10.0}}));
}

// Coverage; 1(size 1) covers {x}, 2(size 3) covers {x, y}; x = y = 1.
inline Instance Ex2() {
  return Instance({{"1", 1}, {"2", 3}},
                  make_coverage_oracle({{"x", 1.0}, {"y", 1.0}},
                                       {{"1", {"x"}}, {"2", {"x", "y"}}}));
}

// Coverage; a(size 1) covers {x}, b(size 2) covers {x, y}; x = 1.0, y = 0.9.
inline Instance Ex3() {
  return Instance({{"a", 1}, {"b", 2}},
                  make_coverage_oracle({{"x", 1.0}, {"y", 0.9}},
                                       {{"a", {"x"}}, {"b", {"x", "y"}}}));
}

// Table over {a, b} with f({a}) = f({b}) = 1 and f({a, b}) = `ab`.
inline ValueOracle PairTable(double ab) {
  return make_table_oracle({{{}, 0.0}, {{"a"}, 1.0}, {{"b"}, 1.0}, {{"a", "b"}, ab}});
}

inline Instance PairTableInstance(double ab, Size size_a = 1, Size size_b = 1) {
  return Instance({{"a", size_a}, {"b", size_b}}, PairTable(ab));
}

// The acceptance corpus: 50 seeds per kind, n in [3, 10].
struct CorpusEntry {
  GeneratorSpec spec;
  Instance instance;
};

inline std::vector<CorpusEntry> Corpus(int per_kind = 50) {
  std::vector<CorpusEntry> out;
  for (auto kind : {GeneratorKind::kModular, GeneratorKind::kCoverage,
                    GeneratorKind::kConcaveModular, GeneratorKind::kPlanted}) {
    for (int s = 0; s < per_kind; ++s) {
      GeneratorSpec spec;
      spec.kind = kind;
      spec.n = 3 + s % 8;
      spec.size_max = 12;
      spec.seed = 1000 * static_cast<std::uint64_t>(kind) + static_cast<std::uint64_t>(s);
      spec.exponent = 0.25 + 0.15 * (s % 5);
      out.push_back({spec, generate_instance(spec).instance});
    }
  }
  return out;
}

}  // namespace subknap::testing

#endif  // SUBKNAP_TESTS_SUPPORT_FIXTURES_H_
