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

#ifndef SUBKNAP_VALIDATION_H_
#define SUBKNAP_VALIDATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subknap/item_set.h"

namespace subknap {

class Instance;

// Instances up to this size are checked over every (A, u1, u2) triple.
inline constexpr std::size_t kMaxExhaustiveValidationItems = 12;

struct OracleViolation {
  std::string property;  // "normalized", "monotone" or "submodular"
  ItemSet base;          // A
  std::vector<ItemIndex> items;  // u (monotone) or u1, u2 (submodular)
  double slack = 0.0;    // amount by which the inequality fails, > 0
};

struct ValidationReport {
  bool normalized = true;
  bool monotone = true;
  bool submodular = true;
  bool exhaustive = true;  // false: randomized sampling was used
  std::int64_t checks = 0;
  std::optional<OracleViolation> first_violation;

  bool ok() const { return normalized && monotone && submodular; }
};

struct ValidationOptions {
  std::uint64_t seed = 0;
  std::int64_t samples = 200000;  // sampled mode only
};

// Checks f(empty) = 0, monotonicity, and
//   f(A + u1) + f(A + u2) >= f(A + u1 + u2) + f(A)
// for all A and u1 != u2 outside A (n <= 12), or on random triples.
ValidationReport validate_oracle(const Instance& instance,
                                 const ValidationOptions& options = {});

std::string describe(const Instance& instance, const OracleViolation& violation);

}  // namespace subknap

#endif  // SUBKNAP_VALIDATION_H_
