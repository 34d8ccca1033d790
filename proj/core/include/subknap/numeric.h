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

#ifndef SUBKNAP_NUMERIC_H_
#define SUBKNAP_NUMERIC_H_

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace subknap {

// Item sizes and capacities are exact integers.
using Size = std::int64_t;

inline constexpr double kTolerance = 1e-9;

// Absolute tolerance 1e-9 scaled by max(1, |a|, |b|).
inline double tolerance_for(double a, double b) {
  return kTolerance * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// a > b beyond tolerance.
inline bool definitely_greater(double a, double b) {
  return a > b + tolerance_for(a, b);
}

// |a - b| within tolerance.
inline bool approx_equal(double a, double b) {
  return std::fabs(a - b) <= tolerance_for(a, b);
}

// Signed margin of "lhs >= rhs" in units of max(1, |lhs|, |rhs|); the
// inequality holds within tolerance iff the result is >= -kTolerance.
inline double scaled_margin(double lhs, double rhs) {
  return (lhs - rhs) / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

}  // namespace subknap

#endif  // SUBKNAP_NUMERIC_H_
