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

#ifndef SUBKNAP_BOUNDS_H_
#define SUBKNAP_BOUNDS_H_

#include <span>
#include <string>
#include <vector>

namespace subknap {

// Below this curvature the limit forms are used.
inline constexpr double kZeroCurvature = 1e-9;

// Bisection stops once the bracket is this narrow.
inline constexpr double kRootBracketWidth = 1e-12;

struct BoundResult {
  double c = 0.0;
  double x = 0.0;
  double alpha = 0.0;
};

// Unique root z in [0, 1] of (1/c)(1 - e^{-cz}) = (1 - z) / (2 - (2 - c) z).
// For c <= kZeroCurvature the left side tends to z and the root is 1/2.
// DomainError unless c lies in [0, 1].
double solve_x(double c);

// Curvature-dependent guarantee (1 - x) / (2 - (2 - c) x), x = solve_x(c).
double alpha(double c);

BoundResult bound_result(double c);

// Residual of the root equation at z, for diagnostics.
double bound_residual(double c, double z);

struct BoundTable {
  std::vector<BoundResult> rows;
  double kawase_deterministic = 0.0;  // 2 (1 - 1/e) / 21
  double modular_optimum = 0.5;
};

BoundTable bound_table(std::span<const double> c_grid);

// "c,x,alpha" rows followed by comment lines carrying the constants.
std::string bound_csv(const BoundTable& table);

}  // namespace subknap

#endif  // SUBKNAP_BOUNDS_H_
