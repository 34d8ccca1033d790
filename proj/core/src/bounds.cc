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

#include "subknap/bounds.h"

#include <cmath>
#include <sstream>

#include "subknap/errors.h"
#include "subknap/format.h"

namespace subknap {
namespace {

void check_curvature_domain(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    std::ostringstream msg;
    msg << "curvature must lie in [0, 1], got " << c;
    throw DomainError(msg.str());
  }
}

double greedy_side(double c, double z) {
  if (c <= kZeroCurvature) return z;
  return -std::expm1(-c * z) / c;
}

double switch_side(double c, double z) { return (1.0 - z) / (2.0 - (2.0 - c) * z); }

}  // namespace

double bound_residual(double c, double z) { return greedy_side(c, z) - switch_side(c, z); }

double solve_x(double c) {
  check_curvature_domain(c);
  if (c <= kZeroCurvature) return 0.5;
  // The left side increases and the right side decreases in z, so the
  // residual changes sign exactly once: -1/2 at z = 0, (1 - e^{-c})/c at 1.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > kRootBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (bound_residual(c, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double alpha(double c) {
  const double x = solve_x(c);
  return switch_side(c, x);
}

BoundResult bound_result(double c) {
  const double x = solve_x(c);
  return {c, x, switch_side(c, x)};
}

BoundTable bound_table(std::span<const double> c_grid) {
  BoundTable table;
  for (double c : c_grid) table.rows.push_back(bound_result(c));
  table.kawase_deterministic = 2.0 * (1.0 - std::exp(-1.0)) / 21.0;
  table.modular_optimum = 0.5;
  return table;
}

std::string bound_csv(const BoundTable& table) {
  std::string out = "c,x,alpha\n";
  for (const auto& r : table.rows) {
    out += format_double(r.c) + "," + format_double(r.x) + "," + format_double(r.alpha) +
           "\n";
  }
  out += "# kawase_deterministic=" + format_double(table.kawase_deterministic) + "\n";
  out += "# modular_optimum=" + format_double(table.modular_optimum) + "\n";
  return out;
}

}  // namespace subknap
