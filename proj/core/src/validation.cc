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

#include "subknap/validation.h"

#include <cmath>
#include <sstream>

#include "subknap/instance.h"
#include "subknap/numeric.h"
#include "subknap/random.h"

namespace subknap {
namespace {

class Recorder {
 public:
  explicit Recorder(ValidationReport& report) : report_(report) {}

  void monotone(const ItemSet& base, ItemIndex u, double f_base, double f_plus) {
    ++report_.checks;
    if (f_plus < f_base - tolerance_for(f_base, f_plus)) {
      report_.monotone = false;
      record({"monotone", base, {u}, f_base - f_plus});
    }
  }

  void submodular(const ItemSet& base, ItemIndex u1, ItemIndex u2, double f_a,
                  double f_a1, double f_a2, double f_a12) {
    ++report_.checks;
    const double lhs = f_a1 + f_a2;
    const double rhs = f_a12 + f_a;
    if (lhs < rhs - tolerance_for(lhs, rhs)) {
      report_.submodular = false;
      record({"submodular", base, {u1, u2}, rhs - lhs});
    }
  }

 private:
  void record(OracleViolation v) {
    if (!report_.first_violation) report_.first_violation = std::move(v);
  }

  ValidationReport& report_;
};

void validate_exhaustive(const Instance& instance, ValidationReport& report) {
  const std::size_t n = instance.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> f(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    f[mask] = instance.value(ItemSet::from_mask(mask));
  }
  Recorder rec(report);
  for (std::uint64_t a = 0; a < count; ++a) {
    for (ItemIndex u1 = 0; u1 < n; ++u1) {
      const std::uint64_t b1 = std::uint64_t{1} << u1;
      if (a & b1) continue;
      rec.monotone(ItemSet::from_mask(a), u1, f[a], f[a | b1]);
      for (ItemIndex u2 = u1 + 1; u2 < n; ++u2) {
        const std::uint64_t b2 = std::uint64_t{1} << u2;
        if (a & b2) continue;
        rec.submodular(ItemSet::from_mask(a), u1, u2, f[a], f[a | b1], f[a | b2],
                       f[a | b1 | b2]);
      }
    }
  }
}

void validate_sampled(const Instance& instance, const ValidationOptions& options,
                      ValidationReport& report) {
  const std::size_t n = instance.size();
  Rng rng(options.seed);
  Recorder rec(report);
  for (std::int64_t t = 0; t < options.samples; ++t) {
    ItemSet a;
    for (ItemIndex i = 0; i < n; ++i) {
      if (rng.chance(0.5)) a.insert(i);
    }
    if (a.size() + 2 > n) continue;
    std::vector<ItemIndex> outside;
    for (ItemIndex i = 0; i < n; ++i) {
      if (!a.contains(i)) outside.push_back(i);
    }
    const ItemIndex u1 = outside[rng.below(outside.size())];
    ItemIndex u2 = u1;
    while (u2 == u1) u2 = outside[rng.below(outside.size())];
    const double f_a = instance.value(a);
    const double f_a1 = instance.value(a.with(u1));
    const double f_a2 = instance.value(a.with(u2));
    const double f_a12 = instance.value(a.with(u1).with(u2));
    rec.monotone(a, u1, f_a, f_a1);
    rec.submodular(a, std::min(u1, u2), std::max(u1, u2), f_a,
                   u1 < u2 ? f_a1 : f_a2, u1 < u2 ? f_a2 : f_a1, f_a12);
  }
}

}  // namespace

ValidationReport validate_oracle(const Instance& instance,
                                 const ValidationOptions& options) {
  ValidationReport report;
  const double f_empty = instance.value(ItemSet{});
  ++report.checks;
  if (std::fabs(f_empty) > kTolerance) {
    report.normalized = false;
    report.first_violation = OracleViolation{"normalized", {}, {}, std::fabs(f_empty)};
  }
  if (instance.size() <= kMaxExhaustiveValidationItems) {
    report.exhaustive = true;
    validate_exhaustive(instance, report);
  } else {
    report.exhaustive = false;
    validate_sampled(instance, options, report);
  }
  return report;
}

std::string describe(const Instance& instance, const OracleViolation& v) {
  std::ostringstream out;
  out << v.property << " violated: A=" << instance.describe(v.base);
  if (v.property == "submodular" && v.items.size() == 2) {
    out << ", u1=" << instance.id(v.items[0]) << ", u2=" << instance.id(v.items[1])
        << ": f(A+u1) + f(A+u2) < f(A+u1+u2) + f(A)";
  } else if (v.property == "monotone" && v.items.size() == 1) {
    out << ", u=" << instance.id(v.items[0]) << ": f(A+u) < f(A)";
  } else {
    out << ": f(empty) != 0";
  }
  out << " by " << v.slack;
  return out.str();
}

}  // namespace subknap
