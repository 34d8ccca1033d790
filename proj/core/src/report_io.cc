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

#include "subknap/report_io.h"

#include <nlohmann/json.hpp>
#include <sstream>

#include "subknap/format.h"

namespace subknap {
namespace {

using nlohmann::json;

json check_value(const CheckReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"witness", f.witness}, {"slack", f.slack}});
  }
  json out = {{"name", report.name},
              {"trials", report.trials},
              {"failure_count", report.failure_count},
              {"worst_slack", report.worst_slack},
              {"passed", report.passed()},
              {"counts", report.counts},
              {"failures", failures},
              {"notes", report.notes}};
  if (!report.optimum.empty()) out["optimum"] = report.optimum;
  return out;
}

json validation_value(const Instance& instance, const ValidationReport& v) {
  json out = {{"normalized", v.normalized},
              {"monotone", v.monotone},
              {"submodular", v.submodular},
              {"exhaustive", v.exhaustive},
              {"checks", v.checks}};
  if (v.first_violation) out["violation"] = describe(instance, *v.first_violation);
  return out;
}

}  // namespace

std::string policy_trace_json(const Instance& instance, const PolicyTrace& trace) {
  json attempts = json::array();
  for (const auto& a : trace.attempts) {
    attempts.push_back({{"item", instance.id(a.item)},
                        {"fitted", a.fitted},
                        {"phase", std::string(to_string(a.phase))},
                        {"queried_total", a.queried_total}});
  }
  json doc = {{"attempts", attempts},
              {"packed", instance.ids_of(trace.packed.items)},
              {"value", trace.packed.value},
              {"total_size", trace.packed.total_size},
              {"query_count", trace.query_count}};
  return doc.dump(2) + "\n";
}

std::string solution_json(const Instance& instance, std::string_view algorithm, Size gamma,
                          const Solution& solution) {
  json doc = {{"algorithm", std::string(algorithm)},
              {"gamma", gamma},
              {"items", instance.ids_of(solution.items)},
              {"value", solution.value},
              {"total_size", solution.total_size}};
  return doc.dump(2) + "\n";
}

std::string check_report_json(const CheckReport& report) {
  return check_value(report).dump(2) + "\n";
}

std::string verification_report_json(const Instance& instance,
                                     const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(check_value(c));
  json doc = {{"passed", report.passed()},
              {"validation", validation_value(instance, report.validation)},
              {"checks", checks},
              {"notes", report.notes}};
  return doc.dump(2) + "\n";
}

std::string verification_report_text(const Instance& instance,
                                     const VerificationReport& report) {
  std::ostringstream out;
  const auto& v = report.validation;
  out << "validation: " << (v.ok() ? "ok" : "FAILED") << " ("
      << (v.exhaustive ? "exhaustive" : "sampled") << ", " << v.checks << " checks)\n";
  if (v.first_violation) out << "  witness: " << describe(instance, *v.first_violation) << "\n";
  for (const auto& c : report.checks) {
    out << c.name << ": " << (c.passed() ? "ok" : "FAILED") << " trials=" << c.trials
        << " failures=" << c.failure_count << " worst_slack=" << format_double(c.worst_slack)
        << "\n";
    for (const auto& f : c.failures) {
      out << "  witness: " << f.witness << " (slack " << format_double(f.slack) << ")\n";
    }
    for (const auto& n : c.notes) out << "  note: " << n << "\n";
  }
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << (report.passed() ? "PASSED" : "FAILED") << "\n";
  return out.str();
}

}  // namespace subknap
