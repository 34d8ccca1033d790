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

#ifndef SUBKNAP_REPORT_IO_H_
#define SUBKNAP_REPORT_IO_H_

#include <string>
#include <string_view>

#include "subknap/checks.h"
#include "subknap/greedy.h"
#include "subknap/instance.h"
#include "subknap/robust_policy.h"
#include "subknap/validation.h"

namespace subknap {

// {"attempts": [{"item": "b", "fitted": true, "phase": "start_item",
//                "queried_total": 2}, ...],
//  "packed": ["b"], "value": 1.9, "total_size": 2, "query_count": 2}
std::string policy_trace_json(const Instance& instance, const PolicyTrace& trace);

// {"algorithm": "agreedy", "gamma": 2, "items": ["b"], "value": 1.9,
//  "total_size": 2}
std::string solution_json(const Instance& instance, std::string_view algorithm, Size gamma,
                          const Solution& solution);

std::string check_report_json(const CheckReport& report);

std::string verification_report_json(const Instance& instance,
                                     const VerificationReport& report);

// Multi-line human-readable summary; failure witnesses included.
std::string verification_report_text(const Instance& instance,
                                     const VerificationReport& report);

}  // namespace subknap

#endif  // SUBKNAP_REPORT_IO_H_
