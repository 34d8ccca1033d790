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

#ifndef SUBKNAP_INSTANCE_IO_H_
#define SUBKNAP_INSTANCE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "subknap/instance.h"

namespace subknap {

// Instance files are JSON:
//   {"items": [{"id": "a", "size": 1}, ...],
//    "objective": {"kind": "modular", "weights": {"a": 1.0}}
//               | {"kind": "coverage", "elements": {"x": 1.0},
//                  "covers": {"a": ["x"]}}
//               | {"kind": "concave_modular", "weights": {...},
//                  "exponent": 0.5}
//               | {"kind": "table", "values": {"": 0, "a": 1.0, "a,b": 2.0}}}
// Table keys are comma-joined ids; "" is the empty set. Unknown top-level
// fields (such as the generator header) are ignored.

// ConfigurationError on malformed input.
Instance parse_instance_json(std::string_view text);

// IoError when the file cannot be read.
Instance read_instance_file(const std::filesystem::path& path);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string instance_to_json(const Instance& instance);

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace subknap

#endif  // SUBKNAP_INSTANCE_IO_H_
