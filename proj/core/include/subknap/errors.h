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

#ifndef SUBKNAP_ERRORS_H_
#define SUBKNAP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace subknap {

// Malformed oracle or instance description (missing weights, bad exponent,
// unnormalized table, duplicate ids, ...).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A call that is well-formed but not allowed for these arguments (unknown
// item id, capacity < 1, algorithms on an oracle that failed validation).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation precondition that the caller must establish first, such as
// running normalize_instance before computing curvature.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive routines refuse instances above kMaxExhaustiveItems.
class ResourceGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A numeric result escaped its mathematically admissible range by more
// than floating-point slack.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace subknap

#endif  // SUBKNAP_ERRORS_H_
