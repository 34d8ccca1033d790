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

#ifndef SUBKNAP_TOOLS_COMMANDS_H_
#define SUBKNAP_TOOLS_COMMANDS_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "subknap/generator.h"

namespace subknap::tools {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

// An empty output path writes to `out` instead of a file.
int cmd_gen(const GeneratorSpec& spec, const std::string& out_path, Streams io);

// alg is one of opt, mgreedy, agreedy, policy.
int cmd_eval(const std::string& instance_path, std::int64_t gamma, const std::string& alg,
             bool json, Streams io);

int cmd_sweep(const std::string& instance_path, const std::string& out_path, bool parallel,
              Streams io);

int cmd_bound(const std::string& grid, const std::string& out_path, Streams io);

int cmd_verify(const std::string& instance_path, std::int64_t trials, std::uint64_t seed,
               bool json, Streams io);

// "start:end:step" inside [0, 1]; points are rounded to 1e-12 so that
// 0:1:0.1 yields exactly 0, 0.1, ..., 1. ConfigurationError when malformed.
std::vector<double> parse_grid(std::string_view spec);

// Full command line, argv[0] included.
int run_cli(int argc, const char* const* argv, Streams io);

}  // namespace subknap::tools

#endif  // SUBKNAP_TOOLS_COMMANDS_H_
