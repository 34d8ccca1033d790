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

#ifndef SUBKNAP_SRC_JSON_CODEC_H_
#define SUBKNAP_SRC_JSON_CODEC_H_

#include <nlohmann/json.hpp>

#include "subknap/instance.h"

namespace subknap::internal {

nlohmann::json instance_to_json_value(const Instance& instance);
Instance instance_from_json_value(const nlohmann::json& doc);

}  // namespace subknap::internal

#endif  // SUBKNAP_SRC_JSON_CODEC_H_
