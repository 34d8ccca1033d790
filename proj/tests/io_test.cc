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

#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>

#include "subknap/errors.h"
#include "subknap/generator.h"
#include "subknap/instance_io.h"
#include "subknap/report_io.h"
#include "subknap/robust_policy.h"
#include "subknap/validation.h"
#include "support/fixtures.h"

namespace subknap {
namespace {

using namespace subknap::testing;
using nlohmann::json;

TEST(InstanceIoTest, RoundTripsEveryKind) {
  const Instance concave({{"a", 1}, {"b", 2}},
                         make_concave_modular_oracle({{"a", 1.0}, {"b", 3.0}}, 0.5));
  for (const Instance& inst : {Ex1(), Ex2(), concave, PairTableInstance(1.5)}) {
    const std::string text = instance_to_json(inst);
    const Instance back = parse_instance_json(text);
    EXPECT_EQ(back.items(), inst.items());
    EXPECT_EQ(back.oracle().kind(), inst.oracle().kind());
    for (std::uint64_t m = 0; m < (1u << inst.size()); ++m) {
      EXPECT_EQ(back.value(ItemSet::from_mask(m)), inst.value(ItemSet::from_mask(m)));
    }
    EXPECT_EQ(instance_to_json(back), text);
  }
}

TEST(InstanceIoTest, ParsesDocumentedFormat) {
  const Instance inst = parse_instance_json(R"({
    "items": [{"id": "a", "size": 1}, {"id": "b", "size": 2}],
    "objective": {"kind": "table", "values": {"": 0, "a": 1.0, "b": 1.0, "a,b": 1.0}},
    "generator": {"ignored": true}})");
  EXPECT_EQ(inst.value(inst.all_items()), 1.0);
  EXPECT_TRUE(inst.oracle_valid());
}

TEST(InstanceIoTest, MalformedInputIsConfigurationError) {
  for (const char* text : {
           "not json",
           "[]",
           R"({"items": []})",
           R"({"items": [{"id": "a", "size": 1.5}], "objective": {"kind": "modular", "weights": {"a": 1}}})",
           R"({"items": [{"id": "a", "size": 1}], "objective": {"kind": "nope"}})",
           R"({"items": [{"id": "a", "size": 1}], "objective": {"kind": "modular", "weights": {"a": "x"}}})",
           R"({"items": [{"id": "a", "size": 1}], "objective": {"kind": "modular", "weights": {"b": 1}}})",
           R"({"items": [{"id": "a", "size": 1}], "objective": {"kind": "table", "values": {"": 0.1, "a": 1}}})",
       }) {
    EXPECT_THROW(parse_instance_json(text), ConfigurationError) << text;
  }
}

TEST(InstanceIoTest, MissingFileIsIoError) {
  EXPECT_THROW(read_instance_file("/nonexistent/instance.json"), IoError);
  EXPECT_THROW(write_text_file("/nonexistent/dir/out.txt", "x"), IoError);
}

TEST(GeneratorTest, DeterministicBytes) {
  GeneratorSpec spec{.kind = GeneratorKind::kModular, .n = 5, .size_max = 10, .seed = 42};
  const std::string first = generate_instance(spec).json;
  EXPECT_EQ(generate_instance(spec).json, first);
  spec.seed = 43;
  EXPECT_NE(generate_instance(spec).json, first);
  const json doc = json::parse(first);
  EXPECT_EQ(doc["generator"]["algorithm"], "mt19937_64");
  EXPECT_EQ(doc["items"].size(), 5u);
  EXPECT_EQ(doc["items"][0]["id"], "i00");
}

TEST(GeneratorTest, EveryKindIsValidAndNormalized) {
  for (auto kind : {GeneratorKind::kModular, GeneratorKind::kCoverage,
                    GeneratorKind::kConcaveModular, GeneratorKind::kPlanted}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const GeneratedInstance g =
          generate_instance({.kind = kind, .n = 3 + static_cast<int>(seed % 8), .seed = seed});
      EXPECT_TRUE(validate_oracle(g.instance).ok());
      EXPECT_TRUE(g.instance.normalized());
      EXPECT_EQ(normalize_instance(g.instance).items(), g.instance.items());
      for (const auto& item : g.instance.items()) {
        EXPECT_GE(item.size, 1);
        EXPECT_LE(item.size, 10);
      }
      EXPECT_EQ(instance_to_json(parse_instance_json(g.json)), instance_to_json(g.instance));
    }
  }
}

TEST(GeneratorTest, PlantedSeed7HasStartItems) {
  const GeneratedInstance g =
      generate_instance({.kind = GeneratorKind::kPlanted, .n = 6, .seed = 7});
  EXPECT_FALSE(start_item_list(g.instance).entries.empty());
  EXPECT_LE(g.attempts, kMaxPlantAttempts);
}

TEST(GeneratorTest, ExponentOneGivesZeroCurvature) {
  const GeneratedInstance g = generate_instance(
      {.kind = GeneratorKind::kConcaveModular, .n = 6, .seed = 3, .exponent = 1.0});
  EXPECT_EQ(curvature(g.instance), 0.0);
}

TEST(GeneratorTest, InvalidSpecs) {
  EXPECT_THROW(generate_instance({.n = 0}), ConfigurationError);
  EXPECT_THROW(generate_instance({.size_max = 0}), ConfigurationError);
  EXPECT_THROW(generate_instance({.kind = GeneratorKind::kCoverage, .density = 0.0}),
               ConfigurationError);
  EXPECT_THROW(generate_instance({.kind = GeneratorKind::kConcaveModular, .exponent = 2.0}),
               ConfigurationError);
  EXPECT_THROW(generate_instance({.kind = GeneratorKind::kPlanted, .n = 1}), ConfigurationError);
  EXPECT_THROW(generate_instance({.kind = GeneratorKind::kPlanted, .size_max = 2}),
               ConfigurationError);
}

TEST(GeneratorTest, KindNames) {
  for (auto k : {GeneratorKind::kModular, GeneratorKind::kCoverage,
                 GeneratorKind::kConcaveModular, GeneratorKind::kPlanted}) {
    EXPECT_EQ(parse_generator_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_generator_kind("table"));
}

TEST(ReportIoTest, PolicyTraceJson) {
  CapacityFitOracle oracle(2);
  const Instance inst = Ex1();
  const json doc = json::parse(policy_trace_json(inst, execute_policy(inst, oracle)));
  EXPECT_EQ(doc["packed"], json::array({"b"}));
  EXPECT_DOUBLE_EQ(doc["value"].get<double>(), 1.9);
  EXPECT_EQ(doc["query_count"], 2);
  ASSERT_EQ(doc["attempts"].size(), 2u);
  EXPECT_EQ(doc["attempts"][0]["phase"], "start_item");
  EXPECT_EQ(doc["attempts"][0]["item"], "b");
  EXPECT_EQ(doc["attempts"][0]["fitted"], true);
  EXPECT_EQ(doc["attempts"][1]["phase"], "greedy_prefix");
  EXPECT_EQ(doc["attempts"][1]["fitted"], false);
}

TEST(ReportIoTest, CheckReportJson) {
  CheckReport r;
  r.name = "demo";
  r.record("x", 0.0, 1.0, [] { return "witness"; });
  const json doc = json::parse(check_report_json(r));
  EXPECT_EQ(doc["name"], "demo");
  EXPECT_EQ(doc["passed"], false);
  EXPECT_EQ(doc["failures"][0]["witness"], "x: witness");
  EXPECT_DOUBLE_EQ(doc["worst_slack"].get<double>(), -1.0);
}

TEST(ReportIoTest, VerificationJsonCarriesViolation) {
  const Instance bad = PairTableInstance(3.0);
  const VerificationReport r = verify_instance(bad, {});
  const json doc = json::parse(verification_report_json(bad, r));
  EXPECT_EQ(doc["passed"], false);
  EXPECT_EQ(doc["validation"]["submodular"], false);
  EXPECT_NE(doc["validation"]["violation"].get<std::string>().find("submodular violated"),
            std::string::npos);
}

}  // namespace
}  // namespace subknap
