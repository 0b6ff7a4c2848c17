// Copyright 2026 The bitext-tools Authors
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

// Validates every report document the library emits against the schemas
// shipped under schemas/. The checker covers the subset of JSON Schema
// those files use: type, properties, required, additionalProperties,
// items, enum, minimum, maximum, and local $ref.

#include <gtest/gtest.h>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bitext/bitext.hpp"
#include "mini_dataset.hpp"

namespace fs = std::filesystem;

namespace bitext {
namespace {

bool type_matches(const std::string& want, const ordered_json& value) {
  if (want == "object") return value.is_object();
  if (want == "array") return value.is_array();
  if (want == "string") return value.is_string();
  if (want == "boolean") return value.is_boolean();
  if (want == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (want == "number") return value.is_number();
  if (want == "null") return value.is_null();
  return false;
}

// Returns the first violation as "path: problem", or nothing when valid.
std::optional<std::string> check(const ordered_json& root, const ordered_json& schema,
                                 const ordered_json& value, const std::string& path) {
  if (schema.is_boolean()) {
    if (schema.get<bool>()) return std::nullopt;
    return path + ": schema forbids this value";
  }
  if (schema.contains("$ref")) {
    const std::string ref = schema.at("$ref").get<std::string>();
    if (ref.rfind("#", 0) != 0) return path + ": non-local $ref " + ref;
    const auto& target = root.at(nlohmann::json_pointer<std::string>(ref.substr(1)));
    return check(root, target, value, path);
  }
  if (schema.contains("enum")) {
    for (const auto& allowed : schema.at("enum")) {
      if (allowed == value) return std::nullopt;
    }
    return path + ": value not in enum";
  }
  if (schema.contains("type") &&
      !type_matches(schema.at("type").get<std::string>(), value)) {
    return path + ": expected type " + schema.at("type").get<std::string>();
  }
  if (schema.contains("minimum") && value.is_number() &&
      value.get<double>() < schema.at("minimum").get<double>()) {
    return path + ": below minimum";
  }
  if (schema.contains("maximum") && value.is_number() &&
      value.get<double>() > schema.at("maximum").get<double>()) {
    return path + ": above maximum";
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required")) {
        if (!value.contains(key.get<std::string>())) {
          return path + ": missing required key '" + key.get<std::string>() + "'";
        }
      }
    }
    const auto* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
    for (const auto& [key, member] : value.items()) {
      const std::string member_path = path + "/" + key;
      if (props && props->contains(key)) {
        if (auto err = check(root, props->at(key), member, member_path)) return err;
      } else if (schema.contains("additionalProperties")) {
        if (auto err = check(root, schema.at("additionalProperties"), member, member_path)) {
          return err;
        }
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (size_t i = 0; i < value.size(); ++i) {
      if (auto err = check(root, schema.at("items"), value[i], path + "/" + std::to_string(i))) {
        return err;
      }
    }
  }
  return std::nullopt;
}

ordered_json load_schema(const std::string& name) {
  return read_json_file(fs::path(BITEXT_SOURCE_DIR) / "schemas" / name);
}

void expect_valid(const ordered_json& schema, const ordered_json& doc) {
  const auto err = check(schema, schema, doc, "#");
  EXPECT_FALSE(err.has_value()) << *err << "\ndocument: " << doc.dump(2);
}

Bisegment pair_of(std::string src, std::string tgt) {
  return Bisegment{{std::move(src), "ja"}, {std::move(tgt), "fr"}, "test", 0};
}

TEST(SchemaTest, FilterReportValidates) {
  std::vector<Bisegment> corpus;
  corpus.push_back(pair_of("こんにちは", "bonjour"));
  corpus.push_back(pair_of(std::string(351, 'x'), "trop long"));
  corpus.push_back(pair_of("こんにちは", "bonjour"));
  const auto [kept, report] = run_pipeline(corpus, FilterConfig{}, PipelineOptions{});
  expect_valid(load_schema("filter_report.schema.json"), filter_report_to_json(report));
}

TEST(SchemaTest, ModernizeReportValidates) {
  std::vector<Bisegment> corpus;
  corpus.push_back(pair_of("ゐなか", "campagne"));
  corpus.push_back(pair_of("破損\xEF\xBF\xBD行", "cassé"));
  ModernizeReport report;
  modernize_corpus(std::move(corpus), ModernizationRules::defaults(), &report);
  expect_valid(load_schema("modernize_report.schema.json"),
               modernize_report_to_json(report));
}

TEST(SchemaTest, StatsReportValidates) {
  std::vector<Bisegment> corpus;
  for (int i = 0; i < 12; ++i) {
    corpus.push_back(pair_of("山の文" + std::to_string(i),
                             "phrase de montagne " + std::to_string(i)));
  }
  StatsConfig cfg;
  cfg.richness_sample_size = 4;
  cfg.richness_trials = 3;
  const CorpusStats stats =
      corpus_report(corpus, Tokenizer(TokenizerKind::script_boundary),
                    Tokenizer(TokenizerKind::whitespace), cfg);
  expect_valid(load_schema("stats_report.schema.json"), stats_to_json(stats));
}

TEST(SchemaTest, ManifestAndBuildReportValidate) {
  const fs::path out = fs::temp_directory_path() / "bitext_schema_build";
  fs::remove_all(out);
  const BuildOutcome outcome = run_build(testdata::load_mini_config(out));
  expect_valid(load_schema("manifest.schema.json"), manifest_to_json(outcome.manifest));
  expect_valid(load_schema("manifest.schema.json"), read_json_file(out / "manifest.json"));
  expect_valid(load_schema("build_report.schema.json"),
               read_json_file(out / "build_report.json"));
  fs::remove_all(out);
}

// The checker itself must reject malformed documents, otherwise the suite
// proves nothing.
TEST(SchemaTest, CheckerRejectsViolations) {
  const ordered_json schema = load_schema("filter_report.schema.json");
  ordered_json good{{"input", 2},
                    {"kept", 1},
                    {"retention", 0.5},
                    {"rejected", ordered_json{{"length", 1}}}};
  EXPECT_FALSE(check(schema, schema, good, "#").has_value());

  ordered_json missing = good;
  missing.erase("retention");
  EXPECT_TRUE(check(schema, schema, missing, "#").has_value());

  ordered_json wrong_type = good;
  wrong_type["kept"] = "one";
  EXPECT_TRUE(check(schema, schema, wrong_type, "#").has_value());

  ordered_json extra = good;
  extra["bonus"] = 1;
  EXPECT_TRUE(check(schema, schema, extra, "#").has_value());

  ordered_json out_of_range = good;
  out_of_range["retention"] = 1.5;
  EXPECT_TRUE(check(schema, schema, out_of_range, "#").has_value());

  ordered_json bad_counter = good;
  bad_counter["rejected"]["length"] = -3;
  EXPECT_TRUE(check(schema, schema, bad_counter, "#").has_value());

  const ordered_json manifest_schema = load_schema("manifest.schema.json");
  ordered_json bad_direction{
      {"seed", 0}, {"config_digest", "x"}, {"content_digest", "y"}, {"complete", true},
      {"core", ordered_json{{"input", 0}, {"train", 0}, {"val", 0}, {"test", 0},
                            {"duplicates_removed", 0}, {"leaks_removed", 0}}},
      {"reserved", ordered_json::array()},
      {"extension", ordered_json::array(
                        {ordered_json{{"name", "w"},
                                      {"count", 1},
                                      {"directions", ordered_json::array({"ja-fr"})}}})}};
  const auto err = check(manifest_schema, manifest_schema, bad_direction, "#");
  ASSERT_TRUE(err.has_value());
  EXPECT_NE(err->find("not in enum"), std::string::npos);
}

}  // namespace
}  // namespace bitext
