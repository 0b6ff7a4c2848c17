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

#include "bitext/pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace bitext {
namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

// Each test gets a fresh scratch directory.
class TempDirTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bitext_pipeline_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

void expect_throws_with(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
    FAIL() << "expected DataError containing: " << needle;
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
        << "actual message: " << e.what();
  }
}

// ------------------------------------------------------------ config --

TEST(PipelineConfigTest, FullDocumentParses) {
  const auto doc = ordered_json::parse(R"({
    "inputs": [
      {"name": "classics", "format": "moses", "paths": ["a.ja", "a.fr"],
       "languages": ["ja", "fr"], "production": "translated", "has_cotext": "no"},
      {"name": "web", "format": "tsv", "paths": ["w.tsv"], "production": "crawled"}
    ],
    "filter": {
      "max_segment_bytes": 100,
      "max_length_ratio": 2.5,
      "max_special_chars": 1,
      "special_char_set": "{}:",
      "max_uppercase": 5,
      "max_digits": 6,
      "repeated_symbol_run_min": 4,
      "length_unit": "codepoints",
      "bracket_balance_within_segment": true,
      "bracket_classes": [{"open": "<", "close": ">"}],
      "blocked_codepoint_ranges": [["U+2600", "U+26FF"], [128512, 128591]],
      "rule_order": ["dedup", "length", "ratio", "brackets", "symbols"],
      "threads": 2,
      "batch_size": 64,
      "normalize": "compat"
    },
    "stats": {"richness_sample_size": 50, "richness_trials": 3, "seed": 9,
              "tokenizer_src": "whitespace", "tokenizer_tgt": "whitespace"},
    "layout": {
      "core_members": ["classics"],
      "extension_members": ["web"],
      "val_size": 1, "test_size": 2, "seed": 42,
      "carve_before_dedup": true, "allow_undersized": true,
      "direction_restrictions": {"web": ["src-tgt"]},
      "reserved_tests": [{"name": "gold", "src": "g.ja", "tgt": "g.fr",
                          "languages": ["ja", "fr"]}]
    },
    "modernizer": {"apply_to": ["classics"],
                   "rules": {"kana_map": {"U+3090": "い"},
                             "conjugation_patterns": [["買うて", "買って"]],
                             "ocr_noise_chars": ["U+FFFD"],
                             "detect_embedded_latin": false}},
    "output_dir": "out"
  })");
  const PipelineConfig cfg = pipeline_config_from_json(doc);
  cfg.validate();

  ASSERT_EQ(cfg.inputs.size(), 2u);
  EXPECT_EQ(cfg.inputs[0].name, "classics");
  EXPECT_EQ(cfg.inputs[0].languages.source, "ja");
  EXPECT_EQ(cfg.inputs[0].has_cotext, Cotext::no);
  EXPECT_EQ(cfg.inputs[1].production, Production::crawled);

  EXPECT_EQ(cfg.filter.config.max_segment_bytes, 100u);
  EXPECT_DOUBLE_EQ(cfg.filter.config.max_length_ratio, 2.5);
  EXPECT_EQ(cfg.filter.config.max_special_chars, 1u);
  EXPECT_EQ(cfg.filter.config.special_char_set,
            (std::vector<char32_t>{U'{', U'}', U':'}));
  EXPECT_EQ(cfg.filter.config.length_unit, LengthUnit::codepoints);
  EXPECT_TRUE(cfg.filter.config.bracket_balance_within_segment);
  ASSERT_EQ(cfg.filter.config.bracket_classes.size(), 1u);
  EXPECT_EQ(cfg.filter.config.bracket_classes[0].opens, (std::vector<char32_t>{U'<'}));
  ASSERT_EQ(cfg.filter.config.blocked_codepoint_ranges.size(), 2u);
  EXPECT_EQ(cfg.filter.config.blocked_codepoint_ranges[0].lo, 0x2600u);
  EXPECT_EQ(cfg.filter.config.blocked_codepoint_ranges[1].hi, 128591u);
  ASSERT_EQ(cfg.filter.options.order.size(), 5u);
  EXPECT_EQ(cfg.filter.options.order[0], Rule::dedup);
  EXPECT_EQ(cfg.filter.options.threads, 2u);
  EXPECT_EQ(cfg.filter.options.batch_size, 64u);
  EXPECT_EQ(cfg.filter.options.normalize, Normalize::compat);

  EXPECT_EQ(cfg.stats.richness_sample_size, 50u);
  EXPECT_EQ(cfg.stats.richness_trials, 3u);
  EXPECT_EQ(cfg.stats.seed, 9u);
  EXPECT_EQ(cfg.stats_tokenizers.source, TokenizerKind::whitespace);

  EXPECT_EQ(cfg.layout.core_members, (std::vector<std::string>{"classics"}));
  EXPECT_EQ(cfg.layout.val_size, 1u);
  EXPECT_EQ(cfg.layout.test_size, 2u);
  EXPECT_EQ(cfg.layout.seed, 42u);
  EXPECT_TRUE(cfg.layout.carve_before_dedup);
  EXPECT_TRUE(cfg.layout.allow_undersized);
  EXPECT_EQ(cfg.layout.direction_restrictions.at("web"),
            (std::vector<std::string>{"src-tgt"}));
  ASSERT_EQ(cfg.reserved.size(), 1u);
  EXPECT_EQ(cfg.reserved[0].name, "gold");
  EXPECT_EQ(cfg.reserved[0].languages.target, "fr");

  EXPECT_EQ(cfg.modernizer.apply_to, (std::vector<std::string>{"classics"}));
  EXPECT_EQ(cfg.modernizer.rules.kana_map.at(0x3090), U'い');
  ASSERT_EQ(cfg.modernizer.rules.conjugation_patterns.size(), 1u);
  EXPECT_FALSE(cfg.modernizer.rules.detect_embedded_latin);
  EXPECT_EQ(cfg.output_dir, "out");
}

TEST(PipelineConfigTest, EmptyDocumentKeepsDefaults) {
  const PipelineConfig cfg = pipeline_config_from_json(ordered_json::object());
  EXPECT_TRUE(cfg.inputs.empty());
  EXPECT_EQ(cfg.filter.config.max_segment_bytes, 350u);
  EXPECT_DOUBLE_EQ(cfg.filter.config.max_length_ratio, 3.0);
  EXPECT_EQ(cfg.filter.config.max_special_chars, 2u);
  EXPECT_EQ(cfg.stats.richness_sample_size, 1000u);
  EXPECT_EQ(cfg.stats.richness_trials, 10u);
  EXPECT_EQ(cfg.layout.val_size, 3000u);
  EXPECT_EQ(cfg.layout.test_size, 3000u);
  EXPECT_FALSE(cfg.layout.carve_before_dedup);
  EXPECT_EQ(cfg.stats_tokenizers.source, TokenizerKind::script_boundary);
  EXPECT_EQ(cfg.stats_tokenizers.target, TokenizerKind::whitespace);
  EXPECT_TRUE(cfg.output_dir.empty());
}

TEST(PipelineConfigTest, UnknownKeysFailLoudly) {
  expect_throws_with(
      [] { pipeline_config_from_json(ordered_json::parse(R"({"filtre": {}})")); },
      "unknown key 'filtre'");
  expect_throws_with(
      [] {
        pipeline_config_from_json(
            ordered_json::parse(R"({"filter": {"max_bytes": 1}})"));
      },
      "unknown key 'max_bytes'");
  expect_throws_with(
      [] {
        pipeline_config_from_json(ordered_json::parse(R"({"stats": {"sample": 5}})"));
      },
      "unknown key 'sample'");
  expect_throws_with(
      [] {
        pipeline_config_from_json(ordered_json::parse(R"({"layout": {"dev_size": 1}})"));
      },
      "unknown key 'dev_size'");
  expect_throws_with(
      [] {
        pipeline_config_from_json(ordered_json::parse(
            R"({"inputs": [{"name": "a", "format": "tsv", "paths": ["x"], "fmt": 1}]})"));
      },
      "unknown key 'fmt'");
  expect_throws_with(
      [] {
        pipeline_config_from_json(
            ordered_json::parse(R"({"modernizer": {"targets": []}})"));
      },
      "unknown key 'targets'");
  expect_throws_with(
      [] {
        pipeline_config_from_json(ordered_json::parse(
            R"({"modernizer": {"rules": {"kana": {}}}})"));
      },
      "unknown key 'kana'");
}

TEST(PipelineConfigTest, CodepointLiteralForms) {
  EXPECT_EQ(detail::parse_codepoint("U+1F642", "t"), char32_t{0x1F642});
  EXPECT_EQ(detail::parse_codepoint("u+3090", "t"), char32_t{0x3090});
  EXPECT_EQ(detail::parse_codepoint("ゑ", "t"), U'ゑ');
  EXPECT_EQ(detail::parse_codepoint("A", "t"), U'A');
  expect_throws_with([] { detail::parse_codepoint("U+ZZZZ", "t"); },
                     "bad codepoint literal");
  expect_throws_with([] { detail::parse_codepoint("U+110000", "t"); },
                     "out of range");
  expect_throws_with([] { detail::parse_codepoint("ab", "t"); },
                     "exactly one character");
}

TEST(PipelineConfigTest, EnumStringsAreValidated) {
  expect_throws_with(
      [] {
        filter_settings_from_json(ordered_json::parse(R"({"length_unit": "words"})"));
      },
      "unknown length_unit");
  expect_throws_with(
      [] {
        filter_settings_from_json(ordered_json::parse(R"({"normalize": "nfkc"})"));
      },
      "unknown normalize mode");
  expect_throws_with(
      [] {
        filter_settings_from_json(
            ordered_json::parse(R"({"rule_order": ["lengths"]})"));
      },
      "unknown rule name");
  expect_throws_with(
      [] {
        input_spec_from_json(ordered_json::parse(
            R"({"name": "a", "format": "csv", "paths": ["x"]})"));
      },
      "unknown format");
}

TEST(PipelineConfigTest, StructuralValidation) {
  expect_throws_with(
      [] {
        input_spec_from_json(ordered_json::parse(
            R"({"name": "a", "format": "moses", "paths": ["only-one"]})"));
      },
      "moses format needs 2 paths");
  expect_throws_with(
      [] {
        input_spec_from_json(ordered_json::parse(
            R"({"name": "a", "format": "tsv", "paths": ["x", "y"]})"));
      },
      "tsv format needs 1 path");
  // Duplicate input names and dangling layout members fail at validate().
  PipelineConfig cfg = pipeline_config_from_json(ordered_json::parse(R"({
    "inputs": [{"name": "a", "format": "tsv", "paths": ["x"]},
               {"name": "a", "format": "tsv", "paths": ["y"]}],
    "output_dir": "out"
  })"));
  expect_throws_with([&] { cfg.validate(); }, "duplicate input name 'a'");
  cfg = pipeline_config_from_json(ordered_json::parse(R"({
    "inputs": [{"name": "a", "format": "tsv", "paths": ["x"]}],
    "layout": {"core_members": ["missing"]},
    "output_dir": "out"
  })"));
  expect_throws_with([&] { cfg.validate(); }, "core member 'missing' has no input");
  cfg = pipeline_config_from_json(ordered_json::parse(R"({
    "inputs": [{"name": "a", "format": "tsv", "paths": ["x"]}],
    "modernizer": {"apply_to": ["nope"]},
    "output_dir": "out"
  })"));
  expect_throws_with([&] { cfg.validate(); }, "modernizer target 'nope' has no input");
  expect_throws_with(
      [] {
        layout_from_json(ordered_json::parse(R"({"reserved_tests":
          [{"name": "g", "src": "a", "tgt": "b", "languages": ["ja"]}]})"),
                         nullptr);
      },
      "languages must be [src, tgt]");
}

TEST(PipelineConfigTest, ModernizerRulesLoadFromRelativeFile) {
  const fs::path base = fs::temp_directory_path() / "bitext_pipeline_rulefile";
  fs::remove_all(base);
  fs::create_directories(base);
  write_file(base / "rules.json",
             R"({"kana_map": {"ゐ": "い"}, "conjugation_patterns": [],
                 "ocr_noise_chars": [], "detect_embedded_latin": false})");
  const auto doc = ordered_json::parse(
      R"({"modernizer": {"rules": "rules.json"}, "output_dir": "out"})");
  const PipelineConfig cfg = pipeline_config_from_json(doc, base);
  EXPECT_EQ(cfg.modernizer.rules.kana_map.size(), 1u);
  EXPECT_EQ(cfg.modernizer.rules.kana_map.at(U'ゐ'), U'い');
  EXPECT_FALSE(cfg.modernizer.rules.detect_embedded_latin);
  fs::remove_all(base);
}

// --------------------------------------------------- modernize_corpus --

Bisegment pair_of(std::string src, std::string tgt) {
  return Bisegment{{std::move(src), "ja"}, {std::move(tgt), "fr"}, "test", 0};
}

TEST(ModernizeCorpusTest, AccountingSeparatesRejectionFromModification) {
  std::vector<Bisegment> corpus;
  corpus.push_back(pair_of("山に登る", "on monte"));           // untouched
  corpus.push_back(pair_of("破損\xEF\xBF\xBD文", "cassé"));    // U+FFFD noise
  corpus.push_back(pair_of("ゐなか", "campagne"));             // kana
  corpus.push_back(pair_of("買うて帰る", "acheté"));           // conjugation
  corpus.push_back(pair_of("思うてゐた", "je pensais"));       // both

  ModernizeReport report;
  const auto kept =
      modernize_corpus(std::move(corpus), ModernizationRules::defaults(), &report);

  EXPECT_EQ(report.input_count, 5u);
  EXPECT_EQ(report.kept_count, 4u);
  EXPECT_EQ(report.ocr_rejected, 1u);
  EXPECT_EQ(report.kana_modified, 2u);
  EXPECT_EQ(report.conjugation_modified, 2u);

  ASSERT_EQ(kept.size(), 4u);
  EXPECT_EQ(kept[0].source.text, "山に登る");
  EXPECT_EQ(kept[1].source.text, "いなか");
  EXPECT_EQ(kept[2].source.text, "買って帰る");
  EXPECT_EQ(kept[3].source.text, "思っていた");
  EXPECT_EQ(kept[3].target.text, "je pensais");  // foreign side untouched
}

TEST(ModernizeCorpusTest, EmbeddedLatinCountsAsOcrRejection) {
  std::vector<Bisegment> corpus;
  corpus.push_back(pair_of("村の名はYで始まる", "le village"));
  ModernizeReport report;
  const auto kept =
      modernize_corpus(std::move(corpus), ModernizationRules::defaults(), &report);
  EXPECT_TRUE(kept.empty());
  EXPECT_EQ(report.ocr_rejected, 1u);
}

TEST(ModernizeCorpusTest, ReportJsonShape) {
  ModernizeReport r;
  r.input_count = 10;
  r.kept_count = 9;
  r.ocr_rejected = 1;
  r.kana_modified = 3;
  r.conjugation_modified = 2;
  EXPECT_EQ(modernize_report_to_json(r).dump(),
            R"({"input":10,"kept":9,"rejected":{"ocr_noise":1},)"
            R"("modified":{"kana":3,"conjugation":2}})");
}

// ----------------------------------------------------------- run_build --

class BuildTest : public TempDirTest {
 protected:
  // Six translated classics pairs; one of them is planted in the reserved
  // set, one duplicates a news pair.
  void write_fixtures() {
    write_file(dir_ / "classics.ja",
               "ゐなか暮らし\n買うて帰った\n吾輩は猫である\n山路を登りながら\n雨が降る\n道草\n");
    write_file(dir_ / "classics.fr",
               "la vie rurale\nil l'a acheté\nje suis un chat\nen montant le "
               "sentier\nil pleut\nherbes du chemin\n");
    write_file(dir_ / "news.tsv",
               "今日は晴れ\tbeau temps aujourd'hui\n経済が成長した\tl'économie a "
               "progressé\n選挙が行われた\tdes élections ont eu lieu\n雨が降る\til "
               "pleut\n");
    const std::string long_line(351, 'a');
    write_file(dir_ / "web.ja",
               "安い宿\n駅はどこですか\n" + long_line + "\nメニューをください\n安い宿\n");
    write_file(dir_ / "web.fr",
               "hôtel pas cher\noù est la gare\nbruit\nle menu s'il vous "
               "plaît\nhôtel pas cher\n");
    write_file(dir_ / "junk.ja", long_line + "\n");
    write_file(dir_ / "junk.fr", "bruit\n");
    write_file(dir_ / "gold.ja", "吾輩は猫である\n独自の文\n");
    write_file(dir_ / "gold.fr", "je suis un chat\nphrase unique\n");
  }

  PipelineConfig make_config(const std::string& out_name) {
    const auto p = [&](const char* f) { return (dir_ / f).string(); };
    const ordered_json doc = ordered_json::parse(R"({
      "inputs": [
        {"name": "classics", "format": "moses", "paths": ["CJA", "CFR"],
         "languages": ["ja", "fr"]},
        {"name": "news", "format": "tsv", "paths": ["NTSV"], "languages": ["ja", "fr"]},
        {"name": "web", "format": "moses", "paths": ["WJA", "WFR"],
         "languages": ["ja", "fr"], "production": "crawled"},
        {"name": "junk", "format": "moses", "paths": ["JJA", "JFR"],
         "languages": ["ja", "fr"], "production": "crawled"}
      ],
      "stats": {"richness_sample_size": 3, "richness_trials": 2, "seed": 11},
      "layout": {
        "core_members": ["classics", "news"],
        "extension_members": ["web", "junk"],
        "val_size": 2, "test_size": 2, "seed": 77,
        "direction_restrictions": {"web": ["src-tgt"]},
        "reserved_tests": [{"name": "gold", "src": "GJA", "tgt": "GFR",
                            "languages": ["ja", "fr"]}]
      },
      "modernizer": {"apply_to": ["classics"]},
      "output_dir": "OUT"
    })");
    std::string text = doc.dump();
    auto replace = [&text](const std::string& from, const std::string& to) {
      const size_t at = text.find(from);
      ASSERT_NE(at, std::string::npos) << from;
      text.replace(at, from.size(), to);
    };
    replace("CJA", p("classics.ja"));
    replace("CFR", p("classics.fr"));
    replace("NTSV", p("news.tsv"));
    replace("WJA", p("web.ja"));
    replace("WFR", p("web.fr"));
    replace("JJA", p("junk.ja"));
    replace("JFR", p("junk.fr"));
    replace("GJA", p("gold.ja"));
    replace("GFR", p("gold.fr"));
    replace("OUT", (dir_ / out_name).string());
    return pipeline_config_from_json(ordered_json::parse(text));
  }

  static std::multiset<std::string> read_pairs(const fs::path& stem) {
    std::multiset<std::string> out;
    MosesPairReader reader((stem.string() + ".src"), (stem.string() + ".tgt"),
                           {"ja", "fr"}, "check");
    while (auto bi = reader.next()) {
      out.insert(bi->source.text + "\t" + bi->target.text);
    }
    return out;
  }
};

TEST_F(BuildTest, EndToEndCountsAndLayout) {
  write_fixtures();
  const PipelineConfig cfg = make_config("out");
  const BuildOutcome outcome = run_build(cfg);

  // Per-input accounting.
  ASSERT_EQ(outcome.inputs.size(), 4u);
  const BuildInputReport& classics = outcome.inputs[0];
  EXPECT_EQ(classics.read, 6u);
  ASSERT_TRUE(classics.modernize.has_value());
  EXPECT_EQ(classics.modernize->kana_modified, 1u);
  EXPECT_EQ(classics.modernize->conjugation_modified, 1u);
  EXPECT_EQ(classics.modernize->ocr_rejected, 0u);
  EXPECT_FALSE(classics.filter.has_value());
  EXPECT_EQ(classics.final_count, 6u);

  const BuildInputReport& news = outcome.inputs[1];
  EXPECT_EQ(news.read, 4u);
  EXPECT_FALSE(news.modernize.has_value());
  EXPECT_EQ(news.final_count, 4u);

  const BuildInputReport& web = outcome.inputs[2];
  EXPECT_EQ(web.read, 5u);
  ASSERT_TRUE(web.filter.has_value());
  auto rule_count = [&](Rule rule) -> uint64_t {
    for (const auto& [r, n] : web.filter->per_rule_rejections) {
      if (r == rule) return n;
    }
    return ~uint64_t{0};
  };
  EXPECT_EQ(rule_count(Rule::length), 1u);
  EXPECT_EQ(rule_count(Rule::dedup), 1u);
  EXPECT_EQ(web.final_count, 3u);

  const BuildInputReport& junk = outcome.inputs[3];
  EXPECT_EQ(junk.read, 1u);
  EXPECT_EQ(junk.final_count, 0u);

  // Manifest: 10 core pairs, one planted leak, one cross-corpus duplicate.
  const SplitManifest& m = outcome.manifest;
  EXPECT_EQ(m.core_input_count, 10u);
  EXPECT_EQ(m.leaks_removed, 1u);
  EXPECT_EQ(m.duplicates_removed, 1u);
  EXPECT_EQ(m.val_count, 2u);
  EXPECT_EQ(m.test_count, 2u);
  EXPECT_EQ(m.train_count, 4u);
  EXPECT_EQ(m.seed, 77u);
  ASSERT_EQ(m.reserved.size(), 1u);
  EXPECT_EQ(m.reserved[0].name, "gold");
  EXPECT_EQ(m.reserved[0].count, 2u);
  ASSERT_EQ(m.extension.size(), 2u);
  EXPECT_EQ(m.extension[0].name, "web");
  EXPECT_EQ(m.extension[0].count, 3u);
  EXPECT_EQ(m.extension[0].directions, (std::vector<std::string>{"src-tgt"}));
  EXPECT_EQ(m.extension[1].count, 0u);
  EXPECT_TRUE(m.complete);

  // On-disk layout.
  const fs::path out = dir_ / "out";
  for (const char* f :
       {"core/train.src", "core/train.tgt", "core/val.src", "core/val.tgt",
        "core/test.src", "core/test.tgt", "reserved/gold.src", "reserved/gold.tgt",
        "ext/web.src", "ext/web.tgt", "ext/junk.src", "ext/junk.tgt",
        "stats/classics.json", "stats/news.json", "stats/web.json",
        "stats/junk.json", "build_report.json", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const auto manifest_doc = read_json_file(out / "manifest.json");
  EXPECT_TRUE(manifest_doc.at("complete").get<bool>());
  EXPECT_EQ(manifest_doc.at("core").at("train").get<uint64_t>(), 4u);

  // The written core partitions the expected kept set with no overlap.
  const auto train = read_pairs(out / "core" / "train");
  const auto val = read_pairs(out / "core" / "val");
  const auto test = read_pairs(out / "core" / "test");
  EXPECT_EQ(train.size(), 4u);
  EXPECT_EQ(val.size(), 2u);
  EXPECT_EQ(test.size(), 2u);
  std::multiset<std::string> core = train;
  core.insert(val.begin(), val.end());
  core.insert(test.begin(), test.end());
  const std::multiset<std::string> expected = {
      "いなか暮らし\tla vie rurale",
      "買って帰った\til l'a acheté",
      "山路を登りながら\ten montant le sentier",
      "雨が降る\til pleut",
      "道草\therbes du chemin",
      "今日は晴れ\tbeau temps aujourd'hui",
      "経済が成長した\tl'économie a progressé",
      "選挙が行われた\tdes élections ont eu lieu",
  };
  EXPECT_EQ(core, expected);

  // Reserved rows never appear in the core splits.
  for (const auto& held_out : read_pairs(out / "reserved" / "gold")) {
    EXPECT_EQ(core.count(held_out), 0u) << held_out;
  }

  // Degenerate stats document for the emptied corpus.
  const auto junk_stats = read_json_file(out / "stats" / "junk.json");
  EXPECT_EQ(junk_stats.at("segments").get<uint64_t>(), 0u);
  EXPECT_TRUE(junk_stats.at("degenerate").get<bool>());
  const auto classics_stats = read_json_file(out / "stats" / "classics.json");
  EXPECT_EQ(classics_stats.at("segments").get<uint64_t>(), 6u);
  EXPECT_TRUE(classics_stats.contains("richness"));
}

TEST_F(BuildTest, RepeatBuildsAreBitIdentical) {
  write_fixtures();
  const BuildOutcome first = run_build(make_config("out_a"));
  const BuildOutcome second = run_build(make_config("out_b"));
  EXPECT_EQ(first.manifest.config_digest, second.manifest.config_digest);
  EXPECT_EQ(first.manifest.content_digest, second.manifest.content_digest);
  for (const char* f : {"core/train.src", "core/train.tgt", "core/val.src",
                        "core/test.src", "ext/web.src"}) {
    EXPECT_EQ(read_file(dir_ / "out_a" / f), read_file(dir_ / "out_b" / f)) << f;
  }
}

TEST_F(BuildTest, RefusesNonEmptyOutputDirWithoutForce) {
  write_fixtures();
  const PipelineConfig cfg = make_config("out");
  fs::create_directories(dir_ / "out");
  write_file(dir_ / "out" / "stale.txt", "old");
  expect_throws_with([&] { run_build(cfg); }, "is not empty");
  const BuildOutcome outcome = run_build(cfg, /*force=*/true);
  EXPECT_TRUE(outcome.manifest.complete);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "manifest.json"));
}

TEST_F(BuildTest, CrawledCorpusCannotJoinTheCore) {
  write_fixtures();
  PipelineConfig cfg = make_config("out");
  cfg.layout.core_members.push_back("web");
  cfg.layout.extension_members = {"junk"};
  cfg.layout.direction_restrictions.clear();
  expect_throws_with([&] { run_build(cfg); },
                     "core member 'web' was not produced by translation");
}

TEST_F(BuildTest, StageErrorsNameTheStage) {
  write_fixtures();
  PipelineConfig cfg = make_config("out");
  cfg.inputs[0].paths[0] = (dir_ / "missing.ja").string();
  expect_throws_with([&] { run_build(cfg); }, "stage ingest:classics");
}

TEST_F(BuildTest, WriteLayoutRefusesNonEmptyDirUnlessForced) {
  write_fixtures();
  std::vector<NamedCorpus> corpora(1);
  corpora[0].meta = {"tiny", Production::translated, Cotext::not_applicable};
  for (int i = 0; i < 6; ++i) {
    corpora[0].bisegments.push_back(
        pair_of("文" + std::to_string(i), "ligne " + std::to_string(i)));
  }
  DatasetLayout layout;
  layout.core_members = {"tiny"};
  layout.val_size = 1;
  layout.test_size = 1;
  const SplitResult result = assemble_and_split(corpora, layout);

  const fs::path out = dir_ / "direct";
  fs::create_directories(out);
  write_file(out / "stale.txt", "old");
  expect_throws_with([&] { write_layout(result, out); }, "is not empty");
  write_layout(result, out, /*force=*/true);
  EXPECT_TRUE(read_json_file(out / "manifest.json").at("complete").get<bool>());
  EXPECT_FALSE(fs::exists(out / "manifest.json.tmp"));
}

}  // namespace
}  // namespace bitext
