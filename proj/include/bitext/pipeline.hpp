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

#ifndef BITEXT_PIPELINE_HPP
#define BITEXT_PIPELINE_HPP

#include <algorithm>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitext/filter.hpp"
#include "bitext/json_io.hpp"
#include "bitext/modernize.hpp"
#include "bitext/moses_io.hpp"
#include "bitext/split.hpp"
#include "bitext/stats.hpp"
#include "bitext/tokenize.hpp"

namespace bitext {

struct InputSpec {
  std::string name;
  std::string format;              // "moses" | "tsv"
  std::vector<std::string> paths;  // moses: [source, target]; tsv: [file]
  LangPair languages;
  Production production = Production::translated;
  Cotext has_cotext = Cotext::not_applicable;

  void validate() const {
    if (!detail::valid_part_name(name)) {
      throw DataError("input name '" + name + "' is not usable");
    }
    if (format == "moses") {
      if (paths.size() != 2) {
        throw DataError("input '" + name + "': moses format needs 2 paths, got " +
                        std::to_string(paths.size()));
      }
    } else if (format == "tsv") {
      if (paths.size() != 1) {
        throw DataError("input '" + name + "': tsv format needs 1 path, got " +
                        std::to_string(paths.size()));
      }
    } else {
      throw DataError("input '" + name + "': unknown format '" + format +
                      "' (expected moses|tsv)");
    }
  }
};

// Fixed held-out set loaded from a pair of files.
struct ReservedSpec {
  std::string name;
  std::string src_path;
  std::string tgt_path;
  LangPair languages = {"src", "tgt"};
};

struct ModernizerConfig {
  std::vector<std::string> apply_to;
  ModernizationRules rules = ModernizationRules::defaults();
};

struct FilterSettings {
  FilterConfig config;
  PipelineOptions options;
};

struct StatsTokenizers {
  // The usual direction here is Japanese source, French target.
  TokenizerKind source = TokenizerKind::script_boundary;
  TokenizerKind target = TokenizerKind::whitespace;
};

struct PipelineConfig {
  std::vector<InputSpec> inputs;
  FilterSettings filter;
  ModernizerConfig modernizer;
  StatsConfig stats;
  StatsTokenizers stats_tokenizers;
  DatasetLayout layout;
  std::vector<ReservedSpec> reserved;
  std::string output_dir;

  void validate() const {
    for (size_t i = 0; i < inputs.size(); ++i) {
      inputs[i].validate();
      for (size_t j = i + 1; j < inputs.size(); ++j) {
        if (inputs[i].name == inputs[j].name) {
          throw DataError("duplicate input name '" + inputs[i].name + "'");
        }
      }
    }
    filter.config.validate();
    stats.validate();
    layout.validate();
    auto known = [&](const std::string& name) {
      for (const auto& in : inputs) {
        if (in.name == name) return true;
      }
      return false;
    };
    for (const auto& name : layout.core_members) {
      if (!known(name)) throw DataError("layout core member '" + name + "' has no input");
    }
    for (const auto& name : layout.extension_members) {
      if (!known(name)) {
        throw DataError("layout extension member '" + name + "' has no input");
      }
    }
    for (const auto& name : modernizer.apply_to) {
      if (!known(name)) throw DataError("modernizer target '" + name + "' has no input");
    }
    for (const auto& spec : reserved) {
      if (!detail::valid_part_name(spec.name)) {
        throw DataError("reserved test name '" + spec.name + "' is not usable");
      }
    }
    if (output_dir.empty()) throw DataError("output_dir is empty");
  }
};

// ---------------------------------------------------------------------------
// JSON config parsing. Unknown keys are rejected so typos fail loudly.

namespace detail {

inline void check_keys(const ordered_json& obj,
                       std::initializer_list<std::string_view> allowed,
                       const std::string& context) {
  if (!obj.is_object()) throw DataError(context + ": expected a JSON object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (std::string_view a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) throw DataError(context + ": unknown key '" + key + "'");
  }
}

template <typename T>
T get_or(const ordered_json& obj, const char* key, T fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("key '") + key + "': " + e.what());
  }
}

inline std::string require_string(const ordered_json& obj, const char* key,
                                  const std::string& context) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw DataError(context + ": missing string key '" + key + "'");
  }
  return it->get<std::string>();
}

// One codepoint, given either literally or as "U+XXXX".
inline char32_t parse_codepoint(const std::string& s, const std::string& context) {
  if (s.size() > 2 && (s[0] == 'U' || s[0] == 'u') && s[1] == '+') {
    char32_t cp = 0;
    for (size_t i = 2; i < s.size(); ++i) {
      const char c = s[i];
      uint32_t digit;
      if (c >= '0' && c <= '9') digit = c - '0';
      else if (c >= 'a' && c <= 'f') digit = 10 + (c - 'a');
      else if (c >= 'A' && c <= 'F') digit = 10 + (c - 'A');
      else throw DataError(context + ": bad codepoint literal '" + s + "'");
      cp = cp * 16 + digit;
      if (cp > 0x10FFFF) throw DataError(context + ": codepoint out of range in '" + s + "'");
    }
    return cp;
  }
  size_t pos = 0;
  const char32_t cp = decode_utf8(s, pos);
  if (cp == kInvalidCp || pos != s.size()) {
    throw DataError(context + ": expected exactly one character, got '" + s + "'");
  }
  return cp;
}

inline std::vector<char32_t> parse_codepoint_string(const std::string& s,
                                                    const std::string& context) {
  std::vector<char32_t> out;
  size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = decode_utf8(s, pos);
    if (cp == kInvalidCp) throw DataError(context + ": invalid UTF-8");
    out.push_back(cp);
  }
  return out;
}

}  // namespace detail

inline FilterSettings filter_settings_from_json(const ordered_json& obj) {
  detail::check_keys(obj,
                     {"max_segment_bytes", "max_length_ratio", "max_special_chars",
                      "special_char_set", "max_uppercase", "max_digits",
                      "bracket_classes", "blocked_codepoint_ranges",
                      "repeated_symbol_run_min", "length_unit",
                      "bracket_balance_within_segment", "rule_order", "threads",
                      "batch_size", "normalize"},
                     "filter config");
  FilterSettings out;
  FilterConfig& cfg = out.config;
  cfg.max_segment_bytes = detail::get_or<uint32_t>(obj, "max_segment_bytes", cfg.max_segment_bytes);
  cfg.max_length_ratio = detail::get_or<double>(obj, "max_length_ratio", cfg.max_length_ratio);
  cfg.max_special_chars = detail::get_or<uint32_t>(obj, "max_special_chars", cfg.max_special_chars);
  cfg.max_uppercase = detail::get_or<uint32_t>(obj, "max_uppercase", cfg.max_uppercase);
  cfg.max_digits = detail::get_or<uint32_t>(obj, "max_digits", cfg.max_digits);
  cfg.repeated_symbol_run_min =
      detail::get_or<uint32_t>(obj, "repeated_symbol_run_min", cfg.repeated_symbol_run_min);
  if (obj.contains("special_char_set")) {
    cfg.special_char_set = detail::parse_codepoint_string(
        obj.at("special_char_set").get<std::string>(), "special_char_set");
  }
  if (obj.contains("length_unit")) {
    const auto unit = obj.at("length_unit").get<std::string>();
    if (unit == "bytes") cfg.length_unit = LengthUnit::bytes;
    else if (unit == "codepoints") cfg.length_unit = LengthUnit::codepoints;
    else throw DataError("unknown length_unit '" + unit + "'");
  }
  cfg.bracket_balance_within_segment = detail::get_or<bool>(
      obj, "bracket_balance_within_segment", cfg.bracket_balance_within_segment);
  if (obj.contains("bracket_classes")) {
    cfg.bracket_classes.clear();
    for (const auto& cls : obj.at("bracket_classes")) {
      detail::check_keys(cls, {"open", "close"}, "bracket class");
      BracketClass parsed;
      parsed.opens = detail::parse_codepoint_string(
          detail::require_string(cls, "open", "bracket class"), "bracket class open");
      parsed.closes = detail::parse_codepoint_string(
          detail::require_string(cls, "close", "bracket class"), "bracket class close");
      cfg.bracket_classes.push_back(std::move(parsed));
    }
  }
  if (obj.contains("blocked_codepoint_ranges")) {
    cfg.blocked_codepoint_ranges.clear();
    for (const auto& range : obj.at("blocked_codepoint_ranges")) {
      if (!range.is_array() || range.size() != 2) {
        throw DataError("blocked_codepoint_ranges entries must be [lo, hi]");
      }
      auto bound = [&](const ordered_json& v) -> char32_t {
        if (v.is_string()) {
          return detail::parse_codepoint(v.get<std::string>(), "blocked range");
        }
        return static_cast<char32_t>(v.get<uint32_t>());
      };
      cfg.blocked_codepoint_ranges.push_back({bound(range[0]), bound(range[1])});
    }
  }
  if (obj.contains("rule_order")) {
    out.options.order.clear();
    for (const auto& name : obj.at("rule_order")) {
      out.options.order.push_back(parse_rule(name.get<std::string>()));
    }
  }
  out.options.threads = detail::get_or<unsigned>(obj, "threads", out.options.threads);
  out.options.batch_size = detail::get_or<size_t>(obj, "batch_size", out.options.batch_size);
  if (obj.contains("normalize")) {
    const auto mode = obj.at("normalize").get<std::string>();
    if (mode == "none") out.options.normalize = Normalize::none;
    else if (mode == "compat") out.options.normalize = Normalize::compat;
    else throw DataError("unknown normalize mode '" + mode + "'");
  }
  cfg.validate();
  return out;
}

inline StatsConfig stats_config_from_json(const ordered_json& obj) {
  detail::check_keys(
      obj, {"richness_sample_size", "richness_trials", "seed", "tokenizer_src", "tokenizer_tgt"},
      "stats config");
  StatsConfig cfg;
  cfg.richness_sample_size =
      detail::get_or<uint32_t>(obj, "richness_sample_size", cfg.richness_sample_size);
  cfg.richness_trials = detail::get_or<uint32_t>(obj, "richness_trials", cfg.richness_trials);
  cfg.seed = detail::get_or<uint64_t>(obj, "seed", cfg.seed);
  cfg.validate();
  return cfg;
}

inline StatsTokenizers stats_tokenizers_from_json(const ordered_json& obj) {
  StatsTokenizers out;
  if (obj.contains("tokenizer_src")) {
    out.source = tokenizer_kind_from_string(obj.at("tokenizer_src").get<std::string>());
  }
  if (obj.contains("tokenizer_tgt")) {
    out.target = tokenizer_kind_from_string(obj.at("tokenizer_tgt").get<std::string>());
  }
  return out;
}

inline ModernizationRules modernization_rules_from_json(const ordered_json& obj) {
  detail::check_keys(
      obj, {"kana_map", "conjugation_patterns", "ocr_noise_chars", "detect_embedded_latin"},
      "modernization rules");
  ModernizationRules rules = ModernizationRules::defaults();
  if (obj.contains("kana_map")) {
    rules.kana_map.clear();
    for (const auto& [key, value] : obj.at("kana_map").items()) {
      rules.kana_map[detail::parse_codepoint(key, "kana_map key")] =
          detail::parse_codepoint(value.get<std::string>(), "kana_map value");
    }
  }
  if (obj.contains("conjugation_patterns")) {
    rules.conjugation_patterns.clear();
    for (const auto& entry : obj.at("conjugation_patterns")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw DataError("conjugation_patterns entries must be [pattern, replacement]");
      }
      rules.conjugation_patterns.emplace_back(entry[0].get<std::string>(),
                                              entry[1].get<std::string>());
    }
  }
  if (obj.contains("ocr_noise_chars")) {
    rules.ocr_noise_chars.clear();
    for (const auto& entry : obj.at("ocr_noise_chars")) {
      rules.ocr_noise_chars.push_back(
          detail::parse_codepoint(entry.get<std::string>(), "ocr_noise_chars"));
    }
  }
  rules.detect_embedded_latin =
      detail::get_or<bool>(obj, "detect_embedded_latin", rules.detect_embedded_latin);
  rules.validate();
  return rules;
}

inline DatasetLayout layout_from_json(const ordered_json& obj,
                                      std::vector<ReservedSpec>* reserved_out) {
  detail::check_keys(obj,
                     {"core_members", "extension_members", "val_size", "test_size",
                      "seed", "reserved_tests", "direction_restrictions",
                      "carve_before_dedup", "allow_undersized"},
                     "layout config");
  DatasetLayout layout;
  layout.core_members =
      detail::get_or<std::vector<std::string>>(obj, "core_members", {});
  layout.extension_members =
      detail::get_or<std::vector<std::string>>(obj, "extension_members", {});
  layout.val_size = detail::get_or<uint64_t>(obj, "val_size", layout.val_size);
  layout.test_size = detail::get_or<uint64_t>(obj, "test_size", layout.test_size);
  layout.seed = detail::get_or<uint64_t>(obj, "seed", layout.seed);
  layout.carve_before_dedup =
      detail::get_or<bool>(obj, "carve_before_dedup", layout.carve_before_dedup);
  layout.allow_undersized =
      detail::get_or<bool>(obj, "allow_undersized", layout.allow_undersized);
  if (obj.contains("direction_restrictions")) {
    for (const auto& [name, dirs] : obj.at("direction_restrictions").items()) {
      layout.direction_restrictions[name] = dirs.get<std::vector<std::string>>();
    }
  }
  if (obj.contains("reserved_tests")) {
    for (const auto& entry : obj.at("reserved_tests")) {
      detail::check_keys(entry, {"name", "src", "tgt", "languages"}, "reserved test");
      ReservedSpec spec;
      spec.name = detail::require_string(entry, "name", "reserved test");
      spec.src_path = detail::require_string(entry, "src", "reserved test");
      spec.tgt_path = detail::require_string(entry, "tgt", "reserved test");
      if (entry.contains("languages")) {
        const auto langs = entry.at("languages").get<std::vector<std::string>>();
        if (langs.size() != 2) throw DataError("reserved test languages must be [src, tgt]");
        spec.languages = {langs[0], langs[1]};
      }
      if (reserved_out) reserved_out->push_back(std::move(spec));
    }
  }
  return layout;
}

inline InputSpec input_spec_from_json(const ordered_json& obj) {
  detail::check_keys(
      obj, {"name", "format", "paths", "languages", "production", "has_cotext"},
      "input spec");
  InputSpec spec;
  spec.name = detail::require_string(obj, "name", "input spec");
  spec.format = detail::require_string(obj, "format", "input spec");
  spec.paths = detail::get_or<std::vector<std::string>>(obj, "paths", {});
  const auto langs = detail::get_or<std::vector<std::string>>(obj, "languages", {"src", "tgt"});
  if (langs.size() != 2) {
    throw DataError("input '" + spec.name + "': languages must be [src, tgt]");
  }
  spec.languages = {langs[0], langs[1]};
  if (obj.contains("production")) {
    spec.production = production_from_string(obj.at("production").get<std::string>());
  }
  if (obj.contains("has_cotext")) {
    spec.has_cotext = cotext_from_string(obj.at("has_cotext").get<std::string>());
  }
  spec.validate();
  return spec;
}

// Parses the single pipeline config document. `base_dir` anchors any relative
// modernizer rule-file reference.
inline PipelineConfig pipeline_config_from_json(const ordered_json& obj,
                                                const std::filesystem::path& base_dir = {}) {
  detail::check_keys(
      obj, {"inputs", "filter", "modernizer", "stats", "layout", "output_dir"},
      "pipeline config");
  PipelineConfig cfg;
  if (obj.contains("inputs")) {
    for (const auto& entry : obj.at("inputs")) {
      cfg.inputs.push_back(input_spec_from_json(entry));
    }
  }
  if (obj.contains("filter")) cfg.filter = filter_settings_from_json(obj.at("filter"));
  if (obj.contains("stats")) {
    cfg.stats = stats_config_from_json(obj.at("stats"));
    cfg.stats_tokenizers = stats_tokenizers_from_json(obj.at("stats"));
  }
  if (obj.contains("layout")) {
    cfg.layout = layout_from_json(obj.at("layout"), &cfg.reserved);
  }
  if (obj.contains("modernizer")) {
    const auto& mod = obj.at("modernizer");
    detail::check_keys(mod, {"apply_to", "rules"}, "modernizer config");
    cfg.modernizer.apply_to =
        detail::get_or<std::vector<std::string>>(mod, "apply_to", {});
    if (mod.contains("rules")) {
      if (mod.at("rules").is_string()) {
        std::filesystem::path rule_path = mod.at("rules").get<std::string>();
        if (rule_path.is_relative() && !base_dir.empty()) rule_path = base_dir / rule_path;
        cfg.modernizer.rules = modernization_rules_from_json(read_json_file(rule_path));
      } else {
        cfg.modernizer.rules = modernization_rules_from_json(mod.at("rules"));
      }
    }
  }
  cfg.output_dir = detail::get_or<std::string>(obj, "output_dir", "");
  return cfg;
}

// ---------------------------------------------------------------------------
// Modernization over a corpus.

struct ModernizeReport {
  uint64_t input_count = 0;
  uint64_t kept_count = 0;
  uint64_t ocr_rejected = 0;
  uint64_t kana_modified = 0;
  uint64_t conjugation_modified = 0;
};

// OCR-noise rejection followed by kana and conjugation modernization of both
// sides. Modernization patterns target Japanese script, so they pass foreign
// text through unchanged.
inline std::vector<Bisegment> modernize_corpus(std::vector<Bisegment> corpus,
                                               const ModernizationRules& rules,
                                               ModernizeReport* report = nullptr) {
  rules.validate();
  ModernizeReport local;
  std::vector<Bisegment> kept;
  kept.reserve(corpus.size());
  for (Bisegment& bi : corpus) {
    ++local.input_count;
    if (!reject_ocr_noise(bi.source, rules).kept() ||
        !reject_ocr_noise(bi.target, rules).kept()) {
      ++local.ocr_rejected;
      continue;
    }
    bool kana_changed = false;
    bool conj_changed = false;
    for (Segment* seg : {&bi.source, &bi.target}) {
      std::string after_kana = modernize_kana(seg->text, rules);
      if (after_kana != seg->text) kana_changed = true;
      std::string after_conj = modernize_conjugation(after_kana, rules);
      if (after_conj != after_kana) conj_changed = true;
      seg->text = std::move(after_conj);
    }
    local.kana_modified += kana_changed ? 1 : 0;
    local.conjugation_modified += conj_changed ? 1 : 0;
    ++local.kept_count;
    kept.push_back(std::move(bi));
  }
  if (report) *report = local;
  return kept;
}

inline ordered_json modernize_report_to_json(const ModernizeReport& r) {
  return ordered_json{
      {"input", r.input_count},
      {"kept", r.kept_count},
      {"rejected", ordered_json{{"ocr_noise", r.ocr_rejected}}},
      {"modified", ordered_json{{"kana", r.kana_modified},
                                {"conjugation", r.conjugation_modified}}}};
}

// ---------------------------------------------------------------------------
// Build orchestration.

struct BuildInputReport {
  std::string name;
  uint64_t read = 0;
  std::optional<ModernizeReport> modernize;
  std::optional<FilterReport> filter;
  uint64_t final_count = 0;
};

struct BuildOutcome {
  SplitManifest manifest;
  std::vector<BuildInputReport> inputs;
  std::filesystem::path output_dir;
};

namespace detail {

template <typename F>
auto stage(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const DataError& e) {
    throw DataError("stage " + name + ": " + e.what());
  }
}

}  // namespace detail

inline std::vector<Bisegment> read_input(const InputSpec& spec, const WarnFn& warn = {}) {
  spec.validate();
  std::vector<Bisegment> out;
  auto drain = [&out](auto& reader) {
    while (auto bi = reader.next()) out.push_back(std::move(*bi));
  };
  if (spec.format == "moses") {
    MosesPairReader reader(spec.paths[0], spec.paths[1], spec.languages, spec.name, warn);
    drain(reader);
  } else {
    TsvReader reader(spec.paths[0], spec.languages, spec.name, warn);
    drain(reader);
  }
  return out;
}

inline std::vector<std::pair<std::string, std::vector<Bisegment>>> load_reserved(
    const std::vector<ReservedSpec>& specs, const WarnFn& warn = {}) {
  std::vector<std::pair<std::string, std::vector<Bisegment>>> out;
  for (const ReservedSpec& spec : specs) {
    out.emplace_back(spec.name, std::vector<Bisegment>{});
    detail::stage("reserved:" + spec.name, [&] {
      MosesPairReader reader(spec.src_path, spec.tgt_path, spec.languages, spec.name, warn);
      while (auto bi = reader.next()) out.back().second.push_back(std::move(*bi));
      return 0;
    });
  }
  return out;
}

inline ordered_json build_report_to_json(const BuildOutcome& outcome) {
  ordered_json inputs = ordered_json::array();
  for (const auto& in : outcome.inputs) {
    ordered_json entry{{"name", in.name}, {"read", in.read}};
    if (in.modernize) entry["modernize"] = modernize_report_to_json(*in.modernize);
    if (in.filter) entry["filter"] = filter_report_to_json(*in.filter);
    entry["final"] = in.final_count;
    inputs.push_back(std::move(entry));
  }
  return ordered_json{{"output_dir", outcome.output_dir.string()},
                      {"inputs", std::move(inputs)}};
}

// Full build: ingest every input, filter the crawled ones, modernize the
// designated ones, assemble and split, write the package plus per-corpus
// stats and a build report.
inline BuildOutcome run_build(const PipelineConfig& cfg, bool force = false,
                              const WarnFn& warn = {}) {
  namespace fs = std::filesystem;
  cfg.validate();

  BuildOutcome outcome;
  outcome.output_dir = cfg.output_dir;

  std::vector<NamedCorpus> corpora;
  for (const InputSpec& spec : cfg.inputs) {
    NamedCorpus corpus;
    corpus.meta = {spec.name, spec.production, spec.has_cotext};
    corpus.bisegments = detail::stage("ingest:" + spec.name,
                                      [&] { return read_input(spec, warn); });
    BuildInputReport report;
    report.name = spec.name;
    report.read = corpus.bisegments.size();

    const bool apply_modernizer =
        std::find(cfg.modernizer.apply_to.begin(), cfg.modernizer.apply_to.end(),
                  spec.name) != cfg.modernizer.apply_to.end();
    if (apply_modernizer) {
      ModernizeReport mod;
      corpus.bisegments = detail::stage("modernize:" + spec.name, [&] {
        return modernize_corpus(std::move(corpus.bisegments), cfg.modernizer.rules, &mod);
      });
      report.modernize = mod;
    }
    if (spec.production == Production::crawled) {
      detail::stage("filter:" + spec.name, [&] {
        auto [kept, filter_report] =
            run_pipeline(corpus.bisegments, cfg.filter.config, cfg.filter.options);
        corpus.bisegments = std::move(kept);
        report.filter = std::move(filter_report);
        return 0;
      });
    }
    report.final_count = corpus.bisegments.size();
    outcome.inputs.push_back(std::move(report));
    corpora.push_back(std::move(corpus));
  }

  DatasetLayout layout = cfg.layout;
  layout.reserved_tests = load_reserved(cfg.reserved, warn);

  SplitResult result = detail::stage(
      "assemble", [&] { return assemble_and_split(corpora, layout); });
  outcome.manifest = result.manifest;

  detail::stage("write", [&] {
    if (fs::exists(cfg.output_dir) && !fs::is_empty(cfg.output_dir) && !force) {
      throw DataError("output directory " + cfg.output_dir +
                      " is not empty (pass --force to overwrite)");
    }
    fs::create_directories(fs::path(cfg.output_dir) / "stats");
    const Tokenizer src_tok(cfg.stats_tokenizers.source);
    const Tokenizer tgt_tok(cfg.stats_tokenizers.target);
    for (const NamedCorpus& corpus : corpora) {
      ordered_json doc;
      if (corpus.bisegments.empty()) {
        doc = ordered_json{{"segments", 0}, {"degenerate", true}};
      } else {
        try {
          doc = stats_to_json(corpus_report(corpus.bisegments, src_tok, tgt_tok, cfg.stats));
        } catch (const DataError&) {
          doc = ordered_json{{"segments", corpus.bisegments.size()}, {"degenerate", true}};
        }
      }
      write_json_file(doc, fs::path(cfg.output_dir) / "stats" / (corpus.meta.name + ".json"));
    }
    write_json_file(build_report_to_json(outcome),
                    fs::path(cfg.output_dir) / "build_report.json");
    write_layout(result, cfg.output_dir, /*force=*/true);
    return 0;
  });
  return outcome;
}

}  // namespace bitext

#endif  // BITEXT_PIPELINE_HPP
