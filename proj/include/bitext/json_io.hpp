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

#ifndef BITEXT_JSON_IO_HPP
#define BITEXT_JSON_IO_HPP

#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "bitext/filter.hpp"
#include "bitext/moses_io.hpp"
#include "bitext/split.hpp"
#include "bitext/stats.hpp"

namespace bitext {

using ordered_json = nlohmann::ordered_json;

// Key order is part of the report format: input, kept, retention, rejected.
inline ordered_json filter_report_to_json(const FilterReport& report) {
  ordered_json rejected = ordered_json::object();
  for (const auto& [rule, count] : report.per_rule_rejections) {
    rejected[rule_name(rule)] = count;
  }
  return ordered_json{{"input", report.input_count},
                      {"kept", report.kept_count},
                      {"retention", report.retention()},
                      {"rejected", std::move(rejected)}};
}

inline ordered_json richness_to_json(const RichnessReport& r) {
  return ordered_json{{"n", r.n},
                      {"v_mean", r.v_mean},
                      {"ratio", r.ratio},
                      {"trials", r.trials},
                      {"with_replacement", r.with_replacement},
                      {"per_trial_v", r.per_trial_v}};
}

inline ordered_json stats_to_json(const CorpusStats& s) {
  return ordered_json{
      {"segments", s.segment_count},
      {"tokens", ordered_json{{"src", s.tokens_src}, {"tgt", s.tokens_tgt}}},
      {"mean_length", ordered_json{{"src", s.mean_len_src},
                                   {"tgt", s.mean_len_tgt},
                                   {"pooled", s.mean_len_pooled}}},
      {"length_cv", ordered_json{{"src", s.len_ratio_cv_src},
                                 {"tgt", s.len_ratio_cv_tgt},
                                 {"pooled", s.len_ratio_cv_pooled}}},
      {"richness", ordered_json{{"src", richness_to_json(s.richness_src)},
                                {"tgt", richness_to_json(s.richness_tgt)}}}};
}

inline ordered_json manifest_to_json(const SplitManifest& m) {
  ordered_json reserved = ordered_json::array();
  for (const auto& part : m.reserved) {
    reserved.push_back(ordered_json{{"name", part.name}, {"count", part.count}});
  }
  ordered_json extension = ordered_json::array();
  for (const auto& ext : m.extension) {
    extension.push_back(ordered_json{
        {"name", ext.name}, {"count", ext.count}, {"directions", ext.directions}});
  }
  return ordered_json{
      {"seed", m.seed},
      {"config_digest", m.config_digest},
      {"content_digest", m.content_digest},
      {"complete", m.complete},
      {"core", ordered_json{{"input", m.core_input_count},
                            {"train", m.train_count},
                            {"val", m.val_count},
                            {"test", m.test_count},
                            {"duplicates_removed", m.duplicates_removed},
                            {"leaks_removed", m.leaks_removed}}},
      {"reserved", std::move(reserved)},
      {"extension", std::move(extension)}};
}

inline void write_json_file(const ordered_json& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
  out.flush();
  if (!out) throw DataError("write error on " + path.string());
}

inline ordered_json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return doc;
}

// Writes the dataset package:
//   core/{train,val,test}.{src,tgt}
//   reserved/<name>.{src,tgt}
//   ext/<name>.{src,tgt}
//   manifest.json
// The manifest is first written with complete=false and finalised after every
// pair file landed, so an interrupted write is detectable.
inline void write_layout(const SplitResult& result, const std::filesystem::path& dir,
                         bool force = false) {
  namespace fs = std::filesystem;
  if (fs::exists(dir) && !fs::is_empty(dir) && !force) {
    throw DataError("output directory " + dir.string() +
                    " is not empty (pass force to overwrite)");
  }
  fs::create_directories(dir / "core");
  if (!result.reserved.empty()) fs::create_directories(dir / "reserved");
  if (!result.extension.empty()) fs::create_directories(dir / "ext");

  SplitManifest pending = result.manifest;
  pending.complete = false;
  write_json_file(manifest_to_json(pending), dir / "manifest.json");

  auto write_pair = [](const fs::path& stem, const std::vector<Bisegment>& pairs) {
    MosesPairWriter writer(stem.string() + ".src", stem.string() + ".tgt");
    for (const Bisegment& bi : pairs) writer.write(bi);
    writer.finish();
  };
  write_pair(dir / "core" / "train", result.train);
  write_pair(dir / "core" / "val", result.val);
  write_pair(dir / "core" / "test", result.test);
  for (const auto& [name, corpus] : result.reserved) {
    write_pair(dir / "reserved" / name, corpus);
  }
  for (const auto& ext : result.extension) {
    write_pair(dir / "ext" / ext.name, ext.bisegments);
  }

  const fs::path tmp = dir / "manifest.json.tmp";
  write_json_file(manifest_to_json(result.manifest), tmp);
  fs::rename(tmp, dir / "manifest.json");
}

}  // namespace bitext

#endif  // BITEXT_JSON_IO_HPP
