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

#ifndef BITEXT_SPLIT_HPP
#define BITEXT_SPLIT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitext/corpus.hpp"
#include "bitext/hash.hpp"
#include "bitext/rng.hpp"

namespace bitext {

struct NamedCorpus {
  CorpusMeta meta;
  std::vector<Bisegment> bisegments;
};

inline const std::vector<std::string>& known_directions() {
  static const std::vector<std::string> kDirections = {"src-tgt", "tgt-src"};
  return kDirections;
}

namespace detail {

// Names become file stems under the output directory.
inline bool valid_part_name(std::string_view name) {
  if (name.empty() || name[0] == '.') return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

struct DatasetLayout {
  std::vector<std::string> core_members;
  std::vector<std::string> extension_members;
  uint64_t val_size = 3000;
  uint64_t test_size = 3000;
  // Fixed held-out sets. Checked against the core (leakage guard) and passed
  // through verbatim.
  std::vector<std::pair<std::string, std::vector<Bisegment>>> reserved_tests;
  uint64_t seed = 0;
  // Extension corpus name -> allowed translation directions.
  std::map<std::string, std::vector<std::string>> direction_restrictions;
  // Mirrors the upstream order (split first, dedup afterwards); val/test may
  // then end up below their targets. Default order guarantees exact sizes.
  bool carve_before_dedup = false;
  // Clamp val/test to what is available instead of failing.
  bool allow_undersized = false;

  void validate() const {
    auto check_list = [](const std::vector<std::string>& names, const char* what) {
      for (size_t i = 0; i < names.size(); ++i) {
        if (!detail::valid_part_name(names[i])) {
          throw DataError(std::string(what) + " name '" + names[i] + "' is not usable");
        }
        for (size_t j = i + 1; j < names.size(); ++j) {
          if (names[i] == names[j]) {
            throw DataError(std::string("duplicate ") + what + " name '" + names[i] + "'");
          }
        }
      }
    };
    check_list(core_members, "core member");
    check_list(extension_members, "extension member");
    for (const auto& core : core_members) {
      for (const auto& ext : extension_members) {
        if (core == ext) {
          throw DataError("corpus '" + core + "' listed in both core and extension");
        }
      }
    }
    std::vector<std::string> reserved_names;
    for (const auto& [name, corpus] : reserved_tests) reserved_names.push_back(name);
    check_list(reserved_names, "reserved test");
    for (const auto& [name, dirs] : direction_restrictions) {
      if (std::find(extension_members.begin(), extension_members.end(), name) ==
          extension_members.end()) {
        throw DataError("direction restriction on '" + name +
                        "' which is not an extension member");
      }
      if (dirs.empty()) {
        throw DataError("direction restriction on '" + name + "' allows nothing");
      }
      for (const auto& d : dirs) {
        const auto& known = known_directions();
        if (std::find(known.begin(), known.end(), d) == known.end()) {
          throw DataError("unknown direction '" + d + "' for '" + name + "'");
        }
      }
    }
  }
};

struct ExtensionCorpus {
  std::string name;
  std::vector<Bisegment> bisegments;
  std::vector<std::string> directions;
};

struct ManifestPart {
  std::string name;
  uint64_t count = 0;
};

struct ManifestExtEntry {
  std::string name;
  uint64_t count = 0;
  std::vector<std::string> directions;
};

struct SplitManifest {
  uint64_t seed = 0;
  std::string config_digest;
  std::string content_digest;
  uint64_t core_input_count = 0;
  uint64_t train_count = 0;
  uint64_t val_count = 0;
  uint64_t test_count = 0;
  uint64_t duplicates_removed = 0;
  uint64_t leaks_removed = 0;
  std::vector<ManifestPart> reserved;
  std::vector<ManifestExtEntry> extension;
  // False while a layout write is in flight; the manifest is written last.
  bool complete = true;
};

struct SplitResult {
  std::vector<Bisegment> train;
  std::vector<Bisegment> val;
  std::vector<Bisegment> test;
  std::vector<std::pair<std::string, std::vector<Bisegment>>> reserved;
  std::vector<ExtensionCorpus> extension;
  SplitManifest manifest;
};

namespace detail {

inline void digest_append(uint64_t& h, std::string_view chunk) { h = fnv1a64(chunk, h); }

inline void digest_part(uint64_t& h, std::string_view name,
                        const std::vector<Bisegment>& part) {
  digest_append(h, "#");
  digest_append(h, name);
  digest_append(h, "\n");
  for (const Bisegment& bi : part) {
    digest_append(h, bi.source.text);
    digest_append(h, "\t");
    digest_append(h, bi.target.text);
    digest_append(h, "\n");
  }
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

inline std::string layout_config_digest(const DatasetLayout& layout) {
  std::string canon;
  canon += "core=" + join(layout.core_members, ',');
  canon += ";ext=" + join(layout.extension_members, ',');
  canon += ";val=" + std::to_string(layout.val_size);
  canon += ";test=" + std::to_string(layout.test_size);
  canon += ";seed=" + std::to_string(layout.seed);
  canon += ";carve_before_dedup=" + std::to_string(layout.carve_before_dedup ? 1 : 0);
  canon += ";allow_undersized=" + std::to_string(layout.allow_undersized ? 1 : 0);
  canon += ";reserved=";
  for (size_t i = 0; i < layout.reserved_tests.size(); ++i) {
    if (i) canon.push_back(',');
    canon += layout.reserved_tests[i].first;
  }
  canon += ";dirs=";
  bool first = true;
  for (const auto& [name, dirs] : layout.direction_restrictions) {
    if (!first) canon.push_back(',');
    first = false;
    canon += name + ":" + join(dirs, '|');
  }
  return hex64(fnv1a64(canon));
}

}  // namespace detail

// Assembles the dataset package. Core members are concatenated, cleared of
// exact-pair duplicates and of pairs already present in any reserved test
// set, shuffled with the seeded permutation, and carved into val, test and
// train in that order. Extension corpora pass through untouched apart from
// direction tagging.
inline SplitResult assemble_and_split(const std::vector<NamedCorpus>& corpora,
                                      const DatasetLayout& layout) {
  layout.validate();

  std::unordered_map<std::string, const NamedCorpus*> by_name;
  for (const NamedCorpus& corpus : corpora) {
    if (!by_name.emplace(corpus.meta.name, &corpus).second) {
      throw DataError("duplicate corpus name '" + corpus.meta.name + "'");
    }
  }
  auto resolve = [&](const std::string& name) -> const NamedCorpus& {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw DataError("unknown corpus '" + name + "'");
    return *it->second;
  };

  SplitResult result;

  std::vector<Bisegment> pool;
  for (const auto& name : layout.core_members) {
    const NamedCorpus& corpus = resolve(name);
    if (corpus.meta.production != Production::translated) {
      throw DataError("core member '" + name + "' was not produced by translation");
    }
    pool.insert(pool.end(), corpus.bisegments.begin(), corpus.bisegments.end());
  }
  const uint64_t core_input = pool.size();

  Hash128Set reserved_pairs;
  for (const auto& [name, corpus] : layout.reserved_tests) {
    for (const Bisegment& bi : corpus) {
      reserved_pairs.insert(pair_hash(bi.source.text, bi.target.text));
    }
    result.reserved.emplace_back(name, corpus);
  }

  uint64_t leaks = 0;
  uint64_t dups = 0;
  Hash128Set seen;
  auto classify = [&](const Bisegment& bi) {
    const Hash128 h = pair_hash(bi.source.text, bi.target.text);
    if (reserved_pairs.size() > 0 && reserved_pairs.contains(h)) {
      ++leaks;
      return false;
    }
    if (!seen.insert(h)) {
      ++dups;
      return false;
    }
    return true;
  };

  auto check_size = [&](uint64_t available) -> std::pair<uint64_t, uint64_t> {
    if (available > layout.val_size + layout.test_size) {
      return {layout.val_size, layout.test_size};
    }
    if (!layout.allow_undersized) {
      throw DataError("core holds " + std::to_string(available) +
                      " bisegments, need more than val " + std::to_string(layout.val_size) +
                      " + test " + std::to_string(layout.test_size));
    }
    const uint64_t val_n = std::min(layout.val_size, available);
    const uint64_t test_n = std::min(layout.test_size, available - val_n);
    return {val_n, test_n};
  };

  Rng rng(layout.seed);
  if (!layout.carve_before_dedup) {
    std::vector<Bisegment> deduped;
    deduped.reserve(pool.size());
    for (Bisegment& bi : pool) {
      if (classify(bi)) deduped.push_back(std::move(bi));
    }
    const auto [val_n, test_n] = check_size(deduped.size());
    shuffle(deduped, rng);
    auto cut = deduped.begin();
    result.val.assign(std::make_move_iterator(cut),
                      std::make_move_iterator(cut + static_cast<ptrdiff_t>(val_n)));
    cut += static_cast<ptrdiff_t>(val_n);
    result.test.assign(std::make_move_iterator(cut),
                       std::make_move_iterator(cut + static_cast<ptrdiff_t>(test_n)));
    cut += static_cast<ptrdiff_t>(test_n);
    result.train.assign(std::make_move_iterator(cut),
                        std::make_move_iterator(deduped.end()));
  } else {
    const auto [val_n, test_n] = check_size(pool.size());
    shuffle(pool, rng);
    auto keep_into = [&](std::vector<Bisegment>& out, uint64_t begin, uint64_t end) {
      for (uint64_t i = begin; i < end; ++i) {
        if (classify(pool[i])) out.push_back(std::move(pool[i]));
      }
    };
    keep_into(result.val, 0, val_n);
    keep_into(result.test, val_n, val_n + test_n);
    keep_into(result.train, val_n + test_n, pool.size());
  }

  for (const auto& name : layout.extension_members) {
    const NamedCorpus& corpus = resolve(name);
    ExtensionCorpus ext;
    ext.name = name;
    ext.bisegments = corpus.bisegments;
    auto it = layout.direction_restrictions.find(name);
    ext.directions = it != layout.direction_restrictions.end() ? it->second
                                                               : known_directions();
    result.extension.push_back(std::move(ext));
  }

  SplitManifest& m = result.manifest;
  m.seed = layout.seed;
  m.config_digest = detail::layout_config_digest(layout);
  m.core_input_count = core_input;
  m.train_count = result.train.size();
  m.val_count = result.val.size();
  m.test_count = result.test.size();
  m.duplicates_removed = dups;
  m.leaks_removed = leaks;
  for (const auto& [name, corpus] : result.reserved) {
    m.reserved.push_back({name, corpus.size()});
  }
  for (const auto& ext : result.extension) {
    m.extension.push_back({ext.name, ext.bisegments.size(), ext.directions});
  }

  uint64_t h = fnv1a64("");
  detail::digest_part(h, "train", result.train);
  detail::digest_part(h, "val", result.val);
  detail::digest_part(h, "test", result.test);
  for (const auto& [name, corpus] : result.reserved) {
    detail::digest_part(h, "reserved:" + name, corpus);
  }
  for (const auto& ext : result.extension) {
    detail::digest_part(h, "ext:" + ext.name, ext.bisegments);
  }
  m.content_digest = hex64(h);
  return result;
}

}  // namespace bitext

#endif  // BITEXT_SPLIT_HPP
