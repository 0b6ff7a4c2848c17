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

#ifndef BITEXT_STATS_HPP
#define BITEXT_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bitext/corpus.hpp"
#include "bitext/rng.hpp"
#include "bitext/tokenize.hpp"

namespace bitext {

struct StatsConfig {
  uint32_t richness_sample_size = 1000;  // N
  uint32_t richness_trials = 10;
  uint64_t seed = 0;

  void validate() const {
    if (richness_sample_size < 1) throw DataError("richness_sample_size must be >= 1");
    if (richness_trials < 1) throw DataError("richness_trials must be >= 1");
  }
};

// Vocabulary richness: distinct types V in a random N-token sample,
// averaged over trials and normalised to V/N.
struct RichnessReport {
  uint32_t n = 0;
  double v_mean = 0.0;
  double ratio = 0.0;  // v_mean / n
  uint32_t trials = 0;
  // Set when the side holds fewer than n tokens and sampling fell back to
  // with-replacement draws.
  bool with_replacement = false;
  std::vector<uint32_t> per_trial_v;
};

struct CorpusStats {
  uint64_t segment_count = 0;
  uint64_t tokens_src = 0;
  uint64_t tokens_tgt = 0;
  double mean_len_src = 0.0;
  double mean_len_tgt = 0.0;
  double mean_len_pooled = 0.0;
  // Population standard deviation of per-segment length / mean length —
  // numerically the coefficient of variation of the lengths.
  double len_ratio_cv_src = 0.0;
  double len_ratio_cv_tgt = 0.0;
  double len_ratio_cv_pooled = 0.0;
  RichnessReport richness_src;
  RichnessReport richness_tgt;
};

// Uniform sample of cfg.richness_sample_size tokens per trial, without
// replacement when the side is large enough (Floyd's algorithm), with
// replacement otherwise. Trial t draws from a generator seeded seed + t, so
// trials are reproducible independently of evaluation order.
inline RichnessReport vocabulary_richness(std::span<const uint32_t> token_ids,
                                          const StatsConfig& cfg) {
  cfg.validate();
  if (token_ids.empty()) {
    throw DataError("vocabulary richness over an empty side");
  }
  const uint64_t m = token_ids.size();
  const uint32_t n = cfg.richness_sample_size;
  RichnessReport report;
  report.n = n;
  report.trials = cfg.richness_trials;
  report.with_replacement = m < n;

  uint64_t v_sum = 0;
  std::unordered_set<uint32_t> types;
  types.reserve(n * 2);
  for (uint32_t trial = 0; trial < cfg.richness_trials; ++trial) {
    Rng rng(cfg.seed + trial);
    types.clear();
    if (report.with_replacement) {
      for (uint32_t i = 0; i < n; ++i) {
        types.insert(token_ids[static_cast<size_t>(rng.below(m))]);
      }
    } else {
      for (uint64_t idx : sample_indices(m, n, rng)) {
        types.insert(token_ids[static_cast<size_t>(idx)]);
      }
    }
    const auto v = static_cast<uint32_t>(types.size());
    report.per_trial_v.push_back(v);
    v_sum += v;
  }
  report.v_mean = static_cast<double>(v_sum) / cfg.richness_trials;
  report.ratio = report.v_mean / n;
  return report;
}

namespace detail {

// Exact integer accumulation of segment lengths; the ratio-CV needs only
// n, Σℓ and Σℓ².
struct LengthMoments {
  uint64_t n = 0;
  uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;

  void add(uint64_t len) {
    ++n;
    sum += len;
    sum_sq += static_cast<unsigned __int128>(len) * len;
  }

  double mean() const { return static_cast<double>(sum) / static_cast<double>(n); }

  // Population std of ℓ/ℓ̄ = population std of ℓ divided by ℓ̄.
  double ratio_cv() const {
    const double mu = mean();
    const double ex2 = static_cast<double>(sum_sq) / static_cast<double>(n);
    const double var = ex2 - mu * mu;
    return std::sqrt(var < 0 ? 0 : var) / mu;
  }
};

// Interns tokens and keeps the side's token-id sequence for richness.
class SideAccumulator {
 public:
  explicit SideAccumulator(Tokenizer tokenizer) : tokenizer_(tokenizer) {}

  void add(std::string_view text) {
    tokenizer_.tokenize_into(text, scratch_);
    moments_.add(scratch_.size());
    for (std::string_view tok : scratch_) {
      const auto [it, inserted] =
          vocab_.try_emplace(std::string(tok), static_cast<uint32_t>(vocab_.size()));
      token_ids_.push_back(it->second);
    }
  }

  const LengthMoments& moments() const { return moments_; }
  std::span<const uint32_t> token_ids() const { return token_ids_; }

 private:
  Tokenizer tokenizer_;
  std::vector<std::string_view> scratch_;
  LengthMoments moments_;
  std::unordered_map<std::string, uint32_t> vocab_;
  std::vector<uint32_t> token_ids_;
};

}  // namespace detail

// Streaming corpus statistics: feed bisegments, then finish() once.
class StatsAccumulator {
 public:
  StatsAccumulator(Tokenizer source_tokenizer, Tokenizer target_tokenizer)
      : src_(source_tokenizer), tgt_(target_tokenizer) {}

  void add(const Bisegment& bi) {
    src_.add(bi.source.text);
    tgt_.add(bi.target.text);
  }

  uint64_t segment_count() const { return src_.moments().n; }

  CorpusStats finish(const StatsConfig& cfg) const {
    cfg.validate();
    const auto& ms = src_.moments();
    const auto& mt = tgt_.moments();
    if (ms.n == 0) throw DataError("statistics over an empty corpus");
    if (ms.sum == 0) throw DataError("source side has no tokens (mean length 0)");
    if (mt.sum == 0) throw DataError("target side has no tokens (mean length 0)");

    CorpusStats stats;
    stats.segment_count = ms.n;
    stats.tokens_src = ms.sum;
    stats.tokens_tgt = mt.sum;
    stats.mean_len_src = ms.mean();
    stats.mean_len_tgt = mt.mean();
    stats.len_ratio_cv_src = ms.ratio_cv();
    stats.len_ratio_cv_tgt = mt.ratio_cv();

    detail::LengthMoments pooled;
    pooled.n = ms.n + mt.n;
    pooled.sum = ms.sum + mt.sum;
    pooled.sum_sq = ms.sum_sq + mt.sum_sq;
    stats.mean_len_pooled = pooled.mean();
    stats.len_ratio_cv_pooled = pooled.ratio_cv();

    stats.richness_src = vocabulary_richness(src_.token_ids(), cfg);
    stats.richness_tgt = vocabulary_richness(tgt_.token_ids(), cfg);
    return stats;
  }

 private:
  detail::SideAccumulator src_;
  detail::SideAccumulator tgt_;
};

struct LengthStats {
  double mean_src = 0.0;
  double mean_tgt = 0.0;
  double mean_pooled = 0.0;
  double cv_src = 0.0;
  double cv_tgt = 0.0;
  double cv_pooled = 0.0;
};

inline LengthStats segment_length_stats(const std::vector<Bisegment>& corpus,
                                        const Tokenizer& source_tokenizer,
                                        const Tokenizer& target_tokenizer) {
  if (corpus.empty()) throw DataError("statistics over an empty corpus");
  detail::LengthMoments src;
  detail::LengthMoments tgt;
  for (const Bisegment& bi : corpus) {
    src.add(source_tokenizer.count_tokens(bi.source.text));
    tgt.add(target_tokenizer.count_tokens(bi.target.text));
  }
  if (src.sum == 0) throw DataError("source side has no tokens (mean length 0)");
  if (tgt.sum == 0) throw DataError("target side has no tokens (mean length 0)");
  detail::LengthMoments pooled;
  pooled.n = src.n + tgt.n;
  pooled.sum = src.sum + tgt.sum;
  pooled.sum_sq = src.sum_sq + tgt.sum_sq;
  return {src.mean(), tgt.mean(),    pooled.mean(),
          src.ratio_cv(), tgt.ratio_cv(), pooled.ratio_cv()};
}

inline CorpusStats corpus_report(const std::vector<Bisegment>& corpus,
                                 const Tokenizer& source_tokenizer,
                                 const Tokenizer& target_tokenizer,
                                 const StatsConfig& cfg) {
  StatsAccumulator acc(source_tokenizer, target_tokenizer);
  for (const Bisegment& bi : corpus) acc.add(bi);
  return acc.finish(cfg);
}

// One row of the corpus characteristics table.
struct StatsTableRow {
  std::string name;
  std::string production;  // "c" / "t"
  std::string cotext;      // "yes" / "no" / "n/a"
  CorpusStats stats;
};

namespace detail {

inline std::string format_count(uint64_t n) {
  if (n >= 10'000'000) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1fM", static_cast<double>(n) / 1e6);
    return buf;
  }
  std::string digits = std::to_string(n);
  std::string out;
  int c = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (c && c % 3 == 0) out.push_back(',');
    out.push_back(*it);
    ++c;
  }
  return {out.rbegin(), out.rend()};
}

inline std::string format_ratio(double r) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.3f", r);
  std::string s = buf;
  if (s.rfind("0.", 0) == 0) s.erase(0, 1);  // Table style: .442
  return s;
}

}  // namespace detail

// Plain-text table in the layout of the corpus characteristics table:
// name, production, cotext, segment count, pooled L (σ), per-side token
// counts, per-side vocabulary richness.
inline std::string render_stats_table(const std::vector<StatsTableRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"corpus", "prod", "cotext", "#", "L (s)", "mots:src",
                   "mots:tgt", "voc:src", "voc:tgt"});
  for (const auto& row : rows) {
    char len[48];
    std::snprintf(len, sizeof(len), "%.2f (%.2f)", row.stats.mean_len_pooled,
                  row.stats.len_ratio_cv_pooled);
    cells.push_back({row.name, row.production, row.cotext,
                     detail::format_count(row.stats.segment_count), len,
                     detail::format_count(row.stats.tokens_src),
                     detail::format_count(row.stats.tokens_tgt),
                     detail::format_ratio(row.stats.richness_src.ratio),
                     detail::format_ratio(row.stats.richness_tgt.ratio)});
  }
  std::vector<size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : cells) {
    for (size_t i = 0; i < row.size(); ++i) {
      const bool right = i >= 3;
      const size_t pad = widths[i] - row[i].size();
      if (i) out += "  ";
      if (right) out.append(pad, ' ');
      out += row[i];
      if (!right) out.append(pad, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

}  // namespace bitext

#endif  // BITEXT_STATS_HPP
