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

#ifndef BITEXT_METRICS_HPP
#define BITEXT_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bitext/corpus.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

// Subword segmentation marker conventions understood by strip_segmentation.
enum class SegMarker {
  sentencepiece_underbar,  // U+2581 marks a word start
  double_at_suffix,        // "@@" token suffix marks a continued word
};

inline SegMarker seg_marker_from_string(std::string_view s) {
  if (s == "sp" || s == "sentencepiece-underbar") return SegMarker::sentencepiece_underbar;
  if (s == "atat" || s == "double-at-suffix") return SegMarker::double_at_suffix;
  throw DataError("unknown segmentation marker convention '" + std::string(s) + "'");
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> tokens;
  size_t pos = 0;
  size_t start = std::string_view::npos;
  while (pos < text.size()) {
    const size_t here = pos;
    const char32_t cp = decode_utf8(text, pos);
    if (cp != kInvalidCp && is_whitespace(cp)) {
      if (start != std::string_view::npos) {
        tokens.push_back(text.substr(start, here - start));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = here;
    }
  }
  if (start != std::string_view::npos) tokens.push_back(text.substr(start));
  return tokens;
}

}  // namespace detail

// Inverts subword segmentation so scores are computed on plain words.
inline std::string strip_segmentation(std::string_view text, SegMarker marker) {
  if (marker == SegMarker::sentencepiece_underbar) {
    std::string joined;
    joined.reserve(text.size());
    for (char c : text) {
      if (c != ' ') joined.push_back(c);
    }
    std::string out;
    out.reserve(joined.size());
    size_t pos = 0;
    while (pos < joined.size()) {
      const size_t here = pos;
      const char32_t cp = decode_utf8(joined, pos);
      if (cp == U'▁') {
        out.push_back(' ');
      } else {
        out.append(joined, here, pos - here);
      }
    }
    return std::string(trim(out));
  }
  std::string out;
  bool glue = false;
  for (std::string_view tok : detail::split_ws(text)) {
    if (!glue && !out.empty()) out.push_back(' ');
    if (tok.size() >= 2 && tok.substr(tok.size() - 2) == "@@") {
      out.append(tok.substr(0, tok.size() - 2));
      glue = true;
    } else {
      out.append(tok);
      glue = false;
    }
  }
  return out;
}

// Puts single spaces around every Unicode punctuation character and collapses
// whitespace runs. Idempotent.
inline std::string separate_punctuation(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 16);
  auto append_space = [&out]() {
    if (!out.empty() && out.back() != ' ') out.push_back(' ');
  };
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t here = pos;
    const char32_t cp = decode_utf8(text, pos);
    if (cp != kInvalidCp && is_whitespace(cp)) {
      append_space();
    } else if (cp != kInvalidCp && is_punctuation(cp)) {
      append_space();
      out.append(text, here, pos - here);
      out.push_back(' ');
    } else {
      out.append(text, here, pos - here);
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

struct BleuConfig {
  uint32_t max_order = 4;
  bool case_sensitive = true;

  void validate() const {
    if (max_order < 1) throw DataError("bleu max_order must be >= 1");
  }
};

struct ChrfConfig {
  uint32_t char_order = 6;
  uint32_t word_order = 2;
  double beta = 2.0;
  // Alternative averaging: one F over order-averaged P and R instead of the
  // mean of per-order F scores.
  bool f_of_averages = false;

  void validate() const {
    if (char_order < 1) throw DataError("chrf char_order must be >= 1");
    if (!(beta > 0)) throw DataError("chrf beta must be > 0");
  }
};

namespace detail {

struct OrderTally {
  uint64_t match = 0;
  uint64_t hyp_total = 0;
  uint64_t ref_total = 0;
};

// Word n-gram key: length-prefixed token concatenation, unambiguous for any
// token content.
inline std::string word_ngram_key(std::span<const std::string> tokens, size_t at,
                                  uint32_t order) {
  std::string key;
  for (uint32_t j = 0; j < order; ++j) {
    const std::string& tok = tokens[at + j];
    key += std::to_string(tok.size());
    key.push_back(':');
    key += tok;
  }
  return key;
}

template <class Map, class MakeKey>
void count_ngrams(Map& counts, size_t item_count, uint32_t order, MakeKey&& make_key) {
  if (item_count < order) return;
  for (size_t i = 0; i + order <= item_count; ++i) {
    ++counts[make_key(i)];
  }
}

template <class Map>
void tally_pair(OrderTally& tally, const Map& hyp_counts, const Map& ref_counts,
                uint64_t hyp_total, uint64_t ref_total) {
  tally.hyp_total += hyp_total;
  tally.ref_total += ref_total;
  for (const auto& [gram, count] : hyp_counts) {
    const auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) tally.match += std::min(count, it->second);
  }
}

inline std::vector<std::string> word_tokens(std::string_view text, bool case_sensitive) {
  std::vector<std::string> tokens;
  for (std::string_view tok : split_ws(text)) {
    if (case_sensitive) {
      tokens.emplace_back(tok);
    } else {
      std::string lowered;
      lowered.reserve(tok.size());
      size_t pos = 0;
      while (pos < tok.size()) {
        const size_t here = pos;
        const char32_t cp = decode_utf8(tok, pos);
        if (cp == kInvalidCp) {
          lowered.append(tok, here, pos - here);
        } else {
          encode_utf8(to_lower(cp), lowered);
        }
      }
      tokens.push_back(std::move(lowered));
    }
  }
  return tokens;
}

inline std::u32string despaced_codepoints(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = decode_utf8(text, pos);
    if (cp != kInvalidCp && is_whitespace(cp)) continue;
    out.push_back(cp);
  }
  return out;
}

inline void check_corpus(std::span<const std::string> hyps,
                         std::span<const std::string> refs) {
  if (hyps.size() != refs.size()) {
    throw DataError("hypothesis count " + std::to_string(hyps.size()) +
                    " != reference count " + std::to_string(refs.size()));
  }
  if (hyps.empty()) throw DataError("scoring an empty corpus");
}

}  // namespace detail

struct BleuBreakdown {
  double score = 0.0;
  double brevity_penalty = 0.0;
  uint64_t hyp_length = 0;
  uint64_t ref_length = 0;
  std::vector<detail::OrderTally> orders;
  // Orders with at least one hypothesis n-gram corpus-wide; only these enter
  // the geometric mean, so short-sentence corpora still score 100 against
  // themselves.
  uint32_t effective_orders = 0;
};

// Corpus-level BLEU: clipped n-gram precisions aggregated over the corpus,
// geometric mean over effective orders, times the brevity penalty
// min(1, e^(1 - r/c)), times 100. Single reference, no smoothing.
inline BleuBreakdown bleu_breakdown(std::span<const std::string> hyps,
                                    std::span<const std::string> refs,
                                    const BleuConfig& cfg = {}) {
  cfg.validate();
  detail::check_corpus(hyps, refs);

  BleuBreakdown out;
  out.orders.resize(cfg.max_order);
  using Counts = std::unordered_map<std::string, uint64_t>;
  for (size_t i = 0; i < hyps.size(); ++i) {
    const auto hyp = detail::word_tokens(hyps[i], cfg.case_sensitive);
    const auto ref = detail::word_tokens(refs[i], cfg.case_sensitive);
    out.hyp_length += hyp.size();
    out.ref_length += ref.size();
    for (uint32_t k = 1; k <= cfg.max_order; ++k) {
      Counts hyp_counts;
      Counts ref_counts;
      detail::count_ngrams(hyp_counts, hyp.size(), k,
                           [&](size_t at) { return detail::word_ngram_key(hyp, at, k); });
      detail::count_ngrams(ref_counts, ref.size(), k,
                           [&](size_t at) { return detail::word_ngram_key(ref, at, k); });
      const uint64_t hyp_total = hyp.size() >= k ? hyp.size() - k + 1 : 0;
      const uint64_t ref_total = ref.size() >= k ? ref.size() - k + 1 : 0;
      detail::tally_pair(out.orders[k - 1], hyp_counts, ref_counts, hyp_total, ref_total);
    }
  }

  if (out.hyp_length == 0) {
    out.brevity_penalty = 0.0;
    return out;
  }
  out.brevity_penalty =
      out.hyp_length >= out.ref_length
          ? 1.0
          : std::exp(1.0 - static_cast<double>(out.ref_length) /
                               static_cast<double>(out.hyp_length));
  double log_sum = 0.0;
  bool zero_precision = false;
  for (const auto& tally : out.orders) {
    if (tally.hyp_total == 0) continue;
    ++out.effective_orders;
    if (tally.match == 0) {
      zero_precision = true;
    } else {
      log_sum += std::log(static_cast<double>(tally.match) /
                          static_cast<double>(tally.hyp_total));
    }
  }
  if (zero_precision || out.effective_orders == 0) return out;
  out.score = 100.0 * out.brevity_penalty * std::exp(log_sum / out.effective_orders);
  return out;
}

inline double bleu(std::span<const std::string> hyps, std::span<const std::string> refs,
                   const BleuConfig& cfg = {}) {
  return bleu_breakdown(hyps, refs, cfg).score;
}

struct ChrfBreakdown {
  double score = 0.0;
  // Char orders first, then word orders. Entries where neither side produced
  // a single n-gram corpus-wide are excluded from the average.
  std::vector<detail::OrderTally> orders;
  std::vector<double> f_scores;
  uint32_t effective_orders = 0;
};

// chrF: character n-grams on whitespace-free text plus word n-grams, clipped
// matches aggregated over the corpus, F_beta per order, arithmetic mean over
// orders, times 100.
inline ChrfBreakdown chrf_breakdown(std::span<const std::string> hyps,
                                    std::span<const std::string> refs,
                                    const ChrfConfig& cfg = {}) {
  cfg.validate();
  detail::check_corpus(hyps, refs);

  ChrfBreakdown out;
  const uint32_t order_count = cfg.char_order + cfg.word_order;
  out.orders.resize(order_count);

  using CharCounts = std::unordered_map<std::u32string, uint64_t>;
  using WordCounts = std::unordered_map<std::string, uint64_t>;
  for (size_t i = 0; i < hyps.size(); ++i) {
    const std::u32string hyp_chars = detail::despaced_codepoints(hyps[i]);
    const std::u32string ref_chars = detail::despaced_codepoints(refs[i]);
    for (uint32_t k = 1; k <= cfg.char_order; ++k) {
      CharCounts hyp_counts;
      CharCounts ref_counts;
      detail::count_ngrams(hyp_counts, hyp_chars.size(), k,
                           [&](size_t at) { return hyp_chars.substr(at, k); });
      detail::count_ngrams(ref_counts, ref_chars.size(), k,
                           [&](size_t at) { return ref_chars.substr(at, k); });
      const uint64_t hyp_total = hyp_chars.size() >= k ? hyp_chars.size() - k + 1 : 0;
      const uint64_t ref_total = ref_chars.size() >= k ? ref_chars.size() - k + 1 : 0;
      detail::tally_pair(out.orders[k - 1], hyp_counts, ref_counts, hyp_total, ref_total);
    }
    if (cfg.word_order > 0) {
      const auto hyp_words = detail::word_tokens(hyps[i], true);
      const auto ref_words = detail::word_tokens(refs[i], true);
      for (uint32_t k = 1; k <= cfg.word_order; ++k) {
        WordCounts hyp_counts;
        WordCounts ref_counts;
        detail::count_ngrams(hyp_counts, hyp_words.size(), k, [&](size_t at) {
          return detail::word_ngram_key(hyp_words, at, k);
        });
        detail::count_ngrams(ref_counts, ref_words.size(), k, [&](size_t at) {
          return detail::word_ngram_key(ref_words, at, k);
        });
        const uint64_t hyp_total = hyp_words.size() >= k ? hyp_words.size() - k + 1 : 0;
        const uint64_t ref_total = ref_words.size() >= k ? ref_words.size() - k + 1 : 0;
        detail::tally_pair(out.orders[cfg.char_order + k - 1], hyp_counts, ref_counts,
                           hyp_total, ref_total);
      }
    }
  }

  const double beta_sq = cfg.beta * cfg.beta;
  double f_sum = 0.0;
  double p_sum = 0.0;
  double r_sum = 0.0;
  for (const auto& tally : out.orders) {
    if (tally.hyp_total == 0 && tally.ref_total == 0) {
      out.f_scores.push_back(0.0);
      continue;
    }
    ++out.effective_orders;
    const double p =
        tally.hyp_total ? static_cast<double>(tally.match) / tally.hyp_total : 0.0;
    const double r =
        tally.ref_total ? static_cast<double>(tally.match) / tally.ref_total : 0.0;
    const double denom = beta_sq * p + r;
    const double f = denom > 0 ? (1.0 + beta_sq) * p * r / denom : 0.0;
    out.f_scores.push_back(f);
    f_sum += f;
    p_sum += p;
    r_sum += r;
  }
  if (out.effective_orders == 0) return out;
  if (cfg.f_of_averages) {
    const double p = p_sum / out.effective_orders;
    const double r = r_sum / out.effective_orders;
    const double denom = beta_sq * p + r;
    out.score = denom > 0 ? 100.0 * (1.0 + beta_sq) * p * r / denom : 0.0;
  } else {
    out.score = 100.0 * f_sum / out.effective_orders;
  }
  return out;
}

inline double chrf(std::span<const std::string> hyps, std::span<const std::string> refs,
                   const ChrfConfig& cfg = {}) {
  return chrf_breakdown(hyps, refs, cfg).score;
}

}  // namespace bitext

#endif  // BITEXT_METRICS_HPP
