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

#ifndef BITEXT_FILTER_HPP
#define BITEXT_FILTER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "bitext/corpus.hpp"
#include "bitext/hash.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

enum class Rule { length, ratio, brackets, symbols, dedup, ocr_noise };

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::length: return "length";
    case Rule::ratio: return "ratio";
    case Rule::brackets: return "brackets";
    case Rule::symbols: return "symbols";
    case Rule::dedup: return "dedup";
    case Rule::ocr_noise: return "ocr_noise";
  }
  return "?";
}

inline std::optional<Rule> rule_from_string(std::string_view s) {
  for (Rule r : {Rule::length, Rule::ratio, Rule::brackets, Rule::symbols,
                 Rule::dedup, Rule::ocr_noise}) {
    if (s == rule_name(r)) return r;
  }
  return std::nullopt;
}

inline Rule parse_rule(std::string_view s) {
  const auto rule = rule_from_string(s);
  if (!rule) throw DataError("unknown rule name '" + std::string(s) + "'");
  return *rule;
}

// One opening/closing character equivalence class, e.g. {( （} / {) ）}.
// A fullwidth paren on the Japanese side matches an ASCII paren on the
// French side because both count toward the same class.
struct BracketClass {
  std::vector<char32_t> opens;
  std::vector<char32_t> closes;
};

struct CodepointRange {
  char32_t lo;
  char32_t hi;
};

enum class LengthUnit { bytes, codepoints };

inline std::vector<BracketClass> default_bracket_classes() {
  return {
      {{U'(', U'（'}, {U')', U'）'}},
      {{U'[', U'［'}, {U']', U'］'}},
      {{U'{', U'｛'}, {U'}', U'｝'}},
      {{U'「', U'『'}, {U'」', U'』'}},
      {{U'《', U'〈'}, {U'》', U'〉'}},
  };
}

// Logical/mathematical operators, misc symbols and dingbats, emoji,
// regional indicators (flags).
inline std::vector<CodepointRange> default_blocked_ranges() {
  return {{0x2200, 0x22FF}, {0x2600, 0x27BF}, {0x1F1E6, 0x1F1FF},
          {0x1F300, 0x1FAFF}};
}

struct FilterConfig {
  uint32_t max_segment_bytes = 350;
  double max_length_ratio = 3.0;
  uint32_t max_special_chars = 2;
  std::vector<char32_t> special_char_set = {U'\\', U'/', U':', U'!', U'?', U'$'};
  uint32_t max_uppercase = 20;
  uint32_t max_digits = 20;
  std::vector<BracketClass> bracket_classes = default_bracket_classes();
  std::vector<CodepointRange> blocked_codepoint_ranges = default_blocked_ranges();
  uint32_t repeated_symbol_run_min = 3;
  // Lengths and the ratio are measured in UTF-8 bytes by default; switchable
  // to codepoints.
  LengthUnit length_unit = LengthUnit::bytes;
  // Extra bracket condition (off by default): opens must equal closes within
  // each segment as well, not just across segments.
  bool bracket_balance_within_segment = false;

  void validate() const {
    if (max_length_ratio <= 1.0) {
      throw DataError("max_length_ratio must be > 1");
    }
    for (const auto& range : blocked_codepoint_ranges) {
      if (range.lo > range.hi) throw DataError("blocked range lo > hi");
    }
    // Bracket classes must not share characters.
    std::vector<char32_t> all;
    for (const auto& cls : bracket_classes) {
      all.insert(all.end(), cls.opens.begin(), cls.opens.end());
      all.insert(all.end(), cls.closes.begin(), cls.closes.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw DataError("bracket classes are not pairwise disjoint");
    }
  }
};

enum class Verdict { keep, reject };

struct FilterDecision {
  Verdict verdict = Verdict::keep;
  std::optional<Rule> rule;
  std::string detail;

  bool kept() const { return verdict == Verdict::keep; }

  static FilterDecision keep() { return {}; }
  static FilterDecision reject(Rule r, std::string detail) {
    return {Verdict::reject, r, std::move(detail)};
  }
};

struct FilterReport {
  uint64_t input_count = 0;
  uint64_t kept_count = 0;
  // Keyed in pipeline order; every enabled rule appears, zero counts
  // included, so reports across runs line up.
  std::vector<std::pair<Rule, uint64_t>> per_rule_rejections;

  double retention() const {
    if (input_count == 0) return 1.0;
    return static_cast<double>(kept_count) / static_cast<double>(input_count);
  }

  uint64_t rejected_total() const {
    uint64_t n = 0;
    for (const auto& [rule, count] : per_rule_rejections) n += count;
    return n;
  }
};

namespace detail {

inline uint64_t segment_size(std::string_view text, LengthUnit unit) {
  return unit == LengthUnit::bytes ? text.size() : count_codepoints(text);
}

inline bool in_config_ranges(const std::vector<CodepointRange>& ranges,
                             char32_t cp) {
  for (const auto& r : ranges) {
    if (cp >= r.lo && cp <= r.hi) return true;
  }
  return false;
}

inline std::string encode_cp(char32_t cp) {
  std::string s;
  encode_utf8(cp, s);
  return s;
}

}  // namespace detail

// Length rule: either segment over the byte budget, or empty, rejects.
// The limit itself is inclusive.
inline FilterDecision check_length(const Bisegment& bi, const FilterConfig& cfg) {
  if (bi.source.text.empty()) {
    return FilterDecision::reject(Rule::length, "empty source");
  }
  if (bi.target.text.empty()) {
    return FilterDecision::reject(Rule::length, "empty target");
  }
  const char* unit = cfg.length_unit == LengthUnit::bytes ? "bytes" : "codepoints";
  const uint64_t src = detail::segment_size(bi.source.text, cfg.length_unit);
  if (src > cfg.max_segment_bytes) {
    return FilterDecision::reject(
        Rule::length, "source " + std::to_string(src) + " " + unit + " > " +
                          std::to_string(cfg.max_segment_bytes));
  }
  const uint64_t tgt = detail::segment_size(bi.target.text, cfg.length_unit);
  if (tgt > cfg.max_segment_bytes) {
    return FilterDecision::reject(
        Rule::length, "target " + std::to_string(tgt) + " " + unit + " > " +
                          std::to_string(cfg.max_segment_bytes));
  }
  return FilterDecision::keep();
}

// Ratio rule: max(len)/min(len) above the limit rejects; the boundary value
// itself keeps. Symmetric, so direction does not matter.
inline FilterDecision check_length_ratio(const Bisegment& bi,
                                         const FilterConfig& cfg) {
  const uint64_t a = detail::segment_size(bi.source.text, cfg.length_unit);
  const uint64_t b = detail::segment_size(bi.target.text, cfg.length_unit);
  if (a == 0 && b == 0) return FilterDecision::keep();
  const uint64_t hi = std::max(a, b);
  const uint64_t lo = std::min(a, b);
  if (lo == 0 ||
      static_cast<double>(hi) > cfg.max_length_ratio * static_cast<double>(lo)) {
    return FilterDecision::reject(
        Rule::ratio, "length ratio " + std::to_string(hi) + "/" +
                         std::to_string(lo) + " > " +
                         std::to_string(cfg.max_length_ratio));
  }
  return FilterDecision::keep();
}

namespace detail {

struct BracketCounts {
  std::vector<uint32_t> opens;
  std::vector<uint32_t> closes;
};

inline BracketCounts count_brackets(std::string_view text,
                                    const std::vector<BracketClass>& classes) {
  BracketCounts counts;
  counts.opens.assign(classes.size(), 0);
  counts.closes.assign(classes.size(), 0);
  size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = decode_utf8(text, pos);
    for (size_t k = 0; k < classes.size(); ++k) {
      if (std::find(classes[k].opens.begin(), classes[k].opens.end(), cp) !=
          classes[k].opens.end()) {
        ++counts.opens[k];
      } else if (std::find(classes[k].closes.begin(), classes[k].closes.end(),
                           cp) != classes[k].closes.end()) {
        ++counts.closes[k];
      }
    }
  }
  return counts;
}

}  // namespace detail

// Bracket rule: for every equivalence class, the number of opening symbols
// must match across segments, and likewise the closing symbols.
inline FilterDecision check_bracket_balance(const Bisegment& bi,
                                            const FilterConfig& cfg) {
  const auto src = detail::count_brackets(bi.source.text, cfg.bracket_classes);
  const auto tgt = detail::count_brackets(bi.target.text, cfg.bracket_classes);
  for (size_t k = 0; k < cfg.bracket_classes.size(); ++k) {
    const auto& cls = cfg.bracket_classes[k];
    const std::string open_repr =
        cls.opens.empty() ? "?" : detail::encode_cp(cls.opens.front());
    const std::string close_repr =
        cls.closes.empty() ? "?" : detail::encode_cp(cls.closes.front());
    if (src.opens[k] != tgt.opens[k]) {
      return FilterDecision::reject(
          Rule::brackets, "open " + open_repr + " : " +
                              std::to_string(src.opens[k]) + " vs " +
                              std::to_string(tgt.opens[k]));
    }
    if (src.closes[k] != tgt.closes[k]) {
      return FilterDecision::reject(
          Rule::brackets, "close " + close_repr + " : " +
                              std::to_string(src.closes[k]) + " vs " +
                              std::to_string(tgt.closes[k]));
    }
    if (cfg.bracket_balance_within_segment) {
      if (src.opens[k] != src.closes[k]) {
        return FilterDecision::reject(
            Rule::brackets, "unbalanced " + open_repr + " in source: " +
                                std::to_string(src.opens[k]) + " vs " +
                                std::to_string(src.closes[k]));
      }
      if (tgt.opens[k] != tgt.closes[k]) {
        return FilterDecision::reject(
            Rule::brackets, "unbalanced " + open_repr + " in target: " +
                                std::to_string(tgt.opens[k]) + " vs " +
                                std::to_string(tgt.closes[k]));
      }
    }
  }
  return FilterDecision::keep();
}

namespace detail {

// Symbol checks for one segment; nullopt when clean. The whole segment is
// scanned first so the reported reason follows a fixed priority: symbol run,
// special-character count, blocked codepoint, uppercase count, digit count.
inline std::optional<FilterDecision> check_symbols_segment(
    std::string_view text, const FilterConfig& cfg) {
  uint32_t special = 0;
  uint32_t uppercase = 0;
  uint32_t digits = 0;
  char32_t run_cp = kInvalidCp;
  uint32_t run_len = 0;
  char32_t worst_run_cp = kInvalidCp;
  uint32_t worst_run_len = 0;
  char32_t first_blocked = kInvalidCp;

  size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = decode_utf8(text, pos);
    if (cp == run_cp) {
      ++run_len;
    } else {
      run_cp = cp;
      run_len = 1;
    }
    // Runs of letters, digits, CJK text or whitespace are ordinary; only
    // symbol runs like ";;;;;;" count.
    if (run_len >= cfg.repeated_symbol_run_min && run_len > worst_run_len &&
        !is_alphanumeric(cp) && !is_japanese(cp) && !is_whitespace(cp)) {
      worst_run_cp = cp;
      worst_run_len = run_len;
    }
    if (std::find(cfg.special_char_set.begin(), cfg.special_char_set.end(),
                  cp) != cfg.special_char_set.end()) {
      ++special;
    }
    if (first_blocked == kInvalidCp &&
        in_config_ranges(cfg.blocked_codepoint_ranges, cp)) {
      first_blocked = cp;
    }
    if (is_uppercase(cp)) ++uppercase;
    if (is_decimal_digit(cp)) ++digits;
  }
  if (worst_run_len > 0) {
    return FilterDecision::reject(
        Rule::symbols, "symbol run " + encode_cp(worst_run_cp) + "\xC3\x97" +
                           std::to_string(worst_run_len));
  }
  if (special > cfg.max_special_chars) {
    return FilterDecision::reject(
        Rule::symbols, std::to_string(special) + " special > " +
                           std::to_string(cfg.max_special_chars));
  }
  if (first_blocked != kInvalidCp) {
    return FilterDecision::reject(
        Rule::symbols, "blocked codepoint " + codepoint_name(first_blocked));
  }
  if (uppercase > cfg.max_uppercase) {
    return FilterDecision::reject(
        Rule::symbols, std::to_string(uppercase) + " uppercase > " +
                           std::to_string(cfg.max_uppercase));
  }
  if (digits > cfg.max_digits) {
    return FilterDecision::reject(Rule::symbols,
                                  std::to_string(digits) + " digits > " +
                                      std::to_string(cfg.max_digits));
  }
  return std::nullopt;
}

}  // namespace detail

// Symbol rule: per segment, rejects on a run of identical symbol characters,
// too many special characters, any blocked codepoint (logical symbols,
// emoji, flags), or more than the allowed uppercase letters / digits.
inline FilterDecision check_symbols(const Bisegment& bi,
                                    const FilterConfig& cfg) {
  if (auto d = detail::check_symbols_segment(bi.source.text, cfg)) return *d;
  if (auto d = detail::check_symbols_segment(bi.target.text, cfg)) return *d;
  return FilterDecision::keep();
}

// Stateless rule dispatch; dedup is handled by the pipeline.
inline FilterDecision apply_rule(Rule rule, const Bisegment& bi,
                                 const FilterConfig& cfg) {
  switch (rule) {
    case Rule::length: return check_length(bi, cfg);
    case Rule::ratio: return check_length_ratio(bi, cfg);
    case Rule::brackets: return check_bracket_balance(bi, cfg);
    case Rule::symbols: return check_symbols(bi, cfg);
    default:
      throw DataError(std::string("rule ") + rule_name(rule) +
                      " is not a stateless check");
  }
}

// First-occurrence-wins duplicate detector over exact trimmed pairs.
// Stores 128-bit pair hashes, not the text, so memory stays near 16 bytes
// per unique pair at 50% table load.
class Dedup {
 public:
  // True when the pair is new; inserts it.
  bool is_new(const Bisegment& bi) {
    return seen_.insert(pair_hash(trim(bi.source.text), trim(bi.target.text)));
  }

  size_t unique_pairs() const { return seen_.size(); }

 private:
  Hash128Set seen_;
};

// Convenience streaming dedup: keeps first occurrences, preserves order.
template <typename Source, typename Sink>
uint64_t dedup_stream(Source&& source, Sink&& sink) {
  Dedup dedup;
  uint64_t kept = 0;
  while (auto bi = source()) {
    if (dedup.is_new(*bi)) {
      sink(std::move(*bi));
      ++kept;
    }
  }
  return kept;
}

inline std::vector<Rule> default_rule_order() {
  return {Rule::length, Rule::ratio, Rule::brackets, Rule::symbols, Rule::dedup};
}

enum class Normalize { none, compat };

struct PipelineOptions {
  std::vector<Rule> order = default_rule_order();
  unsigned threads = 0;  // 0 = hardware concurrency
  size_t batch_size = 8192;
  // Optional pre-stage: single-codepoint compatibility fold applied to both
  // sides before any rule sees the text. Off by default.
  Normalize normalize = Normalize::none;
};

namespace detail {

inline void validate_order(const std::vector<Rule>& order) {
  std::vector<Rule> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DataError("rule order contains a duplicate rule");
  }
  for (Rule r : order) {
    if (r == Rule::ocr_noise) {
      throw DataError("ocr_noise is not a filter pipeline rule");
    }
  }
}

}  // namespace detail

// Runs the rule chain over a bisegment stream. Each bisegment is charged to
// the first rule in `order` that rejects it; survivors reach the sink in
// input order. Stateless rules are evaluated batch-parallel; dedup runs in
// the sequential pass so first-occurrence-wins follows input order.
template <typename Source, typename Sink>
FilterReport run_pipeline(Source&& source, Sink&& sink, const FilterConfig& cfg,
                          const PipelineOptions& opt = {}) {
  cfg.validate();
  detail::validate_order(opt.order);

  const size_t n_rules = opt.order.size();
  constexpr size_t kNoReject = static_cast<size_t>(-1);
  size_t dedup_pos = kNoReject;
  for (size_t i = 0; i < n_rules; ++i) {
    if (opt.order[i] == Rule::dedup) dedup_pos = i;
  }

  FilterReport report;
  for (Rule r : opt.order) report.per_rule_rejections.emplace_back(r, 0);

  unsigned threads = opt.threads != 0 ? opt.threads
                                      : std::max(1u, std::thread::hardware_concurrency());

  Dedup dedup;
  std::vector<Bisegment> batch;
  std::vector<std::pair<size_t, FilterDecision>> first_reject;  // per batch item
  batch.reserve(opt.batch_size);

  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (batch.size() < opt.batch_size) {
      auto bi = source();
      if (!bi) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*bi));
    }
    if (batch.empty()) break;

    if (opt.normalize == Normalize::compat) {
      for (Bisegment& bi : batch) {
        bi.source.text = compat_fold(bi.source.text);
        bi.target.text = compat_fold(bi.target.text);
      }
    }

    first_reject.assign(batch.size(), {kNoReject, FilterDecision::keep()});
    const auto evaluate_span = [&](size_t begin, size_t end) {
      for (size_t i = begin; i < end; ++i) {
        for (size_t p = 0; p < n_rules; ++p) {
          if (p == dedup_pos) continue;
          FilterDecision d = apply_rule(opt.order[p], batch[i], cfg);
          if (!d.kept()) {
            first_reject[i] = {p, std::move(d)};
            break;
          }
        }
      }
    };

    const size_t per_thread = (batch.size() + threads - 1) / threads;
    if (threads <= 1 || batch.size() < 2 * threads) {
      evaluate_span(0, batch.size());
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        const size_t begin = std::min(batch.size(), t * per_thread);
        const size_t end = std::min(batch.size(), begin + per_thread);
        if (begin < end) pool.emplace_back(evaluate_span, begin, end);
      }
      for (auto& th : pool) th.join();
    }

    // Sequential pass: attribution, dedup and ordered emission.
    for (size_t i = 0; i < batch.size(); ++i) {
      ++report.input_count;
      const size_t reject_pos = first_reject[i].first;
      bool rejected = false;
      for (size_t p = 0; p < n_rules; ++p) {
        if (p == dedup_pos) {
          if (!dedup.is_new(batch[i])) {
            ++report.per_rule_rejections[p].second;
            rejected = true;
            break;
          }
        } else if (reject_pos == p) {
          ++report.per_rule_rejections[p].second;
          rejected = true;
          break;
        }
      }
      if (!rejected) {
        ++report.kept_count;
        sink(std::move(batch[i]));
      }
    }
  }
  return report;
}

// Vector-in, vector-out convenience wrapper.
inline std::pair<std::vector<Bisegment>, FilterReport> run_pipeline(
    const std::vector<Bisegment>& input, const FilterConfig& cfg,
    const PipelineOptions& opt = {}) {
  std::vector<Bisegment> kept;
  size_t i = 0;
  auto source = [&]() -> std::optional<Bisegment> {
    if (i >= input.size()) return std::nullopt;
    return input[i++];
  };
  FilterReport report =
      run_pipeline(source, [&](Bisegment&& bi) { kept.push_back(std::move(bi)); },
                   cfg, opt);
  return {std::move(kept), std::move(report)};
}

}  // namespace bitext

#endif  // BITEXT_FILTER_HPP
