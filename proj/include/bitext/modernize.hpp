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

#ifndef BITEXT_MODERNIZE_HPP
#define BITEXT_MODERNIZE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bitext/corpus.hpp"
#include "bitext/filter.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

// Cleanup rules for OCRed dictionary examples whose Japanese predates the
// modern orthography.
struct ModernizationRules {
  // Historical kana to their modern forms, one codepoint to one codepoint.
  std::map<char32_t, char32_t> kana_map;
  // Literal rewrites, applied in order. The default set rewrites u-onbin
  // te-forms to the modern sokuon form behind a verb-stem guard list, since
  // an unguarded …うて→…って would corrupt nouns followed by the て particle.
  std::vector<std::pair<std::string, std::string>> conjugation_patterns;
  // Characters whose mere presence marks a segment as OCR damage.
  std::vector<char32_t> ocr_noise_chars;
  // Also reject a single Latin letter sandwiched between kana/kanji, the
  // classic OCR confusion inside Japanese text.
  bool detect_embedded_latin = true;

  static ModernizationRules defaults() {
    ModernizationRules rules;
    rules.kana_map = {
        {U'ゐ', U'い'},
        {U'ゑ', U'え'},
        {U'ヰ', U'イ'},
        {U'ヱ', U'エ'},
    };
    // Guarded stems for the うて→って rewrite. Past-tense うた is left
    // alone on purpose: 歌うたい would be corrupted.
    static const char32_t kStems[] = {U'買', U'思', U'言', U'会', U'使',
                                      U'笑', U'歌', U'払', U'洗', U'習',
                                      U'拾', U'吸', U'誘', U'願', U'疑',
                                      U'通', U'救', U'追', U'祝', U'迷'};
    for (char32_t stem : kStems) {
      std::string from;
      std::string to;
      encode_utf8(stem, from);
      encode_utf8(stem, to);
      from += "うて";
      to += "って";
      rules.conjugation_patterns.emplace_back(std::move(from), std::move(to));
    }
    // U+FFFD plus every control character except TAB.
    rules.ocr_noise_chars.push_back(0xFFFD);
    for (char32_t c = 0; c < 0x20; ++c) {
      if (c != 0x09) rules.ocr_noise_chars.push_back(c);
    }
    rules.ocr_noise_chars.push_back(0x7F);
    for (char32_t c = 0x80; c <= 0x9F; ++c) rules.ocr_noise_chars.push_back(c);
    return rules;
  }

  void validate() const {
    for (const auto& [from, to] : kana_map) {
      if (!is_kana(from) || !is_kana(to)) {
        throw DataError("kana_map entries must map kana to kana (" +
                        codepoint_name(from) + " -> " + codepoint_name(to) +
                        ")");
      }
    }
    for (const auto& [pattern, replacement] : conjugation_patterns) {
      if (pattern.empty()) throw DataError("empty conjugation pattern");
      if (count_codepoints(replacement) > count_codepoints(pattern)) {
        throw DataError("conjugation rewrite grows text: " + pattern + " -> " +
                        replacement);
      }
    }
  }
};

namespace detail {

inline bool is_single_ascii_latin(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
}

// True when the text contains a lone Latin letter with Japanese characters
// immediately on both sides, e.g. "あxい".
inline bool has_embedded_latin(std::string_view text) {
  char32_t prev2 = kInvalidCp;
  char32_t prev1 = kInvalidCp;
  size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = decode_utf8(text, pos);
    if (prev2 != kInvalidCp && is_japanese(prev2) &&
        is_single_ascii_latin(prev1) && is_japanese(cp)) {
      return true;
    }
    prev2 = prev1;
    prev1 = cp;
  }
  return false;
}

}  // namespace detail

// Decides, never edits: rejects a segment whose text shows OCR damage.
inline FilterDecision reject_ocr_noise(const Segment& seg,
                                       const ModernizationRules& rules) {
  size_t pos = 0;
  while (pos < seg.text.size()) {
    const char32_t cp = decode_utf8(seg.text, pos);
    for (char32_t noise : rules.ocr_noise_chars) {
      if (cp == noise) {
        return FilterDecision::reject(Rule::ocr_noise, codepoint_name(cp));
      }
    }
  }
  if (rules.detect_embedded_latin && detail::has_embedded_latin(seg.text)) {
    return FilterDecision::reject(Rule::ocr_noise, "embedded latin letter");
  }
  return FilterDecision::keep();
}

// ゐ → い and friends. Codepoint-by-codepoint, idempotent.
inline std::string modernize_kana(std::string_view text,
                                  const ModernizationRules& rules) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    const char32_t cp = decode_utf8(text, pos);
    if (cp == kInvalidCp) {
      out.append(text.substr(start, pos - start));
      continue;
    }
    const auto it = rules.kana_map.find(cp);
    if (it != rules.kana_map.end()) {
      encode_utf8(it->second, out);
    } else {
      out.append(text.substr(start, pos - start));
    }
  }
  return out;
}

// Applies the conjugation rewrites in list order (買うて → 買って etc.).
inline std::string modernize_conjugation(std::string_view text,
                                         const ModernizationRules& rules) {
  std::string out(text);
  for (const auto& [pattern, replacement] : rules.conjugation_patterns) {
    size_t pos = 0;
    while ((pos = out.find(pattern, pos)) != std::string::npos) {
      out.replace(pos, pattern.size(), replacement);
      pos += replacement.size();
    }
  }
  return out;
}

inline std::string modernize(std::string_view text,
                             const ModernizationRules& rules) {
  return modernize_conjugation(modernize_kana(text, rules), rules);
}

}  // namespace bitext

#endif  // BITEXT_MODERNIZE_HPP
