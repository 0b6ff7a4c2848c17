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

#ifndef BITEXT_TOKENIZE_HPP
#define BITEXT_TOKENIZE_HPP

#include <string_view>
#include <vector>

#include "bitext/corpus.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

// `whitespace` splits at whitespace and cuts punctuation into its own
// tokens — the usual treatment for French and similar scripts.
// `script_boundary` splits at transitions among kanji / hiragana / katakana /
// Latin / digit / punctuation runs — a stand-in for morphological analysis
// on unsegmented Japanese. Token counts will not match a real analyzer, but
// the statistics built on them (ratios, CVs) stay comparable.
enum class TokenizerKind { whitespace, script_boundary };

inline TokenizerKind tokenizer_kind_from_string(const std::string& s) {
  if (s == "whitespace") return TokenizerKind::whitespace;
  if (s == "script-boundary") return TokenizerKind::script_boundary;
  throw DataError("unknown tokenizer kind: " + s +
                  " (expected whitespace|script-boundary)");
}

class Tokenizer {
 public:
  explicit Tokenizer(TokenizerKind kind) : kind_(kind) {}

  TokenizerKind kind() const { return kind_; }

  // Views into `text`; the input must outlive the result.
  std::vector<std::string_view> tokenize(std::string_view text) const {
    std::vector<std::string_view> out;
    tokenize_into(text, out);
    return out;
  }

  void tokenize_into(std::string_view text,
                     std::vector<std::string_view>& out) const {
    out.clear();
    size_t token_start = 0;
    int token_class = kClassNone;
    size_t pos = 0;
    while (pos < text.size()) {
      const size_t start = pos;
      const char32_t cp = decode_utf8(text, pos);
      const int cls = classify(cp);
      if (cls == kClassSpace) {
        flush(text, token_start, start, token_class, out);
        token_class = kClassNone;
        continue;
      }
      if (cls != token_class) {
        flush(text, token_start, start, token_class, out);
        token_start = start;
        token_class = cls;
      }
    }
    flush(text, token_start, text.size(), token_class, out);
  }

  uint64_t count_tokens(std::string_view text) const {
    thread_local std::vector<std::string_view> scratch;
    tokenize_into(text, scratch);
    return scratch.size();
  }

 private:
  static constexpr int kClassNone = -1;
  static constexpr int kClassSpace = 0;
  static constexpr int kClassWord = 1;  // whitespace mode: everything but punct
  static constexpr int kClassPunct = 2;
  static constexpr int kClassHan = 3;
  static constexpr int kClassHiragana = 4;
  static constexpr int kClassKatakana = 5;
  static constexpr int kClassLatin = 6;
  static constexpr int kClassDigit = 7;
  static constexpr int kClassOther = 8;

  int classify(char32_t cp) const {
    if (is_whitespace(cp)) return kClassSpace;
    if (kind_ == TokenizerKind::whitespace) {
      return is_punctuation(cp) ? kClassPunct : kClassWord;
    }
    if (is_han(cp)) return kClassHan;
    if (is_hiragana(cp)) return kClassHiragana;
    if (is_katakana(cp)) return kClassKatakana;
    if (is_latin_letter(cp)) return kClassLatin;
    if (is_decimal_digit(cp)) return kClassDigit;
    if (is_punctuation(cp)) return kClassPunct;
    return kClassOther;
  }

  void flush(std::string_view text, size_t begin, size_t end, int cls,
             std::vector<std::string_view>& out) const {
    if (cls == kClassNone || cls == kClassSpace || begin >= end) return;
    if (kind_ == TokenizerKind::whitespace && cls == kClassPunct) {
      // Punctuation tokens are single characters in whitespace mode.
      size_t pos = begin;
      while (pos < end) {
        const size_t start = pos;
        decode_utf8(text, pos);
        out.push_back(text.substr(start, pos - start));
      }
      return;
    }
    out.push_back(text.substr(begin, end - begin));
  }

  TokenizerKind kind_;
};

}  // namespace bitext

#endif  // BITEXT_TOKENIZE_HPP
