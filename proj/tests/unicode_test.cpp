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

#include "bitext/unicode.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

namespace bitext {
namespace {

TEST(DecodeUtf8, AsciiAndMultibyte) {
  const std::string text = "a\xC3\xA9\xE3\x81\x82\xF0\x9F\x99\x82";  // a é あ 🙂
  size_t pos = 0;
  EXPECT_EQ(decode_utf8(text, pos), U'a');
  EXPECT_EQ(decode_utf8(text, pos), U'é');
  EXPECT_EQ(decode_utf8(text, pos), U'あ');
  EXPECT_EQ(decode_utf8(text, pos), U'\U0001F642');
  EXPECT_EQ(pos, text.size());
}

TEST(DecodeUtf8, RejectsIllFormedSequences) {
  // Overlong '/', CESU-style surrogate, beyond U+10FFFF, lone continuation,
  // truncated 3-byte head.
  const std::vector<std::string> bad = {
      "\xC0\xAF", "\xED\xA0\x80", "\xF4\x90\x80\x80", "\x80", "\xE3\x81"};
  for (const auto& text : bad) {
    size_t pos = 0;
    EXPECT_EQ(decode_utf8(text, pos), kInvalidCp) << text;
    EXPECT_EQ(pos, 1u) << "ill-formed input advances one byte";
    EXPECT_NE(find_invalid_utf8(text), std::string::npos);
    EXPECT_FALSE(is_valid_utf8(text));
  }
}

TEST(DecodeUtf8, RoundTripsRandomCodepoints) {
  std::mt19937_64 gen(7);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<char32_t> cps;
    std::string encoded;
    const int n = 1 + static_cast<int>(gen() % 40);
    for (int i = 0; i < n; ++i) {
      char32_t cp = static_cast<char32_t>(gen() % 0x110000);
      if (cp >= 0xD800 && cp <= 0xDFFF) cp = U'x';
      cps.push_back(cp);
      encode_utf8(cp, encoded);
    }
    EXPECT_EQ(find_invalid_utf8(encoded), std::string::npos);
    EXPECT_EQ(count_codepoints(encoded), cps.size());
    size_t pos = 0;
    for (char32_t expected : cps) {
      EXPECT_EQ(decode_utf8(encoded, pos), expected);
    }
    EXPECT_EQ(pos, encoded.size());
  }
}

TEST(DecodeUtf8, FindInvalidReportsByteOffset) {
  std::string text = "abc";
  text.push_back('\x80');
  EXPECT_EQ(find_invalid_utf8(text), 3u);
}

struct ClassRow {
  char32_t cp;
  bool upper, digit, punct, alnum, space;
};

// Hand-checked against the Unicode character database.
TEST(Classifiers, KnownCodepoints) {
  const std::vector<ClassRow> rows = {
      {U'A', true, false, false, true, false},
      {U'z', false, false, false, true, false},
      {U'7', false, true, false, true, false},
      {U'.', false, false, true, false, false},
      {U'(', false, false, true, false, false},
      {U' ', false, false, false, false, true},
      {U'\t', false, false, false, false, true},
      {U'É', true, false, false, true, false},   // É
      {U'é', false, false, false, true, false},  // é
      {U'Δ', true, false, false, true, false},   // Δ
      {U'あ', false, false, false, true, false},  // あ
      {U'ア', false, false, false, true, false},  // ア
      {U'猫', false, false, false, true, false},  // 猫
      {U'、', false, false, true, false, false},  // 、 ideographic comma
      {U'「', false, false, true, false, false},  // 「
      {U'«', false, false, true, false, false},  // «
      {U'　', false, false, false, false, true},  // ideographic space
      {U' ', false, false, false, false, true},  // no-break space
      {U'５', false, true, false, true, false},   // fullwidth 5
      {U'٠', false, true, false, true, false},   // Arabic-Indic zero
      {U';', false, false, true, false, false},
      {U'$', false, false, false, false, false},      // currency, not punct
      {U'+', false, false, false, false, false},      // math, not punct
      {U'—', false, false, true, false, false},  // em dash
  };
  for (const auto& row : rows) {
    EXPECT_EQ(is_uppercase(row.cp), row.upper) << codepoint_name(row.cp);
    EXPECT_EQ(is_decimal_digit(row.cp), row.digit) << codepoint_name(row.cp);
    EXPECT_EQ(is_punctuation(row.cp), row.punct) << codepoint_name(row.cp);
    EXPECT_EQ(is_alphanumeric(row.cp), row.alnum) << codepoint_name(row.cp);
    EXPECT_EQ(is_whitespace(row.cp), row.space) << codepoint_name(row.cp);
  }
}

TEST(Classifiers, ToLower) {
  EXPECT_EQ(to_lower(U'A'), U'a');
  EXPECT_EQ(to_lower(U'a'), U'a');
  EXPECT_EQ(to_lower(U'É'), U'é');  // É → é
  EXPECT_EQ(to_lower(U'Δ'), U'δ');  // Δ → δ
  EXPECT_EQ(to_lower(U'あ'), U'あ');  // あ unchanged
  EXPECT_EQ(to_lower(U'7'), U'7');
}

TEST(Scripts, MembershipAndBoundaries) {
  EXPECT_TRUE(is_hiragana(U'あ'));
  EXPECT_TRUE(is_hiragana(0x3041));
  EXPECT_TRUE(is_hiragana(0x309F));
  EXPECT_FALSE(is_hiragana(0x30A0));
  EXPECT_TRUE(is_katakana(U'ア'));
  EXPECT_TRUE(is_katakana(0x30FF));
  EXPECT_TRUE(is_katakana(0xFF66));  // halfwidth ヲ
  EXPECT_FALSE(is_katakana(U'あ'));
  EXPECT_TRUE(is_han(U'猫'));
  EXPECT_TRUE(is_han(0x3400));
  EXPECT_TRUE(is_han(0x20000));
  EXPECT_TRUE(is_han(U'々'));  // 々 iteration mark
  EXPECT_FALSE(is_han(U'A'));
  EXPECT_TRUE(is_japanese(U'あ'));
  EXPECT_TRUE(is_japanese(U'猫'));
  EXPECT_FALSE(is_japanese(U'é'));
  EXPECT_TRUE(is_latin_letter(U'q'));
  EXPECT_TRUE(is_latin_letter(U'é'));
  EXPECT_FALSE(is_latin_letter(U'Δ'));
}

TEST(Trim, UnicodeWhitespaceBothEnds) {
  EXPECT_EQ(trim("  chat  "), "chat");
  EXPECT_EQ(trim("\t chat noir\r\n"), "chat noir");
  EXPECT_EQ(trim("\xE3\x80\x80猫\xE3\x80\x80"), "猫");  // U+3000 both ends
  EXPECT_EQ(trim("\xC2\xA0学校\xC2\xA0"), "学校");      // U+00A0 both ends
  EXPECT_EQ(trim("   "), "");
  EXPECT_EQ(trim(""), "");
  EXPECT_EQ(trim("a b"), "a b");
}

TEST(Trim, ViewPointsIntoOriginal) {
  const std::string text = " abc ";
  const std::string_view trimmed = trim(text);
  EXPECT_GE(trimmed.data(), text.data());
  EXPECT_LE(trimmed.data() + trimmed.size(), text.data() + text.size());
}

TEST(CompatFold, FoldsSingleCodepointCompatibilityForms) {
  EXPECT_EQ(compat_fold("\xEF\xBC\x94"), "4");        // fullwidth ４
  EXPECT_EQ(compat_fold("\xE2\x91\xA0"), "1");        // ① circled one
  EXPECT_EQ(compat_fold("\xEF\xAC\x81"), "fi");       // ﬁ ligature
  EXPECT_EQ(compat_fold("plain text"), "plain text");
  EXPECT_EQ(compat_fold("猫"), "猫");
}

TEST(CodepointName, Format) {
  EXPECT_EQ(codepoint_name(U'A'), "U+0041");
  EXPECT_EQ(codepoint_name(0x1F600), "U+1F600");
  EXPECT_EQ(codepoint_name(0xFFFD), "U+FFFD");
}

}  // namespace
}  // namespace bitext
