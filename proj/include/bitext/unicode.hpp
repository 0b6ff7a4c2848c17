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

#ifndef BITEXT_UNICODE_HPP
#define BITEXT_UNICODE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <string>
#include <string_view>

#include "bitext/unicode_tables.hpp"

namespace bitext {

inline constexpr char32_t kInvalidCp = 0xFFFFFFFF;
inline constexpr char32_t kMaxCp = 0x10FFFF;

// Decodes one scalar value starting at text[pos]. Advances pos past the
// sequence on success; on ill-formed input returns kInvalidCp and advances
// pos by one byte. Rejects overlongs, surrogates and values above U+10FFFF.
inline char32_t decode_utf8(std::string_view text, size_t& pos) {
  const auto byte = [&](size_t i) { return static_cast<uint8_t>(text[i]); };
  const uint8_t b0 = byte(pos);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  size_t len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return kInvalidCp;
  }
  if (pos + len > text.size()) {
    ++pos;
    return kInvalidCp;
  }
  for (size_t i = 1; i < len; ++i) {
    const uint8_t b = byte(pos + i);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return kInvalidCp;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMinByLen[len] || cp > kMaxCp || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kInvalidCp;
  }
  pos += len;
  return cp;
}

inline void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Byte offset of the first ill-formed sequence, or npos if valid.
inline size_t find_invalid_utf8(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    if (decode_utf8(text, pos) == kInvalidCp) return start;
  }
  return std::string_view::npos;
}

inline bool is_valid_utf8(std::string_view text) {
  return find_invalid_utf8(text) == std::string_view::npos;
}

namespace detail {

template <size_t N>
bool in_ranges(const tables::CpRange (&ranges)[N], char32_t cp) {
  auto it = std::upper_bound(
      std::begin(ranges), std::end(ranges), cp,
      [](char32_t v, const tables::CpRange& r) { return v < r.lo; });
  return it != std::begin(ranges) && cp <= std::prev(it)->hi;
}

}  // namespace detail

inline bool is_uppercase(char32_t cp) {
  return detail::in_ranges(tables::kUppercase, cp);
}

inline bool is_decimal_digit(char32_t cp) {
  return detail::in_ranges(tables::kDecimalDigit, cp);
}

inline bool is_punctuation(char32_t cp) {
  return detail::in_ranges(tables::kPunctuation, cp);
}

inline bool is_alphanumeric(char32_t cp) {
  return detail::in_ranges(tables::kAlphanumeric, cp);
}

inline bool is_whitespace(char32_t cp) {
  return detail::in_ranges(tables::kWhitespace, cp);
}

inline char32_t to_lower(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(tables::kSimpleLower), std::end(tables::kSimpleLower), cp,
      [](const tables::CpPair& p, char32_t v) { return p.from < v; });
  if (it != std::end(tables::kSimpleLower) && it->from == cp) return it->to;
  return cp;
}

inline bool is_hiragana(char32_t cp) { return cp >= 0x3041 && cp <= 0x309F; }

inline bool is_katakana(char32_t cp) {
  return (cp >= 0x30A0 && cp <= 0x30FF) || (cp >= 0x31F0 && cp <= 0x31FF) ||
         (cp >= 0xFF66 && cp <= 0xFF9D);
}

inline bool is_han(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
         (cp >= 0xF900 && cp <= 0xFAFF) || (cp >= 0x20000 && cp <= 0x2FA1F) ||
         (cp >= 0x3005 && cp <= 0x3007);
}

inline bool is_kana(char32_t cp) { return is_hiragana(cp) || is_katakana(cp); }

inline bool is_japanese(char32_t cp) { return is_kana(cp) || is_han(cp); }

inline bool is_latin_letter(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z') ||
         (cp >= 0xC0 && cp <= 0x24F && is_alphanumeric(cp)) ||
         (cp >= 0xFF21 && cp <= 0xFF3A) || (cp >= 0xFF41 && cp <= 0xFF5A);
}

// Strips leading and trailing Unicode whitespace. Interior bytes of an
// ill-formed suffix are left alone; validation is a separate step.
inline std::string_view trim(std::string_view text) {
  size_t begin = 0;
  while (begin < text.size()) {
    size_t pos = begin;
    const char32_t cp = decode_utf8(text, pos);
    if (cp == kInvalidCp || !is_whitespace(cp)) break;
    begin = pos;
  }
  size_t end = text.size();
  while (end > begin) {
    // Walk back over continuation bytes to the lead byte of the last cp.
    size_t start = end - 1;
    while (start > begin &&
           (static_cast<uint8_t>(text[start]) & 0xC0) == 0x80) {
      --start;
    }
    size_t pos = start;
    const char32_t cp = decode_utf8(text, pos);
    if (cp == kInvalidCp || pos != end || !is_whitespace(cp)) break;
    end = start;
  }
  return text.substr(begin, end - begin);
}

inline size_t count_codepoints(std::string_view text) {
  size_t n = 0;
  for (size_t pos = 0; pos < text.size(); ++n) decode_utf8(text, pos);
  return n;
}

// Single-codepoint NFKC compatibility fold. Does not reorder or compose
// combining sequences; see compat_fold() callers for the contract.
inline const char* compat_fold_cp(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(tables::kCompatFold), std::end(tables::kCompatFold), cp,
      [](const tables::CompatFold& f, char32_t v) { return f.from < v; });
  if (it != std::end(tables::kCompatFold) && it->from == cp) return it->to;
  return nullptr;
}

inline std::string compat_fold(std::string_view text) {
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
    if (const char* fold = compat_fold_cp(cp)) {
      out.append(fold);
    } else {
      out.append(text.substr(start, pos - start));
    }
  }
  return out;
}

inline std::string codepoint_name(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<uint32_t>(cp));
  return buf;
}

}  // namespace bitext

#endif  // BITEXT_UNICODE_HPP
