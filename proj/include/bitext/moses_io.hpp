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

#ifndef BITEXT_MOSES_IO_HPP
#define BITEXT_MOSES_IO_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "bitext/corpus.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

using WarnFn = std::function<void(const std::string&)>;

struct LangPair {
  std::string source;
  std::string target;
};

namespace detail {

// Line-oriented reader over one UTF-8 file. Strips a leading BOM (warned),
// validates UTF-8 per line, and trims Unicode whitespace. Memory use is one
// line at a time.
class LineReader {
 public:
  LineReader(std::filesystem::path path, WarnFn warn)
      : path_(std::move(path)), in_(path_, std::ios::binary), warn_(std::move(warn)) {
    if (!in_) throw DataError("cannot open " + path_.string());
  }

  // Trimmed line content, or nullopt at end of file.
  std::optional<std::string> next() {
    std::string line;
    if (!std::getline(in_, line)) {
      if (in_.bad()) throw DataError("read error on " + path_.string());
      return std::nullopt;
    }
    ++line_no_;
    if (line_no_ == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
      line.erase(0, 3);
      if (warn_) warn_("stripped UTF-8 BOM from " + path_.string());
    }
    const size_t bad = find_invalid_utf8(line);
    if (bad != std::string::npos) {
      throw DataError("invalid UTF-8 in " + path_.string() + " line " +
                      std::to_string(line_no_) + " at byte offset " +
                      std::to_string(bad));
    }
    const std::string_view trimmed = trim(line);
    return std::string(trimmed);
  }

  // Lines consumed so far.
  uint64_t line_no() const { return line_no_; }

  // Drains the rest of the file and returns the total line count. Used only
  // to produce exact counts in mismatch errors.
  uint64_t count_remaining() {
    std::string line;
    uint64_t n = line_no_;
    while (std::getline(in_, line)) ++n;
    return n;
  }

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  WarnFn warn_;
  uint64_t line_no_ = 0;
};

}  // namespace detail

// Streams bisegments out of a line-aligned Moses pair of files. Constant
// memory in the corpus size; a line-count mismatch or ill-formed UTF-8 is a
// hard error.
class MosesPairReader {
 public:
  MosesPairReader(const std::filesystem::path& source_path,
                  const std::filesystem::path& target_path, LangPair langs,
                  std::string origin, WarnFn warn = {})
      : src_(source_path, warn),
        tgt_(target_path, warn),
        langs_(std::move(langs)),
        origin_(std::move(origin)) {
    if (langs_.source == langs_.target) {
      throw DataError("source and target language tags are both '" +
                      langs_.source + "'");
    }
    if (langs_.source.empty() || langs_.target.empty()) {
      throw DataError("language tags must be non-empty");
    }
  }

  std::optional<Bisegment> next() {
    auto s = src_.next();
    auto t = tgt_.next();
    if (s.has_value() != t.has_value()) {
      // One side ended early; count both files out for the message.
      const uint64_t n_src = s ? src_.count_remaining() : src_.line_no();
      const uint64_t n_tgt = t ? tgt_.count_remaining() : tgt_.line_no();
      throw DataError(src_.path().string() + " vs " + tgt_.path().string() +
                      ": line count " + std::to_string(n_src) +
                      " != " + std::to_string(n_tgt));
    }
    if (!s) return std::nullopt;
    return Bisegment{Segment{std::move(*s), langs_.source},
                     Segment{std::move(*t), langs_.target}, origin_,
                     src_.line_no()};
  }

 private:
  detail::LineReader src_;
  detail::LineReader tgt_;
  LangPair langs_;
  std::string origin_;
};

// Streams bisegments out of a two-column TSV. The line splits at the first
// TAB; any further TABs belong to the target column.
class TsvReader {
 public:
  TsvReader(const std::filesystem::path& path, LangPair langs,
            std::string origin, WarnFn warn = {})
      : in_(path, warn), langs_(std::move(langs)), origin_(std::move(origin)) {
    if (langs_.source == langs_.target) {
      throw DataError("source and target language tags are both '" +
                      langs_.source + "'");
    }
  }

  std::optional<Bisegment> next() {
    auto line = in_.next();
    if (!line) return std::nullopt;
    const size_t tab = line->find('\t');
    if (tab == std::string::npos) {
      throw DataError("no TAB on line " + std::to_string(in_.line_no()) +
                      " of " + in_.path().string());
    }
    // Trimming already ran on the whole line; the split edges need their own.
    const std::string_view all(*line);
    const std::string_view src = trim(all.substr(0, tab));
    const std::string_view tgt = trim(all.substr(tab + 1));
    return Bisegment{Segment{std::string(src), langs_.source},
                     Segment{std::string(tgt), langs_.target}, origin_,
                     in_.line_no()};
  }

 private:
  detail::LineReader in_;
  LangPair langs_;
  std::string origin_;
};

struct WriteCounts {
  uint64_t bisegments = 0;
  uint64_t newlines_repaired = 0;
};

// Writes a bisegment stream back out as a Moses pair. Embedded newline runs
// inside a segment are replaced by a single space each and counted.
class MosesPairWriter {
 public:
  MosesPairWriter(const std::filesystem::path& source_path,
                  const std::filesystem::path& target_path)
      : src_path_(source_path),
        tgt_path_(target_path),
        src_(source_path, std::ios::binary),
        tgt_(target_path, std::ios::binary) {
    if (!src_) throw DataError("cannot open " + source_path.string() + " for writing");
    if (!tgt_) throw DataError("cannot open " + target_path.string() + " for writing");
  }

  void write(const Bisegment& bi) {
    write_segment(src_, src_path_, bi.source.text);
    write_segment(tgt_, tgt_path_, bi.target.text);
    ++counts_.bisegments;
  }

  // Flushes and reports. Call once after the last write.
  WriteCounts finish() {
    src_.flush();
    tgt_.flush();
    if (!src_) throw DataError("write error on " + src_path_.string());
    if (!tgt_) throw DataError("write error on " + tgt_path_.string());
    return counts_;
  }

  const WriteCounts& counts() const { return counts_; }

 private:
  void write_segment(std::ofstream& out, const std::filesystem::path& path,
                     std::string_view text) {
    size_t i = 0;
    while (i < text.size()) {
      const size_t nl = text.find_first_of("\r\n", i);
      if (nl == std::string_view::npos) {
        out.write(text.data() + i, static_cast<std::streamsize>(text.size() - i));
        break;
      }
      out.write(text.data() + i, static_cast<std::streamsize>(nl - i));
      out.put(' ');
      ++counts_.newlines_repaired;
      i = text.find_first_not_of("\r\n", nl);
      if (i == std::string_view::npos) break;
    }
    out.put('\n');
    if (!out) throw DataError("write error on " + path.string());
  }

  std::filesystem::path src_path_;
  std::filesystem::path tgt_path_;
  std::ofstream src_;
  std::ofstream tgt_;
  WriteCounts counts_;
};

}  // namespace bitext

#endif  // BITEXT_MOSES_IO_HPP
