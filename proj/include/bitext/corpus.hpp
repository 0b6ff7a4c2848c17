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

#ifndef BITEXT_CORPUS_HPP
#define BITEXT_CORPUS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace bitext {

// Malformed or inconsistent input data. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// One side of an aligned pair: UTF-8 text plus a language tag ("ja", "fr").
struct Segment {
  std::string text;
  std::string language;
};

// The atomic unit of every pipeline stage: one aligned pair with enough
// provenance to point a report back at its source line.
struct Bisegment {
  Segment source;
  Segment target;
  std::string origin;
  uint64_t line_no = 1;  // 1-based
};

inline bool same_pair(const Bisegment& a, const Bisegment& b) {
  return a.source.text == b.source.text && a.target.text == b.target.text;
}

enum class Production { crawled, translated };

enum class Cotext { yes, no, not_applicable };

struct CorpusMeta {
  std::string name;
  Production production = Production::translated;
  Cotext has_cotext = Cotext::not_applicable;
};

inline const char* to_string(Production p) {
  return p == Production::crawled ? "crawled" : "translated";
}

inline const char* to_string(Cotext c) {
  switch (c) {
    case Cotext::yes: return "yes";
    case Cotext::no: return "no";
    default: return "not-applicable";
  }
}

inline Production production_from_string(const std::string& s) {
  if (s == "crawled") return Production::crawled;
  if (s == "translated") return Production::translated;
  throw DataError("unknown production value: " + s +
                  " (expected crawled|translated)");
}

inline Cotext cotext_from_string(const std::string& s) {
  if (s == "yes") return Cotext::yes;
  if (s == "no") return Cotext::no;
  if (s == "not-applicable" || s == "n/a") return Cotext::not_applicable;
  throw DataError("unknown has_cotext value: " + s +
                  " (expected yes|no|not-applicable)");
}

}  // namespace bitext

#endif  // BITEXT_CORPUS_HPP
