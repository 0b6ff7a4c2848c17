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

#include "bitext/moses_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "bitext/corpus.hpp"

namespace bitext {
namespace {

namespace fs = std::filesystem;

class MosesIoTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("moses_io_" + std::to_string(::testing::UnitTest::GetInstance()
                                             ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()
                      ->current_test_info()
                      ->name());
    fs::create_directories(dir_);
  }

  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }

  std::vector<Bisegment> read_all(MosesPairReader& reader) {
    std::vector<Bisegment> out;
    while (auto bi = reader.next()) out.push_back(std::move(*bi));
    return out;
  }

  fs::path dir_;
  std::vector<std::string> warnings_;
  WarnFn warn_ = [this](const std::string& w) { warnings_.push_back(w); };
};

TEST_F(MosesIoTest, ReadsAlignedPair) {
  const fs::path src = write_file("a.ja", "猫が好き。\n東京\n一二三\n");
  const fs::path tgt = write_file("a.fr", "J'aime les chats.\nTokyo\nUn deux trois\n");
  MosesPairReader reader(src, tgt, {"ja", "fr"}, "books", warn_);
  const std::vector<Bisegment> all = read_all(reader);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].source.text, "猫が好き。");
  EXPECT_EQ(all[0].target.text, "J'aime les chats.");
  EXPECT_EQ(all[0].source.language, "ja");
  EXPECT_EQ(all[0].target.language, "fr");
  EXPECT_EQ(all[0].origin, "books");
  EXPECT_EQ(all[0].line_no, 1u);
  EXPECT_EQ(all[2].source.text, "一二三");
  EXPECT_EQ(all[2].line_no, 3u);
  EXPECT_TRUE(warnings_.empty());
}

TEST_F(MosesIoTest, TrimsLinesIncludingIdeographicSpace) {
  const fs::path src = write_file("s", "  hello  \n　中　\n");
  const fs::path tgt = write_file("t", "\tbonjour\t\nmilieu\n");
  MosesPairReader reader(src, tgt, {"en", "fr"}, "x", warn_);
  const std::vector<Bisegment> all = read_all(reader);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].source.text, "hello");
  EXPECT_EQ(all[0].target.text, "bonjour");
  EXPECT_EQ(all[1].source.text, "中");
}

TEST_F(MosesIoTest, HandlesCrlfAndFinalLineWithoutNewline) {
  const fs::path src = write_file("s", "one\r\ntwo\r\nthree");
  const fs::path tgt = write_file("t", "un\ndeux\ntrois");
  MosesPairReader reader(src, tgt, {"en", "fr"}, "x", warn_);
  const std::vector<Bisegment> all = read_all(reader);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].source.text, "one");
  EXPECT_EQ(all[2].source.text, "three");
  EXPECT_EQ(all[2].target.text, "trois");
}

TEST_F(MosesIoTest, StripsBomAndWarns) {
  const fs::path src = write_file("s", "\xEF\xBB\xBF第一\n第二\n");
  const fs::path tgt = write_file("t", "premier\nsecond\n");
  MosesPairReader reader(src, tgt, {"ja", "fr"}, "x", warn_);
  const std::vector<Bisegment> all = read_all(reader);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].source.text, "第一");
  ASSERT_EQ(warnings_.size(), 1u);
  EXPECT_NE(warnings_[0].find("BOM"), std::string::npos);
}

TEST_F(MosesIoTest, LineCountMismatchNamesBothCounts) {
  const fs::path src = write_file("s", "a\nb\nc\n");
  const fs::path tgt = write_file("t", "1\n2\n3\n4\n5\n");
  MosesPairReader reader(src, tgt, {"en", "fr"}, "x", warn_);
  try {
    read_all(reader);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("3 != 5"), std::string::npos) << msg;
  }
}

TEST_F(MosesIoTest, LineCountMismatchSourceLonger) {
  const fs::path src = write_file("s", "a\nb\nc\nd\n");
  const fs::path tgt = write_file("t", "1\n");
  MosesPairReader reader(src, tgt, {"en", "fr"}, "x", warn_);
  try {
    read_all(reader);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("4 != 1"), std::string::npos) << msg;
  }
}

TEST_F(MosesIoTest, InvalidUtf8NamesLineAndOffset) {
  const fs::path src = write_file("s", "ok\nab\xC0\xAF\n");
  const fs::path tgt = write_file("t", "fine\nfine\n");
  MosesPairReader reader(src, tgt, {"en", "fr"}, "x", warn_);
  try {
    read_all(reader);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("offset 2"), std::string::npos) << msg;
  }
}

TEST_F(MosesIoTest, MissingFileFailsAtConstruction) {
  const fs::path tgt = write_file("t", "x\n");
  EXPECT_THROW(MosesPairReader(dir_ / "absent", tgt, {"en", "fr"}, "x", warn_),
               DataError);
}

TEST_F(MosesIoTest, RejectsDegenerateLanguagePairs) {
  const fs::path src = write_file("s", "");
  const fs::path tgt = write_file("t", "");
  EXPECT_THROW(MosesPairReader(src, tgt, {"ja", "ja"}, "x", warn_), DataError);
  EXPECT_THROW(MosesPairReader(src, tgt, {"", "fr"}, "x", warn_), DataError);
}

TEST_F(MosesIoTest, EmptyPairYieldsNothing) {
  const fs::path src = write_file("s", "");
  const fs::path tgt = write_file("t", "");
  MosesPairReader reader(src, tgt, {"ja", "fr"}, "x", warn_);
  EXPECT_FALSE(reader.next().has_value());
}

TEST_F(MosesIoTest, TsvSplitsAtFirstTabOnly) {
  const fs::path tsv = write_file(
      "c.tsv", "こんにちは\tbonjour\n左\tdroite\tavec tab\n  a  \t  b  \n");
  TsvReader reader(tsv, {"ja", "fr"}, "web", warn_);
  std::vector<Bisegment> all;
  while (auto bi = reader.next()) all.push_back(std::move(*bi));
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].source.text, "こんにちは");
  EXPECT_EQ(all[0].target.text, "bonjour");
  EXPECT_EQ(all[1].target.text, "droite\tavec tab");
  EXPECT_EQ(all[2].source.text, "a");
  EXPECT_EQ(all[2].target.text, "b");
  EXPECT_EQ(all[0].origin, "web");
}

TEST_F(MosesIoTest, TsvMissingTabNamesLine) {
  const fs::path tsv = write_file("c.tsv", "a\tb\nno tab here\n");
  TsvReader reader(tsv, {"ja", "fr"}, "web", warn_);
  reader.next();
  try {
    reader.next();
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST_F(MosesIoTest, WriterRepairsEmbeddedNewlineRuns) {
  MosesPairWriter writer(dir_ / "o.src", dir_ / "o.tgt");
  Bisegment bi;
  bi.source = {"a\nb", "ja"};
  bi.target = {"x\r\ny et p\n\n\nq", "fr"};
  writer.write(bi);
  const WriteCounts counts = writer.finish();
  EXPECT_EQ(counts.bisegments, 1u);
  EXPECT_EQ(counts.newlines_repaired, 3u);

  std::ifstream src(dir_ / "o.src", std::ios::binary);
  std::string line;
  std::getline(src, line);
  EXPECT_EQ(line, "a b");
  EXPECT_FALSE(std::getline(src, line)) << "one output line per bisegment";
  std::ifstream tgt(dir_ / "o.tgt", std::ios::binary);
  std::getline(tgt, line);
  EXPECT_EQ(line, "x y et p q");
}

TEST_F(MosesIoTest, RoundTripIdentity) {
  // Trimmed, newline-free segments survive write-then-read untouched.
  const std::vector<std::string> alphabet = {
      "猫", "犬", "日", "語", "あ", "ん", "é", "à", "ç", "🙂",
      "a",  "Z",  "9", ".", ",", "!", "?", "(", ")", "«"};
  std::mt19937_64 gen(20260819);
  std::vector<Bisegment> corpus;
  for (int i = 0; i < 300; ++i) {
    std::string s, t;
    const size_t ls = gen() % 30;
    const size_t lt = gen() % 30;
    // Interior spaces are fine; edge whitespace would be trimmed on read.
    for (size_t j = 0; j < ls; ++j) {
      if (j == ls / 2 && j > 0) s += ' ';
      s += alphabet[gen() % alphabet.size()];
    }
    for (size_t j = 0; j < lt; ++j) t += alphabet[gen() % alphabet.size()];
    corpus.push_back(Bisegment{{s, "ja"}, {t, "fr"}, "prop", 0});
  }

  MosesPairWriter writer(dir_ / "r.src", dir_ / "r.tgt");
  for (const Bisegment& bi : corpus) writer.write(bi);
  const WriteCounts counts = writer.finish();
  EXPECT_EQ(counts.bisegments, 300u);
  EXPECT_EQ(counts.newlines_repaired, 0u);

  MosesPairReader reader(dir_ / "r.src", dir_ / "r.tgt", {"ja", "fr"}, "prop",
                         warn_);
  const std::vector<Bisegment> back = read_all(reader);
  ASSERT_EQ(back.size(), corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(back[i].source.text, corpus[i].source.text) << "row " << i;
    EXPECT_EQ(back[i].target.text, corpus[i].target.text) << "row " << i;
  }
}

}  // namespace
}  // namespace bitext
