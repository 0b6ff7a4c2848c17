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

#include "bitext/split.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bitext/corpus.hpp"

namespace bitext {
namespace {

Bisegment pair_of(std::string src, std::string tgt) {
  return Bisegment{{std::move(src), "ja"}, {std::move(tgt), "fr"}, "test", 0};
}

std::vector<Bisegment> unique_pairs(const std::string& prefix, int n,
                                    int start = 0) {
  std::vector<Bisegment> out;
  for (int i = start; i < start + n; ++i) {
    out.push_back(pair_of(prefix + "日" + std::to_string(i),
                          prefix + "fr" + std::to_string(i)));
  }
  return out;
}

NamedCorpus corpus_named(std::string name, std::vector<Bisegment> rows,
                         Production prod = Production::translated) {
  NamedCorpus c;
  c.meta.name = std::move(name);
  c.meta.production = prod;
  c.bisegments = std::move(rows);
  return c;
}

using PairSet = std::set<std::pair<std::string, std::string>>;

PairSet to_set(const std::vector<Bisegment>& rows) {
  PairSet s;
  for (const Bisegment& bi : rows) s.insert({bi.source.text, bi.target.text});
  return s;
}

TEST(SplitTest, ExactSizesDisjointAndConserving) {
  const std::vector<NamedCorpus> corpora = {
      corpus_named("books", unique_pairs("b", 6000)),
      corpus_named("dialogs", unique_pairs("d", 4000))};
  DatasetLayout layout;
  layout.core_members = {"books", "dialogs"};
  layout.val_size = 3000;
  layout.test_size = 3000;
  layout.seed = 17;

  const SplitResult result = assemble_and_split(corpora, layout);
  EXPECT_EQ(result.val.size(), 3000u);
  EXPECT_EQ(result.test.size(), 3000u);
  EXPECT_EQ(result.train.size(), 4000u);

  const PairSet train = to_set(result.train);
  const PairSet val = to_set(result.val);
  const PairSet test = to_set(result.test);
  ASSERT_EQ(train.size(), result.train.size()) << "train holds duplicates";
  ASSERT_EQ(val.size(), result.val.size());
  ASSERT_EQ(test.size(), result.test.size());

  PairSet all = train;
  all.insert(val.begin(), val.end());
  all.insert(test.begin(), test.end());
  EXPECT_EQ(all.size(), 10000u) << "splits overlap";

  PairSet input = to_set(corpora[0].bisegments);
  const PairSet more = to_set(corpora[1].bisegments);
  input.insert(more.begin(), more.end());
  EXPECT_EQ(all, input) << "splits lose or invent pairs";

  const SplitManifest& m = result.manifest;
  EXPECT_EQ(m.core_input_count, 10000u);
  EXPECT_EQ(m.train_count, 4000u);
  EXPECT_EQ(m.val_count, 3000u);
  EXPECT_EQ(m.test_count, 3000u);
  EXPECT_EQ(m.duplicates_removed, 0u);
  EXPECT_EQ(m.leaks_removed, 0u);
  EXPECT_EQ(m.seed, 17u);
  EXPECT_TRUE(m.complete);
}

TEST(SplitTest, DedupPrecedesSizingSoSplitsStayExact) {
  std::vector<Bisegment> rows = unique_pairs("u", 5000);
  for (int i = 0; i < 500; ++i) rows.push_back(rows[i % 5000]);  // dups
  const std::vector<NamedCorpus> corpora = {corpus_named("core", rows)};
  DatasetLayout layout;
  layout.core_members = {"core"};
  layout.val_size = 1000;
  layout.test_size = 1000;

  const SplitResult result = assemble_and_split(corpora, layout);
  EXPECT_EQ(result.manifest.duplicates_removed, 500u);
  EXPECT_EQ(result.val.size(), 1000u);
  EXPECT_EQ(result.test.size(), 1000u);
  EXPECT_EQ(result.train.size(), 3000u);
  EXPECT_EQ(result.manifest.core_input_count, 5500u);
}

TEST(SplitTest, ReservedPairsNeverLeakIntoSplits) {
  std::vector<Bisegment> core_rows = unique_pairs("c", 5000);
  std::vector<Bisegment> held_out = unique_pairs("r", 150);
  // Plant 50 reserved pairs inside the core.
  for (int i = 0; i < 50; ++i) {
    held_out.push_back(core_rows[i * 100]);
  }
  const std::vector<NamedCorpus> corpora = {corpus_named("core", core_rows)};
  DatasetLayout layout;
  layout.core_members = {"core"};
  layout.val_size = 1000;
  layout.test_size = 1000;
  layout.reserved_tests.emplace_back("heldout", held_out);

  const SplitResult result = assemble_and_split(corpora, layout);
  EXPECT_EQ(result.manifest.leaks_removed, 50u);
  EXPECT_EQ(result.manifest.duplicates_removed, 0u);
  EXPECT_EQ(result.train.size() + result.val.size() + result.test.size(),
            4950u);

  const PairSet reserved = to_set(held_out);
  for (const auto* part : {&result.train, &result.val, &result.test}) {
    for (const Bisegment& bi : *part) {
      ASSERT_EQ(reserved.count({bi.source.text, bi.target.text}), 0u)
          << "leaked: " << bi.source.text;
    }
  }

  // The reserved set passes through verbatim, order intact.
  ASSERT_EQ(result.reserved.size(), 1u);
  EXPECT_EQ(result.reserved[0].first, "heldout");
  ASSERT_EQ(result.reserved[0].second.size(), held_out.size());
  for (size_t i = 0; i < held_out.size(); ++i) {
    EXPECT_TRUE(same_pair(result.reserved[0].second[i], held_out[i]));
  }
  ASSERT_EQ(result.manifest.reserved.size(), 1u);
  EXPECT_EQ(result.manifest.reserved[0].count, 200u);
}

TEST(SplitTest, RepeatedLeakChargedToLeaksNotDups) {
  std::vector<Bisegment> core_rows = unique_pairs("c", 100);
  core_rows.push_back(core_rows[0]);  // second copy of a leaked pair
  const std::vector<NamedCorpus> corpora = {corpus_named("core", core_rows)};
  DatasetLayout layout;
  layout.core_members = {"core"};
  layout.val_size = 10;
  layout.test_size = 10;
  layout.reserved_tests.emplace_back("held", std::vector<Bisegment>{core_rows[0]});

  const SplitResult result = assemble_and_split(corpora, layout);
  EXPECT_EQ(result.manifest.leaks_removed, 2u);
  EXPECT_EQ(result.manifest.duplicates_removed, 0u);
  EXPECT_EQ(result.train.size() + result.val.size() + result.test.size(), 99u);
}

TEST(SplitTest, SeedDeterminesEverything) {
  const std::vector<NamedCorpus> corpora = {
      corpus_named("core", unique_pairs("s", 3000))};
  DatasetLayout layout;
  layout.core_members = {"core"};
  layout.val_size = 500;
  layout.test_size = 500;
  layout.seed = 7;

  const SplitResult a = assemble_and_split(corpora, layout);
  const SplitResult b = assemble_and_split(corpora, layout);
  EXPECT_EQ(a.manifest.content_digest, b.manifest.content_digest);
  EXPECT_EQ(a.manifest.config_digest, b.manifest.config_digest);
  ASSERT_EQ(a.train.size(), b.train.size());
  for (size_t i = 0; i < a.train.size(); ++i) {
    EXPECT_TRUE(same_pair(a.train[i], b.train[i]));
  }

  layout.seed = 8;
  const SplitResult c = assemble_and_split(corpora, layout);
  EXPECT_NE(a.manifest.content_digest, c.manifest.content_digest);
  EXPECT_NE(a.manifest.config_digest, c.manifest.config_digest);
  // Same pairs overall, different arrangement.
  PairSet all_a = to_set(a.train);
  PairSet all_c = to_set(c.train);
  const PairSet val_a = to_set(a.val), val_c = to_set(c.val);
  const PairSet test_a = to_set(a.test), test_c = to_set(c.test);
  all_a.insert(val_a.begin(), val_a.end());
  all_a.insert(test_a.begin(), test_a.end());
  all_c.insert(val_c.begin(), val_c.end());
  all_c.insert(test_c.begin(), test_c.end());
  EXPECT_EQ(all_a, all_c);
  EXPECT_NE(to_set(a.val), to_set(c.val));
}

TEST(SplitTest, ConfigDigestTracksLayoutFields) {
  DatasetLayout layout;
  layout.core_members = {"core"};
  const std::string base = detail::layout_config_digest(layout);
  DatasetLayout val_changed = layout;
  val_changed.val_size = 2999;
  EXPECT_NE(detail::layout_config_digest(val_changed), base);
  DatasetLayout order_changed = layout;
  order_changed.carve_before_dedup = true;
  EXPECT_NE(detail::layout_config_digest(order_changed), base);
  EXPECT_EQ(detail::layout_config_digest(layout), base);
}

TEST(SplitTest, CrawledCoreMemberIsAnError) {
  const std::vector<NamedCorpus> corpora = {
      corpus_named("web", unique_pairs("w", 100), Production::crawled)};
  DatasetLayout layout;
  layout.core_members = {"web"};
  layout.val_size = 10;
  layout.test_size = 10;
  try {
    assemble_and_split(corpora, layout);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("was not produced by translation"),
              std::string::npos);
  }
}

TEST(SplitTest, UndersizedCoreErrorNamesCounts) {
  const std::vector<NamedCorpus> corpora = {
      corpus_named("core", unique_pairs("u", 5000))};
  DatasetLayout layout;
  layout.core_members = {"core"};
  layout.val_size = 3000;
  layout.test_size = 3000;
  try {
    assemble_and_split(corpora, layout);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("5000"), std::string::npos) << msg;
    EXPECT_NE(msg.find("3000"), std::string::npos) << msg;
  }
  // Exactly val + test still fails: train would be empty.
  const std::vector<NamedCorpus> exactly = {
      corpus_named("core", unique_pairs("u", 6000))};
  EXPECT_THROW(assemble_and_split(exactly, layout), DataError);
}

TEST(SplitTest, AllowUndersizedClampsValThenTest) {
  DatasetLayout layout;
  layout.core_members = {"core"};
  layout.val_size = 3000;
  layout.test_size = 3000;
  layout.allow_undersized = true;

  const std::vector<NamedCorpus> corpora = {
      corpus_named("core", unique_pairs("u", 4000))};
  const SplitResult result = assemble_and_split(corpora, layout);
  EXPECT_EQ(result.val.size(), 3000u);
  EXPECT_EQ(result.test.size(), 1000u);
  EXPECT_EQ(result.train.size(), 0u);

  const std::vector<NamedCorpus> tiny = {
      corpus_named("core", unique_pairs("t", 2000))};
  const SplitResult small = assemble_and_split(tiny, layout);
  EXPECT_EQ(small.val.size(), 2000u);
  EXPECT_EQ(small.test.size(), 0u);
  EXPECT_EQ(small.train.size(), 0u);
}

TEST(SplitTest, CarveBeforeDedupLetsSplitsRunShort) {
  // 4000 unique + 1000 duplicate rows. Carving first fixes the cut points
  // on the raw pool, so val/test lose whatever duplicates land in them.
  std::vector<Bisegment> rows = unique_pairs("u", 4000);
  for (int i = 0; i < 1000; ++i) rows.push_back(rows[static_cast<size_t>(i) * 3]);
  const std::vector<NamedCorpus> corpora = {corpus_named("core", rows)};

  DatasetLayout layout;
  layout.core_members = {"core"};
  layout.val_size = 1000;
  layout.test_size = 1000;
  layout.seed = 5;
  layout.carve_before_dedup = true;

  const SplitResult result = assemble_and_split(corpora, layout);
  const uint64_t total =
      result.train.size() + result.val.size() + result.test.size();
  EXPECT_EQ(total + result.manifest.duplicates_removed, 5000u);
  EXPECT_EQ(result.manifest.duplicates_removed, 1000u);
  EXPECT_LE(result.val.size(), 1000u);
  EXPECT_LE(result.test.size(), 1000u);
  // With 20% duplicates it is vanishingly unlikely none land in val.
  EXPECT_LT(result.val.size(), 1000u);

  // Same pairs survive as in the default order.
  DatasetLayout default_order = layout;
  default_order.carve_before_dedup = false;
  const SplitResult dflt = assemble_and_split(corpora, default_order);
  PairSet kept_variant = to_set(result.train);
  PairSet kept_default = to_set(dflt.train);
  for (const auto* part : {&result.val, &result.test}) {
    const PairSet s = to_set(*part);
    kept_variant.insert(s.begin(), s.end());
  }
  for (const auto* part : {&dflt.val, &dflt.test}) {
    const PairSet s = to_set(*part);
    kept_default.insert(s.begin(), s.end());
  }
  EXPECT_EQ(kept_variant, kept_default);
}

TEST(SplitTest, ExtensionCorporaPassThroughWithDirections) {
  const std::vector<NamedCorpus> corpora = {
      corpus_named("core", unique_pairs("c", 300)),
      corpus_named("web", unique_pairs("w", 40), Production::crawled),
      corpus_named("extra", unique_pairs("e", 25))};
  DatasetLayout layout;
  layout.core_members = {"core"};
  layout.extension_members = {"web", "extra"};
  layout.val_size = 50;
  layout.test_size = 50;
  layout.direction_restrictions["web"] = {"tgt-src"};

  const SplitResult result = assemble_and_split(corpora, layout);
  ASSERT_EQ(result.extension.size(), 2u);
  EXPECT_EQ(result.extension[0].name, "web");
  EXPECT_EQ(result.extension[0].bisegments.size(), 40u);
  EXPECT_EQ(result.extension[0].directions, std::vector<std::string>{"tgt-src"});
  EXPECT_EQ(result.extension[1].name, "extra");
  EXPECT_EQ(result.extension[1].directions, known_directions());
  ASSERT_EQ(result.manifest.extension.size(), 2u);
  EXPECT_EQ(result.manifest.extension[0].count, 40u);

  // Extension rows are exempt from dedup against the core.
  EXPECT_EQ(result.manifest.duplicates_removed, 0u);
}

TEST(SplitTest, ContentDigestCoversEveryPart) {
  const std::vector<NamedCorpus> base = {
      corpus_named("core", unique_pairs("c", 300)),
      corpus_named("ext", unique_pairs("e", 10))};
  DatasetLayout layout;
  layout.core_members = {"core"};
  layout.extension_members = {"ext"};
  layout.val_size = 50;
  layout.test_size = 50;
  const std::string digest = assemble_and_split(base, layout).manifest.content_digest;

  std::vector<NamedCorpus> ext_changed = base;
  ext_changed[1].bisegments[3].target.text = "autre";
  EXPECT_NE(assemble_and_split(ext_changed, layout).manifest.content_digest, digest);

  DatasetLayout with_reserved = layout;
  with_reserved.reserved_tests.emplace_back("held", unique_pairs("h", 5));
  EXPECT_NE(assemble_and_split(base, with_reserved).manifest.content_digest, digest);
}

TEST(SplitTest, LayoutValidationCatchesBadConfigs) {
  DatasetLayout dup_core;
  dup_core.core_members = {"a", "a"};
  EXPECT_THROW(dup_core.validate(), DataError);

  DatasetLayout overlap;
  overlap.core_members = {"a"};
  overlap.extension_members = {"a"};
  EXPECT_THROW(overlap.validate(), DataError);

  DatasetLayout bad_name;
  bad_name.core_members = {"a/b"};
  EXPECT_THROW(bad_name.validate(), DataError);
  bad_name.core_members = {".hidden"};
  EXPECT_THROW(bad_name.validate(), DataError);
  bad_name.core_members = {""};
  EXPECT_THROW(bad_name.validate(), DataError);

  DatasetLayout stray_restriction;
  stray_restriction.core_members = {"a"};
  stray_restriction.direction_restrictions["b"] = {"src-tgt"};
  EXPECT_THROW(stray_restriction.validate(), DataError);

  DatasetLayout empty_dirs;
  empty_dirs.extension_members = {"b"};
  empty_dirs.direction_restrictions["b"] = {};
  EXPECT_THROW(empty_dirs.validate(), DataError);

  DatasetLayout bad_dir;
  bad_dir.extension_members = {"b"};
  bad_dir.direction_restrictions["b"] = {"fr-ja"};
  EXPECT_THROW(bad_dir.validate(), DataError);

  DatasetLayout ok;
  ok.core_members = {"a", "b-2.x_old"};
  ok.extension_members = {"c"};
  ok.direction_restrictions["c"] = {"src-tgt"};
  EXPECT_NO_THROW(ok.validate());
}

TEST(SplitTest, UnknownOrDuplicateCorpusNames) {
  DatasetLayout layout;
  layout.core_members = {"absent"};
  layout.val_size = 1;
  layout.test_size = 1;
  EXPECT_THROW(
      assemble_and_split({corpus_named("core", unique_pairs("c", 10))}, layout),
      DataError);

  std::vector<NamedCorpus> twice;
  twice.push_back(corpus_named("core", unique_pairs("a", 10)));
  twice.push_back(corpus_named("core", unique_pairs("b", 10)));
  layout.core_members = {"core"};
  EXPECT_THROW(assemble_and_split(twice, layout), DataError);
}

}  // namespace
}  // namespace bitext
