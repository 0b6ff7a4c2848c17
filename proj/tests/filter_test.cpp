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

#include "bitext/filter.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bitext/corpus.hpp"
#include "bitext/json_io.hpp"

namespace bitext {
namespace {

Bisegment pair_of(std::string src, std::string tgt) {
  return Bisegment{{std::move(src), "ja"}, {std::move(tgt), "fr"}, "test", 0};
}

// ---------------------------------------------------------------- length --

TEST(LengthRuleTest, InclusiveByteLimit) {
  const FilterConfig cfg;
  EXPECT_TRUE(check_length(pair_of(std::string(350, 'a'), "ok"), cfg).kept());
  const FilterDecision d =
      check_length(pair_of(std::string(351, 'a'), "ok"), cfg);
  EXPECT_FALSE(d.kept());
  EXPECT_EQ(d.rule, Rule::length);
  EXPECT_EQ(d.detail, "source 351 bytes > 350");
  const FilterDecision t =
      check_length(pair_of("ok", std::string(351, 'b')), cfg);
  EXPECT_FALSE(t.kept());
  EXPECT_EQ(t.detail, "target 351 bytes > 350");
}

TEST(LengthRuleTest, EmptySegmentsReject) {
  const FilterConfig cfg;
  EXPECT_EQ(check_length(pair_of("", "vide"), cfg).detail, "empty source");
  EXPECT_EQ(check_length(pair_of("空", ""), cfg).detail, "empty target");
}

TEST(LengthRuleTest, CodepointUnitCountsCharactersNotBytes) {
  // 117 three-byte kana = 351 bytes but 117 codepoints.
  std::string kana;
  for (int i = 0; i < 117; ++i) kana += "あ";
  FilterConfig cfg;
  EXPECT_FALSE(check_length(pair_of(kana, "ok"), cfg).kept());
  cfg.length_unit = LengthUnit::codepoints;
  EXPECT_TRUE(check_length(pair_of(kana, "ok"), cfg).kept());
  cfg.max_segment_bytes = 116;
  const FilterDecision d = check_length(pair_of(kana, "ok"), cfg);
  EXPECT_FALSE(d.kept());
  EXPECT_EQ(d.detail, "source 117 codepoints > 116");
}

// ----------------------------------------------------------------- ratio --

TEST(RatioRuleTest, BoundaryKeepsAboveRejects) {
  const FilterConfig cfg;  // max ratio 3.0
  EXPECT_TRUE(check_length_ratio(
                  pair_of(std::string(30, 'x'), std::string(90, 'y')), cfg)
                  .kept());
  const FilterDecision d = check_length_ratio(
      pair_of(std::string(30, 'x'), std::string(91, 'y')), cfg);
  EXPECT_FALSE(d.kept());
  EXPECT_EQ(d.rule, Rule::ratio);
  EXPECT_EQ(d.detail.find("length ratio 91/30 > 3"), 0u) << d.detail;
}

TEST(RatioRuleTest, SymmetricInDirection) {
  const FilterConfig cfg;
  EXPECT_TRUE(check_length_ratio(
                  pair_of(std::string(90, 'x'), std::string(30, 'y')), cfg)
                  .kept());
  EXPECT_FALSE(check_length_ratio(
                   pair_of(std::string(91, 'x'), std::string(30, 'y')), cfg)
                   .kept());
}

TEST(RatioRuleTest, ZeroLengthHandling) {
  const FilterConfig cfg;
  // Both empty: ratio is vacuous (the length rule owns empties).
  EXPECT_TRUE(check_length_ratio(pair_of("", ""), cfg).kept());
  EXPECT_FALSE(check_length_ratio(pair_of("", "a"), cfg).kept());
  EXPECT_FALSE(check_length_ratio(pair_of("a", ""), cfg).kept());
}

// -------------------------------------------------------------- brackets --

TEST(BracketRuleTest, FullwidthAndAsciiShareAClass) {
  const FilterConfig cfg;
  EXPECT_TRUE(
      check_bracket_balance(pair_of("（注）を見よ", "voir (note)"), cfg).kept());
  // 「 and 『 are the same opening class: 2 opens vs 0 on the French side,
  // since guillemets are not a bracket class.
  EXPECT_FALSE(
      check_bracket_balance(pair_of("「引用」と『書名』", "« a » et « b »"), cfg)
          .kept());
}

TEST(BracketRuleTest, OpenCountMismatchNamesClassAndCounts) {
  const FilterConfig cfg;
  const FilterDecision d =
      check_bracket_balance(pair_of("(a", "b"), cfg);
  EXPECT_FALSE(d.kept());
  EXPECT_EQ(d.rule, Rule::brackets);
  EXPECT_EQ(d.detail, "open ( : 1 vs 0");
  const FilterDecision c = check_bracket_balance(pair_of("a)", "a"), cfg);
  EXPECT_EQ(c.detail, "close ) : 1 vs 0");
}

TEST(BracketRuleTest, QuoteAndLenticularClasses) {
  const FilterConfig cfg;
  // 「...」 on one side and 『...』 on the other balance out.
  EXPECT_TRUE(check_bracket_balance(pair_of("「夏」", "『été』"), cfg).kept());
  EXPECT_TRUE(check_bracket_balance(pair_of("《詩》", "〈poème〉"), cfg).kept());
  EXPECT_FALSE(check_bracket_balance(pair_of("「夏", "été"), cfg).kept());
}

TEST(BracketRuleTest, WithinSegmentBalanceIsOptIn) {
  // Matching counts across segments, unbalanced inside each.
  const Bisegment bi = pair_of(")(", ")(");
  FilterConfig cfg;
  EXPECT_TRUE(check_bracket_balance(bi, cfg).kept());
  cfg.bracket_balance_within_segment = true;
  EXPECT_TRUE(check_bracket_balance(bi, cfg).kept());  // 1 open, 1 close
  const Bisegment unbalanced = pair_of("a)", "b)");
  EXPECT_TRUE(check_bracket_balance(unbalanced, FilterConfig{}).kept());
  const FilterDecision d = check_bracket_balance(unbalanced, cfg);
  EXPECT_FALSE(d.kept());
  EXPECT_EQ(d.detail, "unbalanced ( in source: 0 vs 1");
}

// --------------------------------------------------------------- symbols --

TEST(SymbolRuleTest, RepeatedSymbolRuns) {
  const FilterConfig cfg;
  const FilterDecision d = check_symbols(pair_of("a;;;;;;b", "ok"), cfg);
  EXPECT_FALSE(d.kept());
  EXPECT_EQ(d.rule, Rule::symbols);
  EXPECT_EQ(d.detail, "symbol run ;×6");
  EXPECT_FALSE(check_symbols(pair_of("...", "ok"), cfg).kept());
  EXPECT_TRUE(check_symbols(pair_of("a;;b", "ok"), cfg).kept());  // run of 2
}

TEST(SymbolRuleTest, LetterDigitKanaRunsAreOrdinary) {
  const FilterConfig cfg;
  EXPECT_TRUE(check_symbols(pair_of("aaa", "okkk"), cfg).kept());
  EXPECT_TRUE(check_symbols(pair_of("111", "222"), cfg).kept());
  EXPECT_TRUE(check_symbols(pair_of("えええ", "aaa"), cfg).kept());
  EXPECT_TRUE(check_symbols(pair_of("カカカ", "aaa"), cfg).kept());
  EXPECT_TRUE(check_symbols(pair_of("a   b", "c   d"), cfg).kept());
  // Fullwidth exclamation marks are symbols, not Japanese text.
  EXPECT_FALSE(check_symbols(pair_of("！！！", "ok"), cfg).kept());
}

TEST(SymbolRuleTest, SpecialCharacterBudget) {
  const FilterConfig cfg;  // max 2 of \ / : ! ? $
  EXPECT_TRUE(check_symbols(pair_of("a/b:c", "ok"), cfg).kept());
  const FilterDecision d = check_symbols(pair_of("a/b:c?d", "ok"), cfg);
  EXPECT_FALSE(d.kept());
  EXPECT_EQ(d.detail, "3 special > 2");
  EXPECT_FALSE(check_symbols(pair_of("ok", "$5 et $6 et $7"), cfg).kept());
}

TEST(SymbolRuleTest, BlockedCodepoints) {
  const FilterConfig cfg;
  const FilterDecision d = check_symbols(pair_of("für alle ∀", "ok"), cfg);
  EXPECT_FALSE(d.kept());
  EXPECT_EQ(d.detail, "blocked codepoint U+2200");
  EXPECT_EQ(check_symbols(pair_of("ok", "météo ☀ demain"), cfg).detail,
            "blocked codepoint U+2600");
  EXPECT_EQ(check_symbols(pair_of("笑顔🙂です", "ok"), cfg).detail,
            "blocked codepoint U+1F642");
  EXPECT_EQ(check_symbols(pair_of("ok", "drapeau 🇫🇷"), cfg).detail,
            "blocked codepoint U+1F1EB");
  // Near misses outside the blocked ranges.
  EXPECT_TRUE(check_symbols(pair_of("tiret — cadratin", "ok"), cfg).kept());
  EXPECT_TRUE(check_symbols(pair_of("†‡§¶", "ok"), cfg).kept());
}

TEST(SymbolRuleTest, UppercaseAndDigitBudgets) {
  const FilterConfig cfg;  // max 20 each
  EXPECT_TRUE(
      check_symbols(pair_of(std::string(20, 'A') + "x", "ok"), cfg).kept());
  const FilterDecision d =
      check_symbols(pair_of(std::string(21, 'A') + "x", "ok"), cfg);
  EXPECT_FALSE(d.kept());
  EXPECT_EQ(d.detail, "21 uppercase > 20");
  // 21 digits, broken into runs so the run rule stays quiet.
  std::string digits;
  for (int i = 0; i < 21; ++i) digits += (i % 2 ? "1" : "2");
  const FilterDecision e = check_symbols(pair_of("ok", digits), cfg);
  EXPECT_FALSE(e.kept());
  EXPECT_EQ(e.detail, "21 digits > 20");
  // Accented uppercase and fullwidth digits count toward the budgets.
  std::string accented;
  for (int i = 0; i < 21; ++i) accented += (i % 2 ? "É" : "À");
  EXPECT_FALSE(check_symbols(pair_of("ok", accented), cfg).kept());
}

TEST(SymbolRuleTest, ReasonPriorityAndSegmentOrder) {
  const FilterConfig cfg;
  // Run beats blocked codepoint within one segment.
  EXPECT_EQ(check_symbols(pair_of("🙂 et ;;;;", "ok"), cfg).detail,
            "symbol run ;×4");
  // Source segment is checked before target.
  EXPECT_EQ(check_symbols(pair_of("∀", ";;;"), cfg).detail,
            "blocked codepoint U+2200");
}

// ---------------------------------------------------------------- config --

TEST(FilterConfigTest, ValidateRejectsBadSettings) {
  FilterConfig ratio_cfg;
  ratio_cfg.max_length_ratio = 1.0;
  EXPECT_THROW(ratio_cfg.validate(), DataError);

  FilterConfig overlap_cfg;
  overlap_cfg.bracket_classes.push_back({{U'('}, {U'>'}});
  EXPECT_THROW(overlap_cfg.validate(), DataError);

  FilterConfig range_cfg;
  range_cfg.blocked_codepoint_ranges.push_back({0x3000, 0x2000});
  EXPECT_THROW(range_cfg.validate(), DataError);

  EXPECT_NO_THROW(FilterConfig{}.validate());
}

TEST(FilterConfigTest, RuleNamesRoundTrip) {
  for (Rule r : {Rule::length, Rule::ratio, Rule::brackets, Rule::symbols,
                 Rule::dedup, Rule::ocr_noise}) {
    EXPECT_EQ(parse_rule(rule_name(r)), r);
  }
  EXPECT_THROW(parse_rule("lenght"), DataError);
  EXPECT_FALSE(rule_from_string("").has_value());
}

TEST(FilterConfigTest, ApplyRuleRejectsStatefulRules) {
  const FilterConfig cfg;
  EXPECT_THROW(apply_rule(Rule::dedup, pair_of("a", "b"), cfg), DataError);
  EXPECT_THROW(apply_rule(Rule::ocr_noise, pair_of("a", "b"), cfg), DataError);
}

// ----------------------------------------------------------------- dedup --

TEST(DedupTest, FirstOccurrenceWinsOnTrimmedPairs) {
  Dedup dedup;
  EXPECT_TRUE(dedup.is_new(pair_of("猫", "chat")));
  EXPECT_FALSE(dedup.is_new(pair_of("猫", "chat")));
  EXPECT_FALSE(dedup.is_new(pair_of("  猫  ", "chat")));
  EXPECT_FALSE(dedup.is_new(pair_of("猫", "　chat　")));
  EXPECT_TRUE(dedup.is_new(pair_of("猫", "chatte")));
  EXPECT_TRUE(dedup.is_new(pair_of("犬", "chat")));
  EXPECT_EQ(dedup.unique_pairs(), 3u);
}

TEST(DedupTest, StreamKeepsOrderAndFirsts) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"a", "1"}, {"b", "2"}, {"a", "1"}, {"c", "3"}, {"b", "2"}, {"a", "1"}};
  std::vector<Bisegment> input;
  for (const auto& [s, t] : rows) input.push_back(pair_of(s, t));
  size_t i = 0;
  std::vector<std::string> kept;
  const uint64_t n = dedup_stream(
      [&]() -> std::optional<Bisegment> {
        if (i >= input.size()) return std::nullopt;
        return input[i++];
      },
      [&](Bisegment&& bi) { kept.push_back(bi.source.text); });
  EXPECT_EQ(n, 3u);
  EXPECT_EQ(kept, (std::vector<std::string>{"a", "b", "c"}));
}

// -------------------------------------------------------------- pipeline --

std::vector<Bisegment> hand_fixture() {
  std::vector<Bisegment> input;
  input.push_back(pair_of("猫が好きです。", "J'aime les chats."));     // keep
  input.push_back(pair_of(std::string(351, 'a'), std::string(340, 'a')));  // length
  input.push_back(pair_of("abcdefghij", "abc"));                      // ratio 10/3
  input.push_back(pair_of("（註）を見よ", "voir la note"));            // brackets
  input.push_back(pair_of("a;;;;;;b", "okay"));                       // symbols
  input.push_back(pair_of("猫が好きです。", "J'aime les chats."));     // dedup
  input.push_back(pair_of("東京は大きい。", "Tokyo est grande."));     // keep
  input.push_back(pair_of("", "vide"));                               // length
  input.push_back(pair_of("🙂🙂", "emoji ok"));                        // symbols
  input.push_back(pair_of(" 猫が好きです。 ", "J'aime les chats."));   // dedup
  return input;
}

TEST(PipelineTest, HandFixtureAttribution) {
  const auto [kept, report] = run_pipeline(hand_fixture(), FilterConfig{});
  EXPECT_EQ(report.input_count, 10u);
  EXPECT_EQ(report.kept_count, 2u);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].source.text, "猫が好きです。");
  EXPECT_EQ(kept[1].source.text, "東京は大きい。");

  ASSERT_EQ(report.per_rule_rejections.size(), 5u);
  const auto& r = report.per_rule_rejections;
  EXPECT_EQ(r[0], (std::pair<Rule, uint64_t>{Rule::length, 2}));
  EXPECT_EQ(r[1], (std::pair<Rule, uint64_t>{Rule::ratio, 1}));
  EXPECT_EQ(r[2], (std::pair<Rule, uint64_t>{Rule::brackets, 1}));
  EXPECT_EQ(r[3], (std::pair<Rule, uint64_t>{Rule::symbols, 2}));
  EXPECT_EQ(r[4], (std::pair<Rule, uint64_t>{Rule::dedup, 2}));
  EXPECT_DOUBLE_EQ(report.retention(), 0.2);
  EXPECT_EQ(report.rejected_total() + report.kept_count, report.input_count);
}

TEST(PipelineTest, RuleOrderMovesAttributionNotTheKeptSet) {
  PipelineOptions opt;
  opt.order = {Rule::symbols, Rule::ratio, Rule::brackets, Rule::length,
               Rule::dedup};
  const auto [kept_a, report_a] = run_pipeline(hand_fixture(), FilterConfig{});
  const auto [kept_b, report_b] =
      run_pipeline(hand_fixture(), FilterConfig{}, opt);

  ASSERT_EQ(kept_a.size(), kept_b.size());
  for (size_t i = 0; i < kept_a.size(); ++i) {
    EXPECT_TRUE(same_pair(kept_a[i], kept_b[i]));
  }
  // The empty-source row now hits ratio (0 length) before length.
  const auto& r = report_b.per_rule_rejections;
  EXPECT_EQ(r[0], (std::pair<Rule, uint64_t>{Rule::symbols, 2}));
  EXPECT_EQ(r[1], (std::pair<Rule, uint64_t>{Rule::ratio, 2}));
  EXPECT_EQ(r[2], (std::pair<Rule, uint64_t>{Rule::brackets, 1}));
  EXPECT_EQ(r[3], (std::pair<Rule, uint64_t>{Rule::length, 1}));
  EXPECT_EQ(r[4], (std::pair<Rule, uint64_t>{Rule::dedup, 2}));
  EXPECT_EQ(report_b.kept_count, 2u);
}

TEST(PipelineTest, FilteringIsIdempotent) {
  const auto [kept, first] = run_pipeline(hand_fixture(), FilterConfig{});
  const auto [again, second] = run_pipeline(kept, FilterConfig{});
  EXPECT_EQ(second.input_count, first.kept_count);
  EXPECT_EQ(second.kept_count, second.input_count);
  EXPECT_DOUBLE_EQ(second.retention(), 1.0);
  ASSERT_EQ(again.size(), kept.size());
  for (size_t i = 0; i < kept.size(); ++i) {
    EXPECT_TRUE(same_pair(again[i], kept[i]));
  }
}

TEST(PipelineTest, DedupMatchesQuadraticOracle) {
  // Small alphabet forces many duplicates; dedup is the only active rule.
  std::mt19937_64 gen(7);
  std::vector<Bisegment> input;
  for (int i = 0; i < 2000; ++i) {
    const std::string s(1, static_cast<char>('a' + gen() % 6));
    const std::string t(1, static_cast<char>('p' + gen() % 6));
    input.push_back(pair_of(s, t));
  }
  PipelineOptions opt;
  opt.order = {Rule::dedup};
  opt.batch_size = 17;  // force many batches
  const auto [kept, report] = run_pipeline(input, FilterConfig{}, opt);

  std::vector<Bisegment> expected;
  std::set<std::pair<std::string, std::string>> seen;
  for (const Bisegment& bi : input) {
    if (seen.insert({bi.source.text, bi.target.text}).second) {
      expected.push_back(bi);
    }
  }
  ASSERT_EQ(kept.size(), expected.size());
  for (size_t i = 0; i < kept.size(); ++i) {
    EXPECT_TRUE(same_pair(kept[i], expected[i])) << "row " << i;
  }
  EXPECT_EQ(report.per_rule_rejections[0].second, input.size() - expected.size());
}

TEST(PipelineTest, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 gen(99);
  std::vector<Bisegment> input;
  for (int i = 0; i < 5000; ++i) {
    std::string s, t;
    const size_t ls = 1 + gen() % 30;
    for (size_t j = 0; j < ls; ++j) s += static_cast<char>('a' + gen() % 26);
    const size_t lt = 1 + gen() % 30;
    for (size_t j = 0; j < lt; ++j) t += static_cast<char>('a' + gen() % 26);
    if (gen() % 7 == 0) s += ";;;;";
    if (gen() % 11 == 0) s = "(" + s;
    input.push_back(pair_of(s, t));
  }
  PipelineOptions one;
  one.threads = 1;
  one.batch_size = 64;
  PipelineOptions four;
  four.threads = 4;
  four.batch_size = 64;
  const auto [kept_1, report_1] = run_pipeline(input, FilterConfig{}, one);
  const auto [kept_4, report_4] = run_pipeline(input, FilterConfig{}, four);
  ASSERT_EQ(kept_1.size(), kept_4.size());
  for (size_t i = 0; i < kept_1.size(); ++i) {
    ASSERT_TRUE(same_pair(kept_1[i], kept_4[i]));
  }
  EXPECT_EQ(report_1.per_rule_rejections, report_4.per_rule_rejections);
  EXPECT_EQ(report_1.input_count, report_4.input_count);
}

TEST(PipelineTest, CompatNormalizationChangesVerdictsAndOutputText) {
  // Fullwidth slashes fold to ASCII and then trip the special-char budget.
  std::vector<Bisegment> three = {pair_of("ａ／ｂ／ｃ／ｄ", "abcdefgh")};
  PipelineOptions opt;
  const auto [kept_raw, report_raw] = run_pipeline(three, FilterConfig{}, opt);
  EXPECT_EQ(kept_raw.size(), 1u);

  opt.normalize = Normalize::compat;
  const auto [kept_fold, report_fold] = run_pipeline(three, FilterConfig{}, opt);
  EXPECT_EQ(kept_fold.size(), 0u);
  EXPECT_EQ(report_fold.per_rule_rejections[3].second, 1u);  // symbols

  std::vector<Bisegment> two = {pair_of("ａ／ｂ", "abc")};
  const auto [kept_two, report_two] = run_pipeline(two, FilterConfig{}, opt);
  ASSERT_EQ(kept_two.size(), 1u);
  EXPECT_EQ(kept_two[0].source.text, "a/b");  // folded text is what flows on
}

TEST(PipelineTest, RejectsBadRuleOrders) {
  PipelineOptions dup_opt;
  dup_opt.order = {Rule::length, Rule::length};
  EXPECT_THROW(run_pipeline({}, FilterConfig{}, dup_opt), DataError);
  PipelineOptions ocr_opt;
  ocr_opt.order = {Rule::ocr_noise};
  EXPECT_THROW(run_pipeline({}, FilterConfig{}, ocr_opt), DataError);
}

TEST(PipelineTest, EmptyInputReportsRetentionOne) {
  const auto [kept, report] = run_pipeline({}, FilterConfig{});
  EXPECT_TRUE(kept.empty());
  EXPECT_EQ(report.input_count, 0u);
  EXPECT_DOUBLE_EQ(report.retention(), 1.0);
}

TEST(PipelineTest, ReportJsonShapeAndKeyOrder) {
  std::vector<Bisegment> input = {
      pair_of("猫", "chat"), pair_of("犬", "chien"),
      pair_of("a;;;;;;b", "quoi"), pair_of("猫", "chat")};
  const auto [kept, report] = run_pipeline(input, FilterConfig{});
  const ordered_json j = filter_report_to_json(report);
  EXPECT_EQ(j.dump(),
            "{\"input\":4,\"kept\":2,\"retention\":0.5,"
            "\"rejected\":{\"length\":0,\"ratio\":0,\"brackets\":0,"
            "\"symbols\":1,\"dedup\":1}}");
}

}  // namespace
}  // namespace bitext
