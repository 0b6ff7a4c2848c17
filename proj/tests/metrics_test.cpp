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

#include "bitext/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bitext/corpus.hpp"

namespace bitext {
namespace {

// ------------------------------------------------------------------------
// Reference implementations, written independently with naive containers.
// They only handle ASCII input, which the random corpora stick to.
// ------------------------------------------------------------------------

std::vector<std::string> naive_split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

using NgramCounts = std::map<std::vector<std::string>, uint64_t>;

NgramCounts naive_ngrams(const std::vector<std::string>& items, uint32_t k) {
  NgramCounts counts;
  if (items.size() < k) return counts;
  for (size_t i = 0; i + k <= items.size(); ++i) {
    std::vector<std::string> gram(items.begin() + static_cast<ptrdiff_t>(i),
                                  items.begin() + static_cast<ptrdiff_t>(i + k));
    ++counts[gram];
  }
  return counts;
}

uint64_t naive_clipped_matches(const NgramCounts& hyp, const NgramCounts& ref) {
  uint64_t m = 0;
  for (const auto& [gram, count] : hyp) {
    const auto it = ref.find(gram);
    if (it != ref.end()) m += std::min(count, it->second);
  }
  return m;
}

double oracle_bleu(const std::vector<std::string>& hyps,
                   const std::vector<std::string>& refs, uint32_t max_order) {
  std::vector<uint64_t> match(max_order, 0), total(max_order, 0);
  uint64_t c = 0, r = 0;
  for (size_t i = 0; i < hyps.size(); ++i) {
    const auto hyp = naive_split(hyps[i]);
    const auto ref = naive_split(refs[i]);
    c += hyp.size();
    r += ref.size();
    for (uint32_t k = 1; k <= max_order; ++k) {
      match[k - 1] += naive_clipped_matches(naive_ngrams(hyp, k), naive_ngrams(ref, k));
      if (hyp.size() >= k) total[k - 1] += hyp.size() - k + 1;
    }
  }
  if (c == 0) return 0.0;
  const double bp = c >= r ? 1.0 : std::exp(1.0 - static_cast<double>(r) / c);
  uint32_t effective = 0;
  double log_sum = 0.0;
  for (uint32_t k = 0; k < max_order; ++k) {
    if (total[k] == 0) continue;
    ++effective;
    if (match[k] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(match[k]) / static_cast<double>(total[k]));
  }
  if (effective == 0) return 0.0;
  return 100.0 * bp * std::exp(log_sum / effective);
}

// Character items for chrF: whitespace removed, one string per byte.
std::vector<std::string> naive_chars(const std::string& s) {
  std::vector<std::string> out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.emplace_back(1, ch);
  }
  return out;
}

double oracle_chrf(const std::vector<std::string>& hyps,
                   const std::vector<std::string>& refs, uint32_t char_order,
                   uint32_t word_order, double beta) {
  const uint32_t orders = char_order + word_order;
  std::vector<uint64_t> match(orders, 0), hyp_total(orders, 0), ref_total(orders, 0);
  for (size_t i = 0; i < hyps.size(); ++i) {
    const auto hyp_chars = naive_chars(hyps[i]);
    const auto ref_chars = naive_chars(refs[i]);
    const auto hyp_words = naive_split(hyps[i]);
    const auto ref_words = naive_split(refs[i]);
    for (uint32_t k = 1; k <= orders; ++k) {
      const bool word = k > char_order;
      const auto& h = word ? hyp_words : hyp_chars;
      const auto& r = word ? ref_words : ref_chars;
      const uint32_t n = word ? k - char_order : k;
      match[k - 1] += naive_clipped_matches(naive_ngrams(h, n), naive_ngrams(r, n));
      if (h.size() >= n) hyp_total[k - 1] += h.size() - n + 1;
      if (r.size() >= n) ref_total[k - 1] += r.size() - n + 1;
    }
  }
  const double b2 = beta * beta;
  double f_sum = 0.0;
  uint32_t effective = 0;
  for (uint32_t k = 0; k < orders; ++k) {
    if (hyp_total[k] == 0 && ref_total[k] == 0) continue;
    ++effective;
    const double p = hyp_total[k] ? static_cast<double>(match[k]) / hyp_total[k] : 0.0;
    const double r = ref_total[k] ? static_cast<double>(match[k]) / ref_total[k] : 0.0;
    const double denom = b2 * p + r;
    f_sum += denom > 0 ? (1.0 + b2) * p * r / denom : 0.0;
  }
  return effective ? 100.0 * f_sum / effective : 0.0;
}

std::vector<std::string> random_corpus(std::mt19937_64& gen, size_t sentences,
                                       bool allow_empty = true) {
  static const std::vector<std::string> vocab = {"le",   "chat", "noir", "dort",
                                                 "sur",  "tapis", "un",  "grand",
                                                 "chien", "mange"};
  std::vector<std::string> out;
  for (size_t i = 0; i < sentences; ++i) {
    const size_t len = gen() % 13;
    std::string s;
    for (size_t j = 0; j < len; ++j) {
      if (!s.empty()) s += ' ';
      s += vocab[gen() % vocab.size()];
    }
    if (s.empty() && !allow_empty) s = vocab[gen() % vocab.size()];
    out.push_back(s);
  }
  return out;
}

// ------------------------------------------------------------------ BLEU --

TEST(BleuTest, IdentityScoresExactlyOneHundred) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto corpus = random_corpus(gen, 1 + gen() % 20, /*allow_empty=*/false);
    EXPECT_NEAR(bleu(corpus, corpus), 100.0, 1e-9);
  }
  // Single one-word sentence: only unigrams exist, still a perfect score.
  const std::vector<std::string> tiny = {"chat"};
  EXPECT_NEAR(bleu(tiny, tiny), 100.0, 1e-12);
}

TEST(BleuTest, AgreesWithBruteForceOracle) {
  std::mt19937_64 gen(20260819);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 5 + gen() % 26;
    const auto hyps = random_corpus(gen, n);
    const auto refs = random_corpus(gen, n);
    for (const uint32_t order : {1u, 2u, 4u}) {
      BleuConfig cfg;
      cfg.max_order = order;
      ASSERT_NEAR(bleu(hyps, refs, cfg), oracle_bleu(hyps, refs, order), 1e-9)
          << "trial " << trial << " order " << order;
    }
  }
}

TEST(BleuTest, RepeatedWordHandExample) {
  // Hypothesis repeats one reference word: clipping caps the unigram
  // matches at 1, so p1 = 1/4; the higher orders have no match at all.
  const std::vector<std::string> hyps = {"the the the the"};
  const std::vector<std::string> refs = {"the cat"};
  BleuConfig unigram;
  unigram.max_order = 1;
  // c=4 >= r=2, so the brevity penalty clamps to 1 and the score is
  // 100 * (1/4) = 25.
  EXPECT_NEAR(bleu(hyps, refs, unigram), 25.0, 1e-12);
  // With 4-gram scoring a zero precision at order 2 zeroes everything.
  EXPECT_DOUBLE_EQ(bleu(hyps, refs), 0.0);

  const BleuBreakdown b = bleu_breakdown(hyps, refs, unigram);
  EXPECT_EQ(b.orders[0].match, 1u);
  EXPECT_EQ(b.orders[0].hyp_total, 4u);
  EXPECT_DOUBLE_EQ(b.brevity_penalty, 1.0);
}

TEST(BleuTest, BrevityPenaltyHandExample) {
  // Perfect precisions, hypothesis half the reference length:
  // BP = exp(1 - 4/2) = e^-1.
  const std::vector<std::string> hyps = {"a b"};
  const std::vector<std::string> refs = {"a b c d"};
  EXPECT_NEAR(bleu(hyps, refs), 100.0 * std::exp(-1.0), 1e-9);
  const BleuBreakdown b = bleu_breakdown(hyps, refs);
  EXPECT_NEAR(b.brevity_penalty, std::exp(-1.0), 1e-12);
  EXPECT_EQ(b.effective_orders, 2u);  // orders 3 and 4 have no hyp n-grams
}

TEST(BleuTest, ClippingHandExample) {
  // p1 = min(3,2)/3 = 2/3; p2 = min(2,1)/2 = 1/2; BP = 1.
  const std::vector<std::string> hyps = {"a a a"};
  const std::vector<std::string> refs = {"a a"};
  BleuConfig cfg;
  cfg.max_order = 2;
  EXPECT_NEAR(bleu(hyps, refs, cfg), 100.0 * std::sqrt(1.0 / 3.0), 1e-9);
}

TEST(BleuTest, EmptyHypothesisScoresZero) {
  const std::vector<std::string> hyps = {"", ""};
  const std::vector<std::string> refs = {"le chat", "noir"};
  const BleuBreakdown b = bleu_breakdown(hyps, refs);
  EXPECT_DOUBLE_EQ(b.score, 0.0);
  EXPECT_DOUBLE_EQ(b.brevity_penalty, 0.0);
  EXPECT_EQ(b.hyp_length, 0u);
  EXPECT_EQ(b.ref_length, 3u);
}

TEST(BleuTest, CaseSensitivityIsConfigurable) {
  const std::vector<std::string> hyps = {"Le Chat"};
  const std::vector<std::string> refs = {"le chat"};
  EXPECT_LT(bleu(hyps, refs), 100.0);
  BleuConfig folded;
  folded.case_sensitive = false;
  EXPECT_NEAR(bleu(hyps, refs, folded), 100.0, 1e-9);
}

TEST(BleuTest, CorpusAggregationIsNotSentenceAveraging) {
  // One perfect short sentence, one poor long one: pooled counts weight
  // the long sentence, a per-sentence average would not.
  const std::vector<std::string> hyps = {"oui", "a b c d e f g h"};
  const std::vector<std::string> refs = {"oui", "x y z w v u t s"};
  BleuConfig cfg;
  cfg.max_order = 1;
  const double corpus = bleu(hyps, refs, cfg);
  const std::vector<std::string> h0 = {hyps[0]}, r0 = {refs[0]};
  const std::vector<std::string> h1 = {hyps[1]}, r1 = {refs[1]};
  const double mean_of_scores = (bleu(h0, r0, cfg) + bleu(h1, r1, cfg)) / 2;
  EXPECT_NEAR(corpus, 100.0 / 9.0, 1e-9);  // 1 match over 9 unigrams
  EXPECT_NEAR(mean_of_scores, 50.0, 1e-9);
  EXPECT_NE(corpus, mean_of_scores);
}

TEST(BleuTest, SentenceOrderDoesNotMatter) {
  std::mt19937_64 gen(7);
  const size_t n = 12;
  auto hyps = random_corpus(gen, n);
  auto refs = random_corpus(gen, n);
  const double before = bleu(hyps, refs);
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), gen);
  std::vector<std::string> hyps_p, refs_p;
  for (const size_t i : perm) {
    hyps_p.push_back(hyps[i]);
    refs_p.push_back(refs[i]);
  }
  EXPECT_NEAR(bleu(hyps_p, refs_p), before, 1e-9);
}

TEST(BleuTest, InputValidation) {
  const std::vector<std::string> one = {"a"};
  const std::vector<std::string> two = {"a", "b"};
  EXPECT_THROW(bleu(one, two), DataError);
  EXPECT_THROW(bleu({}, {}), DataError);
  BleuConfig bad;
  bad.max_order = 0;
  EXPECT_THROW(bleu(one, one, bad), DataError);
}

// ------------------------------------------------------------------ chrF --

TEST(ChrfTest, IdentityScoresExactlyOneHundred) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto corpus = random_corpus(gen, 1 + gen() % 20, /*allow_empty=*/false);
    EXPECT_NEAR(chrf(corpus, corpus), 100.0, 1e-9);
  }
  const std::vector<std::string> tiny = {"ab"};
  EXPECT_NEAR(chrf(tiny, tiny), 100.0, 1e-12);
}

TEST(ChrfTest, AgreesWithBruteForceOracle) {
  std::mt19937_64 gen(31415);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 5 + gen() % 26;
    const auto hyps = random_corpus(gen, n);
    const auto refs = random_corpus(gen, n);
    for (const auto& [co, wo, beta] :
         std::vector<std::tuple<uint32_t, uint32_t, double>>{
             {6, 2, 2.0}, {6, 0, 2.0}, {3, 1, 1.0}, {1, 2, 0.5}}) {
      ChrfConfig cfg;
      cfg.char_order = co;
      cfg.word_order = wo;
      cfg.beta = beta;
      ASSERT_NEAR(chrf(hyps, refs, cfg), oracle_chrf(hyps, refs, co, wo, beta),
                  1e-9)
          << "trial " << trial << " co " << co << " wo " << wo << " b " << beta;
    }
  }
}

TEST(ChrfTest, TwoOrderHandExample) {
  // hyp "cat" vs ref "car": 1-gram F1 = 2/3, 2-gram F1 = 1/2,
  // mean = 7/12 -> 58.33 at two decimals.
  const std::vector<std::string> hyps = {"cat"};
  const std::vector<std::string> refs = {"car"};
  ChrfConfig cfg;
  cfg.char_order = 2;
  cfg.word_order = 0;
  cfg.beta = 1.0;
  EXPECT_NEAR(chrf(hyps, refs, cfg), 100.0 * 7.0 / 12.0, 1e-9);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.2f", chrf(hyps, refs, cfg));
  EXPECT_STREQ(buf, "58.33");
}

TEST(ChrfTest, BetaWeightsRecall) {
  // hyp "ab" vs ref "abcd", single char order: P = 1, R = 1/2.
  const std::vector<std::string> hyps = {"ab"};
  const std::vector<std::string> refs = {"abcd"};
  ChrfConfig cfg;
  cfg.char_order = 1;
  cfg.word_order = 0;
  cfg.beta = 1.0;
  EXPECT_NEAR(chrf(hyps, refs, cfg), 100.0 * 2.0 / 3.0, 1e-9);
  cfg.beta = 2.0;
  EXPECT_NEAR(chrf(hyps, refs, cfg), 100.0 * 5.0 / 9.0, 1e-9);
}

TEST(ChrfTest, BetaOneIsSymmetricUnderSwap) {
  std::mt19937_64 gen(99);
  ChrfConfig cfg;
  cfg.beta = 1.0;
  for (int trial = 0; trial < 30; ++trial) {
    const size_t n = 3 + gen() % 10;
    const auto a = random_corpus(gen, n);
    const auto b = random_corpus(gen, n);
    EXPECT_NEAR(chrf(a, b, cfg), chrf(b, a, cfg), 1e-9);
  }
}

TEST(ChrfTest, CharOrdersIgnoreSpacing) {
  const std::vector<std::string> spaced = {"a b c"};
  const std::vector<std::string> glued = {"abc"};
  ChrfConfig chars_only;
  chars_only.word_order = 0;
  EXPECT_NEAR(chrf(spaced, glued, chars_only), 100.0, 1e-9);
  // Word orders see the difference.
  EXPECT_LT(chrf(spaced, glued, ChrfConfig{}), 100.0);
}

TEST(ChrfTest, VacuousOrdersAreSkipped) {
  // Three characters, one word: char orders 4..6 and word order 2 have no
  // n-grams on either side and drop out of the average.
  const std::vector<std::string> corpus = {"abc"};
  const ChrfBreakdown b = chrf_breakdown(corpus, corpus);
  EXPECT_EQ(b.effective_orders, 4u);
  EXPECT_NEAR(b.score, 100.0, 1e-12);
  ASSERT_EQ(b.orders.size(), 8u);
  EXPECT_EQ(b.orders[3].hyp_total, 0u);
}

TEST(ChrfTest, DisjointTextsScoreZero) {
  const std::vector<std::string> hyps = {"aaa bbb"};
  const std::vector<std::string> refs = {"zzz www"};
  EXPECT_DOUBLE_EQ(chrf(hyps, refs), 0.0);
}

TEST(ChrfTest, FOfAveragesAlternative) {
  // Orders: char1 P=1 R=1/2, char2 P=1 R=1/3.
  // Mean of F1: (2/3 + 1/2) / 2 = 7/12.
  // F1 of averaged P and R: P = 1, R = 5/12, F = 10/17.
  const std::vector<std::string> hyps = {"ab"};
  const std::vector<std::string> refs = {"abcd"};
  ChrfConfig cfg;
  cfg.char_order = 2;
  cfg.word_order = 0;
  cfg.beta = 1.0;
  EXPECT_NEAR(chrf(hyps, refs, cfg), 100.0 * 7.0 / 12.0, 1e-9);
  cfg.f_of_averages = true;
  EXPECT_NEAR(chrf(hyps, refs, cfg), 100.0 * 10.0 / 17.0, 1e-9);
}

TEST(ChrfTest, MultibyteCharactersAreSingleUnits) {
  // Four kana codepoints; a byte-based implementation would disagree.
  const std::vector<std::string> hyps = {"ねこがい"};
  const std::vector<std::string> refs = {"ねこがく"};
  ChrfConfig cfg;
  cfg.char_order = 1;
  cfg.word_order = 0;
  cfg.beta = 1.0;
  EXPECT_NEAR(chrf(hyps, refs, cfg), 100.0 * 3.0 / 4.0, 1e-9);
}

TEST(ChrfTest, InputValidation) {
  const std::vector<std::string> one = {"a"};
  EXPECT_THROW(chrf(one, {}), DataError);
  ChrfConfig bad;
  bad.char_order = 0;
  EXPECT_THROW(chrf(one, one, bad), DataError);
  bad = ChrfConfig{};
  bad.beta = 0.0;
  EXPECT_THROW(chrf(one, one, bad), DataError);
}

// ---------------------------------------------------- post-processing --

TEST(StripSegmentationTest, SentencepieceUnderbar) {
  const SegMarker sp = SegMarker::sentencepiece_underbar;
  EXPECT_EQ(strip_segmentation("▁le ▁chat", sp), "le chat");
  EXPECT_EQ(strip_segmentation("▁l ' ambassade", sp), "l'ambassade");
  EXPECT_EQ(strip_segmentation("▁chat", sp), "chat");
  EXPECT_EQ(strip_segmentation("", sp), "");
  EXPECT_EQ(strip_segmentation("▁un ▁gr and ▁chien", sp), "un grand chien");
}

TEST(StripSegmentationTest, DoubleAtSuffix) {
  const SegMarker atat = SegMarker::double_at_suffix;
  EXPECT_EQ(strip_segmentation("cha@@ t noir", atat), "chat noir");
  EXPECT_EQ(strip_segmentation("l@@ '@@ ambassade", atat), "l'ambassade");
  EXPECT_EQ(strip_segmentation("intact", atat), "intact");
  EXPECT_EQ(strip_segmentation("", atat), "");
  EXPECT_EQ(strip_segmentation("ab@@", atat), "ab");  // dangling continuation
}

TEST(StripSegmentationTest, EncodeThenStripRoundTrip) {
  // Randomly re-segment plain sentences with both conventions; stripping
  // must restore the original exactly.
  std::mt19937_64 gen(4242);
  static const std::vector<std::string> vocab = {"chat", "noir", "grande",
                                                 "ambassade", "un", "y"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> words;
    const size_t n = 1 + gen() % 6;
    for (size_t i = 0; i < n; ++i) words.push_back(vocab[gen() % vocab.size()]);
    std::string plain;
    for (const auto& w : words) {
      if (!plain.empty()) plain += ' ';
      plain += w;
    }

    std::string sp_text, atat_text;
    for (const auto& w : words) {
      std::vector<std::string> pieces;
      std::string rest = w;
      while (rest.size() > 1 && gen() % 2) {
        const size_t cut = 1 + gen() % (rest.size() - 1);
        pieces.push_back(rest.substr(0, cut));
        rest = rest.substr(cut);
      }
      pieces.push_back(rest);
      for (size_t i = 0; i < pieces.size(); ++i) {
        if (!sp_text.empty()) sp_text += ' ';
        sp_text += (i == 0 ? "▁" : "") + pieces[i];
        if (!atat_text.empty()) atat_text += ' ';
        atat_text += pieces[i] + (i + 1 < pieces.size() ? "@@" : "");
      }
    }
    ASSERT_EQ(strip_segmentation(sp_text, SegMarker::sentencepiece_underbar),
              plain)
        << sp_text;
    ASSERT_EQ(strip_segmentation(atat_text, SegMarker::double_at_suffix), plain)
        << atat_text;
  }
}

TEST(StripSegmentationTest, MarkerNamesParse) {
  EXPECT_EQ(seg_marker_from_string("sp"), SegMarker::sentencepiece_underbar);
  EXPECT_EQ(seg_marker_from_string("sentencepiece-underbar"),
            SegMarker::sentencepiece_underbar);
  EXPECT_EQ(seg_marker_from_string("atat"), SegMarker::double_at_suffix);
  EXPECT_EQ(seg_marker_from_string("double-at-suffix"),
            SegMarker::double_at_suffix);
  EXPECT_THROW(seg_marker_from_string("bpe"), DataError);
}

TEST(SeparatePunctuationTest, HandExamples) {
  EXPECT_EQ(separate_punctuation("chat."), "chat .");
  EXPECT_EQ(separate_punctuation("«chat»"), "« chat »");
  EXPECT_EQ(separate_punctuation("a,b"), "a , b");
  EXPECT_EQ(separate_punctuation("Va-t-il?"), "Va - t - il ?");
  EXPECT_EQ(separate_punctuation("a  .  b"), "a . b");
  EXPECT_EQ(separate_punctuation("déjà vu"), "déjà vu");
  EXPECT_EQ(separate_punctuation("猫。犬"), "猫 。 犬");
  EXPECT_EQ(separate_punctuation(""), "");
  EXPECT_EQ(separate_punctuation("..."), ". . .");
}

TEST(SeparatePunctuationTest, IdempotenceFuzz) {
  std::mt19937_64 gen(606);
  const std::vector<std::string> pieces = {"a", "b", ".", ",", "«", "»",
                                           " ", "\t", "é", "猫", "。", "?"};
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const size_t len = gen() % 16;
    for (size_t i = 0; i < len; ++i) text += pieces[gen() % pieces.size()];
    const std::string once = separate_punctuation(text);
    ASSERT_EQ(separate_punctuation(once), once) << "input: " << text;
  }
}

}  // namespace
}  // namespace bitext
