// Copyright 2026 The exmine Authors.
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

#include "exmine/tagger.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "exmine/text.h"
#include "oracle.h"
#include "synthetic.h"

namespace exmine {
namespace {

class TaggerTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    lex_ = new ConnectiveLexicon(load_lexicon(EXMINE_DEFAULT_LEXICON_PATH));
  }
  static void TearDownTestSuite() { delete lex_; }

  static std::vector<Detection> run(std::string_view sentence) {
    return tag_sentence(sentence, *lex_);
  }

  static ConnectiveLexicon *lex_;
};
ConnectiveLexicon *TaggerTest::lex_ = nullptr;

TEST_F(TaggerTest, SentenceInitialBut) {
  const auto d = run("But most appear to be in their late 30s .");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].connective_text, "but");
  EXPECT_EQ(d[0].sense, SenseLabel::kComparisonContrast);
  EXPECT_EQ(d[0].position, Position::kArg2Initial);
  EXPECT_EQ(d[0].span, (TokenSpan{0, 1}));
}

TEST_F(TaggerTest, Moreover) {
  const auto d = run("Moreover , the committee agreed .");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].connective_text, "moreover");
  EXPECT_EQ(d[0].sense, SenseLabel::kExpansionConjunction);
  EXPECT_EQ(d[0].position, Position::kArg2Initial);
}

TEST_F(TaggerTest, NoConnective) { EXPECT_TRUE(run("The cat sat .").empty()); }

TEST_F(TaggerTest, TwoSignals) {
  const auto d = run("Therefore , after all , it failed .");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].connective_text, "therefore");
  EXPECT_EQ(d[0].sense, SenseLabel::kContingencyCause);
  EXPECT_EQ(d[0].position, Position::kArg2Initial);
  EXPECT_EQ(d[1].connective_text, "after all");
  EXPECT_EQ(d[1].span, (TokenSpan{2, 4}));
  EXPECT_EQ(d[1].position, Position::kArg2Medial);
}

TEST_F(TaggerTest, LeadingPunctuationStillInitial) {
  const auto d = run("\" However , nothing changed .");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].position, Position::kArg2Initial);
}

TEST_F(TaggerTest, MedialOnlyForAdverbials) {
  // "and" and "but" are initial-only; "however" may appear medially.
  EXPECT_TRUE(run("Cats and dogs but not birds .").empty());
  const auto d = run("The council , however , disagreed .");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].connective_text, "however");
  EXPECT_EQ(d[0].position, Position::kArg2Medial);
}

TEST_F(TaggerTest, LongestMatchWins) {
  const auto d = run("On the other hand , prices rose .");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].connective_text, "on the other hand");
  EXPECT_EQ(d[0].span, (TokenSpan{0, 4}));

  const auto e = run("As a result , prices rose .");
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].connective_text, "as a result");
}

TEST_F(TaggerTest, DiscontinuousConnective) {
  const auto d = run("If prices rise , then demand falls .");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].connective_text, "if then");
  EXPECT_EQ(d[0].sense, SenseLabel::kContingencyCause);
  EXPECT_EQ(d[0].span, (TokenSpan{0, 1}));
  ASSERT_TRUE(d[0].tail_span.has_value());
  EXPECT_EQ(*d[0].tail_span, (TokenSpan{4, 5}));
}

TEST_F(TaggerTest, DiscontinuousNeedsGapAndTail) {
  // No tail: nothing for "if" alone (plain "if" is not in the lexicon).
  EXPECT_TRUE(run("If prices rise , demand falls .").empty());
  // Adjacent "if then" has no gap; only "then" is not initial either.
  EXPECT_TRUE(run("If then demand falls .").empty());
}

TEST_F(TaggerTest, OverlapResolutionIsLongestThenLeftmost) {
  const ConnectiveLexicon lex = parse_lexicon(
      "a b\tExpansion.Conjunction\targ2_initial,arg2_medial\n"
      "b c\tComparison.Contrast\targ2_initial,arg2_medial\n"
      "b c d\tTemporal.Synchrony\targ2_initial,arg2_medial\n"
      "x\tExpansion.List\targ2_initial,arg2_medial\n");
  const std::vector<std::string> toks = {"a", "b", "c", "d", "x", "a", "b", "c"};
  const auto d = tag(toks, lex);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].connective_text, "b c d");  // longest beats leftmost "a b"
  EXPECT_EQ(d[1].connective_text, "x");
  EXPECT_EQ(d[2].connective_text, "a b");    // leftmost of equal-length "a b"/"b c"
  EXPECT_EQ(d[2].span, (TokenSpan{5, 7}));
}

TEST_F(TaggerTest, EmptyInput) {
  EXPECT_TRUE(tag(std::vector<std::string>{}, *lex_).empty());
  EXPECT_TRUE(run("").empty());
}

TEST_F(TaggerTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(20181031);
  for (int i = 0; i < 2000; ++i) {
    const auto tokens = testing::random_tagger_sentence(rng, *lex_, 12);
    ASSERT_EQ(tag(tokens, *lex_), testing::brute_force_tag(tokens, *lex_))
        << join(tokens, " ");
  }
}

TEST_F(TaggerTest, CaseInsensitive) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto tokens = testing::random_tagger_sentence(rng, *lex_, 12);
    std::vector<std::string> upper;
    for (const auto &t : tokens) upper.push_back(upper_case(t));
    ASSERT_EQ(tag(tokens, *lex_), tag(upper, *lex_)) << join(tokens, " ");
  }
}

TEST_F(TaggerTest, DetectionInvariants) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto tokens = testing::random_tagger_sentence(rng, *lex_, 12);
    const auto detections = tag(tokens, *lex_);
    std::size_t last = 0;
    for (const Detection &d : detections) {
      EXPECT_TRUE(std::find(kAllSenses.begin(), kAllSenses.end(), d.sense) != kAllSenses.end());
      ASSERT_LE(d.span.end, tokens.size());
      EXPECT_GE(d.span.begin, last);
      last = d.span.begin;
      std::vector<std::string> words(tokens.begin() + d.span.begin, tokens.begin() + d.span.end);
      if (d.tail_span) {
        ASSERT_LE(d.tail_span->end, tokens.size());
        words.insert(words.end(), tokens.begin() + d.tail_span->begin,
                     tokens.begin() + d.tail_span->end);
      }
      EXPECT_EQ(d.connective_text, fold_case(join(words, " ")));
      EXPECT_EQ(lex_->sense_of(d.connective_text), d.sense);
    }
  }
}

}  // namespace
}  // namespace exmine
