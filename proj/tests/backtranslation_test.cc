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

#include "exmine/backtranslation.h"

#include <gtest/gtest.h>

#include "exmine/errors.h"

namespace exmine {
namespace {

const std::vector<SentencePosition> kFour = {
    {"1", 0, 0}, {"1", 0, 1}, {"1", 1, 0}, {"2", 0, 0}};

class EvidenceTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    lex_ = new ConnectiveLexicon(load_lexicon(EXMINE_DEFAULT_LEXICON_PATH));
  }
  static void TearDownTestSuite() { delete lex_; }

  static CandidateInstance candidate(std::string arg2) {
    return CandidateInstance{"1", 0, 1, "Some first sentence .", std::move(arg2), {}};
  }
  static BackTranslationSet bt(const LanguageId &lang, std::string sentence) {
    return BackTranslationSet(lang, {{SentencePosition{"1", 0, 1}, std::move(sentence)}});
  }

  static ConnectiveLexicon *lex_;
};
ConnectiveLexicon *EvidenceTest::lex_ = nullptr;

TEST(LoadBacktranslationsTest, ExactAlignment) {
  const auto set = parse_backtranslations("fr", "a\nb\nc\nd\n", kFour);
  EXPECT_EQ(set.language(), "fr");
  ASSERT_EQ(set.size(), 4u);
  EXPECT_EQ(*set.find({"1", 1, 0}), "c");
  EXPECT_EQ(set.find({"9", 0, 0}), nullptr);
}

TEST(LoadBacktranslationsTest, CountMismatchIsFatal) {
  try {
    parse_backtranslations("de", "a\nb\nc\n", kFour);
    FAIL();
  } catch (const AlignmentError &e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("3 lines"), std::string::npos);
    EXPECT_NE(msg.find("expected 4"), std::string::npos);
  }
}

TEST(LoadBacktranslationsTest, CrlfSameAsLf) {
  const auto lf = parse_backtranslations("cs", "a\nb\nc\nd\n", kFour);
  const auto crlf = parse_backtranslations("cs", "a\r\nb\r\nc\r\nd\r\n", kFour);
  EXPECT_EQ(lf.sentences(), crlf.sentences());
}

TEST(LoadBacktranslationsTest, EmptyLineWarns) {
  std::vector<std::string> warnings;
  const auto set = parse_backtranslations("fr", "a\n\nc\nd\n", kFour, &warnings);
  EXPECT_EQ(set.size(), 4u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("line 2"), std::string::npos);
}

TEST(LoadBacktranslationsTest, MissingFile) {
  EXPECT_THROW(load_backtranslations("fr", "/nonexistent/bt.txt", kFour), IoError);
}

TEST_F(EvidenceTest, InsertedMoreover) {
  const std::vector<BackTranslationSet> sets = {
      bt("fr", "Moreover , two Member States appealed to the Court .")};
  const auto ev = collect_evidence(candidate("Two Member States appealed to the Court ."), sets,
                                   *lex_);
  ASSERT_TRUE(ev.at("fr").chosen.has_value());
  EXPECT_EQ(ev.at("fr").chosen->connective_text, "moreover");
  EXPECT_EQ(ev.at("fr").chosen->sense, SenseLabel::kExpansionConjunction);
}

TEST_F(EvidenceTest, LeftmostOfSeveralCuesChosen) {
  const std::vector<BackTranslationSet> sets = {bt("cs", "Therefore , after all , it failed .")};
  const auto ev = collect_evidence(candidate("It failed ."), sets, *lex_);
  const LanguageEvidence &cs = ev.at("cs");
  ASSERT_EQ(cs.detections.size(), 2u);
  ASSERT_TRUE(cs.chosen.has_value());
  EXPECT_EQ(cs.chosen->connective_text, "therefore");
  EXPECT_EQ(cs.chosen->sense, SenseLabel::kContingencyCause);
  EXPECT_EQ(cs.chosen, cs.detections.front());
}

TEST_F(EvidenceTest, NoInsertion) {
  const std::vector<BackTranslationSet> sets = {bt("de", "It failed .")};
  const auto ev = collect_evidence(candidate("It failed ."), sets, *lex_);
  EXPECT_TRUE(ev.at("de").present);
  EXPECT_FALSE(ev.at("de").chosen.has_value());
}

TEST_F(EvidenceTest, MedialOnlyIsNotChosen) {
  const std::vector<BackTranslationSet> sets = {bt("de", "It , however , failed .")};
  const auto ev = collect_evidence(candidate("It failed ."), sets, *lex_);
  EXPECT_EQ(ev.at("de").detections.size(), 1u);
  EXPECT_FALSE(ev.at("de").chosen.has_value());
}

TEST_F(EvidenceTest, MissingPositionCounted) {
  const std::vector<BackTranslationSet> sets = {
      BackTranslationSet("fr", {{SentencePosition{"1", 0, 0}, "x"}}),
      bt("de", "Moreover , it failed .")};
  EvidenceDiagnostics diag;
  const auto ev = collect_evidence(candidate("It failed ."), sets, *lex_, &diag);
  EXPECT_FALSE(ev.at("fr").present);
  EXPECT_FALSE(ev.at("fr").chosen.has_value());
  EXPECT_TRUE(ev.at("de").chosen.has_value());
  EXPECT_EQ(diag.missing_positions, 1u);
}

TEST_F(EvidenceTest, VerbatimBacktranslationsYieldNothing) {
  for (const char *arg2 : {"It failed .", "The House , as always , agreed .",
                           "What is more , prices rose ."}) {
    const std::vector<BackTranslationSet> sets = {bt("fr", arg2), bt("de", arg2), bt("cs", arg2)};
    for (const auto &[lang, e] : collect_evidence(candidate(arg2), sets, *lex_)) {
      EXPECT_FALSE(e.chosen.has_value()) << lang << ": " << arg2;
    }
  }
}

}  // namespace
}  // namespace exmine
