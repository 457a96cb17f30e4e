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

#include "exmine/vote.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "exmine/errors.h"
#include "explicitation_cases.h"
#include "synthetic.h"

namespace exmine {
namespace {

using S = SenseLabel;

LanguageEvidence chosen(const LanguageId &lang, std::optional<S> sense) {
  LanguageEvidence ev{lang, true, {}, std::nullopt};
  if (sense) {
    Detection d{"x", *sense, {0, 1}, std::nullopt, Position::kArg2Initial};
    ev.detections.push_back(d);
    ev.chosen = d;
  }
  return ev;
}

EvidenceMap evidence(std::optional<S> fr, std::optional<S> de, std::optional<S> cs) {
  return {{"fr", chosen("fr", fr)}, {"de", chosen("de", de)}, {"cs", chosen("cs", cs)}};
}

TEST(AggregateTest, TwoAgainstOne) {
  auto v = aggregate(evidence(S::kExpansionConjunction, S::kExpansionConjunction,
                              S::kContingencyCause));
  EXPECT_EQ(v.agreement_level, 2u);
  EXPECT_EQ(v.majority_sense, S::kExpansionConjunction);
  EXPECT_EQ(v.sense_counts.at(S::kContingencyCause), 1u);

  v = aggregate(evidence(S::kExpansionConjunction, S::kContingencyCause, S::kContingencyCause));
  EXPECT_EQ(v.agreement_level, 2u);
  EXPECT_EQ(v.majority_sense, S::kContingencyCause);
}

TEST(AggregateTest, ThreeWaySplit) {
  const auto v = aggregate(evidence(S::kComparisonContrast, S::kContingencyCause,
                                    S::kExpansionConjunction));
  EXPECT_EQ(v.agreement_level, 1u);
  EXPECT_FALSE(v.majority_sense.has_value());
}

TEST(AggregateTest, NoEvidence) {
  EXPECT_EQ(aggregate({}).agreement_level, 0u);
  const auto v = aggregate(evidence(std::nullopt, std::nullopt, std::nullopt));
  EXPECT_EQ(v.agreement_level, 0u);
  EXPECT_TRUE(v.sense_counts.empty());
  EXPECT_FALSE(v.majority_sense.has_value());
}

TEST(AggregateTest, Unanimous) {
  const auto v = aggregate(evidence(S::kExpansionList, S::kExpansionList, S::kExpansionList));
  EXPECT_EQ(v.agreement_level, 3u);
  EXPECT_EQ(v.majority_sense, S::kExpansionList);
}

TEST(AggregateTest, TwoAgreeThirdSilent) {
  const auto v = aggregate(evidence(S::kContingencyCause, std::nullopt, S::kContingencyCause));
  EXPECT_EQ(v.agreement_level, 2u);
  EXPECT_EQ(v.majority_sense, S::kContingencyCause);
}

TEST(AggregateTest, OneOneSplitHasNoMajority) {
  const EvidenceMap ev = {{"fr", chosen("fr", S::kContingencyCause)},
                          {"de", chosen("de", S::kComparisonContrast)}};
  const auto v = aggregate(ev);
  EXPECT_EQ(v.agreement_level, 1u);
  EXPECT_FALSE(v.majority_sense.has_value());
}

TEST(AggregateTest, RejectsMoreThanThreeLanguages) {
  EvidenceMap ev = evidence(S::kContingencyCause, S::kContingencyCause, S::kContingencyCause);
  ev.emplace("pl", chosen("pl", S::kContingencyCause));
  EXPECT_THROW(aggregate(ev), std::invalid_argument);
}

TEST(AggregateTest, UnchosenDetectionsDoNotVote) {
  EvidenceMap ev = evidence(S::kContingencyCause, std::nullopt, std::nullopt);
  ev["de"].detections.push_back(
      Detection{"after all", S::kContingencyPragmaticCause, {2, 4}, std::nullopt,
                Position::kArg2Medial});
  EXPECT_EQ(aggregate(ev).sense_counts.size(), 1u);
}

TEST(AggregateTest, InvariantsOnRandomEvidence) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-1, static_cast<int>(kSenseCount) - 1);
  const auto draw = [&]() -> std::optional<S> {
    const int v = d(rng);
    return v < 0 ? std::nullopt : std::optional<S>(kAllSenses[v]);
  };
  for (int i = 0; i < 2000; ++i) {
    const auto a = draw(), b = draw(), c = draw();
    const VoteResult v = aggregate(evidence(a, b, c));
    std::size_t total = 0, max = 0, argmax_count = 0;
    for (const auto &[s, n] : v.sense_counts) total += n, max = std::max(max, n);
    for (const auto &[s, n] : v.sense_counts) argmax_count += n == max;
    EXPECT_LE(total, 3u);
    EXPECT_EQ(v.agreement_level, max);
    EXPECT_EQ(v.majority_sense.has_value(), max >= 2 && argmax_count == 1);
    // Permuting the languages does not change the outcome.
    EXPECT_EQ(aggregate(evidence(c, a, b)), v);
    EXPECT_EQ(aggregate(evidence(b, c, a)), v);
  }
}

class MaterializeTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    lex_ = new ConnectiveLexicon(load_lexicon(EXMINE_DEFAULT_LEXICON_PATH));
  }
  static void TearDownTestSuite() { delete lex_; }

  static CandidateEvidence case_evidence(std::size_t i) {
    const auto c = testing::explicitation_cases().at(i);
    const auto cand = testing::case_candidate(c);
    return {cand, collect_evidence(cand, testing::case_backtranslations(c), *lex_)};
  }

  static ConnectiveLexicon *lex_;
};
ConnectiveLexicon *MaterializeTest::lex_ = nullptr;

TEST_F(MaterializeTest, AllModeKeepsConflictingLabels) {
  const std::vector<CandidateEvidence> stream = {case_evidence(0)};
  const auto all = materialize(stream, VoteMode::kAll);
  ASSERT_EQ(all.size(), 3u);
  std::set<S> senses;
  for (const auto &inst : all) {
    senses.insert(inst.sense);
    EXPECT_EQ(inst.contributing_languages, std::set<LanguageId>{inst.source});
  }
  EXPECT_EQ(senses, (std::set<S>{S::kExpansionConjunction, S::kContingencyCause}));
}

TEST_F(MaterializeTest, Vote2OnCases) {
  const std::vector<CandidateEvidence> first = {case_evidence(0)};
  const auto v1 = materialize(first, VoteMode::kVote2);
  ASSERT_EQ(v1.size(), 1u);
  EXPECT_EQ(v1[0].sense, S::kExpansionConjunction);
  EXPECT_EQ(v1[0].source, "vote2");
  EXPECT_EQ(v1[0].contributing_languages, (std::set<LanguageId>{"de", "fr"}));

  const std::vector<CandidateEvidence> third = {case_evidence(2)};
  EXPECT_TRUE(materialize(third, VoteMode::kVote2).empty());
}

TEST_F(MaterializeTest, Vote3NeedsUnanimity) {
  const std::vector<CandidateEvidence> stream = {
      {CandidateInstance{"u", 0, 1, "a", "b", {}},
       evidence(S::kExpansionList, S::kExpansionList, S::kExpansionList)},
      {CandidateInstance{"v", 0, 1, "a", "b", {}},
       evidence(S::kExpansionList, S::kExpansionList, std::nullopt)}};
  const auto v3 = materialize(stream, VoteMode::kVote3);
  ASSERT_EQ(v3.size(), 1u);
  EXPECT_EQ(v3[0].ref.doc_id, "u");
  EXPECT_EQ(v3[0].contributing_languages.size(), 3u);
  EXPECT_EQ(materialize(stream, VoteMode::kVote2).size(), 2u);
}

TEST(MaterializePropertyTest, CountAdditivityAndSubsetChain) {
  const auto stream = testing::planted_vote_stream({.candidates = 3000, .seed = 11});
  const auto all = materialize(stream, VoteMode::kAll);
  std::size_t per_language = 0;
  for (const auto &lang : testing::kTargetLanguages) {
    per_language += std::count_if(all.begin(), all.end(),
                                  [&](const auto &i) { return i.source == lang; });
  }
  EXPECT_EQ(all.size(), per_language);

  std::set<CandidateRef> v2;
  for (const auto &inst : materialize(stream, VoteMode::kVote2)) {
    EXPECT_GE(inst.contributing_languages.size(), 2u);
    v2.insert(inst.ref);
  }
  for (const auto &inst : materialize(stream, VoteMode::kVote3)) {
    EXPECT_EQ(inst.contributing_languages.size(), 3u);
    EXPECT_TRUE(v2.contains(inst.ref));
  }
}

TEST(MaterializePropertyTest, PerLanguageProjection) {
  const auto stream = testing::planted_vote_stream({.candidates = 500, .seed = 3});
  const auto all = materialize(stream, VoteMode::kAll);
  for (const auto &lang : testing::kTargetLanguages) {
    // Re-run with only `lang` configured.
    std::vector<CandidateEvidence> single;
    for (const auto &item : stream) single.push_back({item.candidate, {{lang, item.evidence.at(lang)}}});
    std::vector<LabeledInstance> filtered;
    std::copy_if(all.begin(), all.end(), std::back_inserter(filtered),
                 [&](const auto &i) { return i.source == lang; });
    EXPECT_EQ(materialize(single, VoteMode::kAll), filtered);
  }
}

TEST(VoteModeTest, Names) {
  for (VoteMode m : {VoteMode::kAll, VoteMode::kVote2, VoteMode::kVote3}) {
    EXPECT_EQ(parse_vote_mode(vote_mode_name(m)), m);
  }
  EXPECT_THROW(parse_vote_mode("vote4"), LookupError);
}

}  // namespace
}  // namespace exmine
