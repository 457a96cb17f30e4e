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

#ifndef EXMINE_VOTE_H_
#define EXMINE_VOTE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exmine/backtranslation.h"
#include "exmine/candidates.h"
#include "exmine/sense.h"

namespace exmine {

inline constexpr std::size_t kMaxVotingLanguages = 3;

struct VoteResult {
  std::map<SenseLabel, std::size_t> sense_counts;  // chosen senses only
  std::size_t agreement_level = 0;                 // max count, 0 if none
  std::optional<SenseLabel> majority_sense;        // unique argmax at level >= 2

  friend bool operator==(const VoteResult &, const VoteResult &) = default;
};

// Counts the chosen sense of each language. Agreement is on senses, not on
// connective strings. Throws std::invalid_argument for more than three
// languages.
VoteResult aggregate(const EvidenceMap &evidence);

enum class VoteMode : std::uint8_t { kAll, kVote2, kVote3 };

std::string_view vote_mode_name(VoteMode mode);
VoteMode parse_vote_mode(std::string_view name);  // throws LookupError

struct LabeledInstance {
  CandidateRef ref;
  std::string arg1;
  std::string arg2;
  SenseLabel sense = SenseLabel::kExpansionConjunction;
  std::string source;  // language id for kAll, "vote2" or "vote3" otherwise
  std::set<LanguageId> contributing_languages;

  friend bool operator==(const LabeledInstance &, const LabeledInstance &) = default;
};

// kAll: one instance per (candidate, language with a chosen detection).
// kVote2: one per candidate whose majority sense has at least two votes.
// kVote3: one per candidate on which three languages agree.
std::vector<LabeledInstance> materialize(std::span<const CandidateEvidence> stream,
                                         VoteMode mode);

}  // namespace exmine

#endif  // EXMINE_VOTE_H_
