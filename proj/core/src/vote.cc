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

#include <stdexcept>

#include "exmine/errors.h"

namespace exmine {

VoteResult aggregate(const EvidenceMap &evidence) {
  if (evidence.size() > kMaxVotingLanguages) {
    throw std::invalid_argument("voting supports at most 3 languages, got " +
                                std::to_string(evidence.size()));
  }
  VoteResult result;
  for (const auto &[lang, ev] : evidence) {
    if (ev.chosen) ++result.sense_counts[ev.chosen->sense];
  }
  std::size_t winners = 0;
  for (const auto &[sense, count] : result.sense_counts) {
    if (count > result.agreement_level) {
      result.agreement_level = count;
      result.majority_sense = sense;
      winners = 1;
    } else if (count == result.agreement_level) {
      ++winners;
    }
  }
  if (result.agreement_level < 2 || winners != 1) result.majority_sense.reset();
  return result;
}

std::string_view vote_mode_name(VoteMode mode) {
  switch (mode) {
    case VoteMode::kAll: return "all";
    case VoteMode::kVote2: return "vote2";
    case VoteMode::kVote3: return "vote3";
  }
  return "all";
}

VoteMode parse_vote_mode(std::string_view name) {
  if (name == "all") return VoteMode::kAll;
  if (name == "vote2") return VoteMode::kVote2;
  if (name == "vote3") return VoteMode::kVote3;
  throw LookupError("unknown vote mode '" + std::string(name) + "'");
}

std::vector<LabeledInstance> materialize(std::span<const CandidateEvidence> stream,
                                         VoteMode mode) {
  std::vector<LabeledInstance> out;
  for (const CandidateEvidence &item : stream) {
    const CandidateInstance &c = item.candidate;
    if (mode == VoteMode::kAll) {
      for (const auto &[lang, ev] : item.evidence) {
        if (!ev.chosen) continue;
        out.push_back(LabeledInstance{c.ref(), c.arg1, c.arg2, ev.chosen->sense, lang, {lang}});
      }
      continue;
    }
    const VoteResult vote = aggregate(item.evidence);
    if (!vote.majority_sense) continue;
    const std::size_t needed = mode == VoteMode::kVote3 ? 3 : 2;
    if (vote.agreement_level < needed) continue;
    LabeledInstance inst{c.ref(), c.arg1, c.arg2, *vote.majority_sense,
                         std::string(vote_mode_name(mode)), {}};
    for (const auto &[lang, ev] : item.evidence) {
      if (ev.chosen && ev.chosen->sense == *vote.majority_sense) {
        inst.contributing_languages.insert(lang);
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace exmine
