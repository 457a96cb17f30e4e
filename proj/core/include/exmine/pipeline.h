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

#ifndef EXMINE_PIPELINE_H_
#define EXMINE_PIPELINE_H_

#include <span>
#include <vector>

#include "exmine/backtranslation.h"
#include "exmine/candidates.h"
#include "exmine/corpus.h"
#include "exmine/lexicon.h"
#include "exmine/vote.h"

namespace exmine {

struct MiningResult {
  std::vector<CandidateInstance> candidates;
  std::vector<CandidateEvidence> evidence;
  std::vector<LabeledInstance> all;
  std::vector<LabeledInstance> vote2;
  std::vector<LabeledInstance> vote3;
  EvidenceDiagnostics diagnostics;

  const std::vector<LabeledInstance> &instances(VoteMode mode) const;
};

// Candidates -> evidence -> all three vote modes.
MiningResult mine(const std::vector<ParallelDocument> &corpus,
                  std::span<const BackTranslationSet> backtranslations,
                  const ConnectiveLexicon &lexicon);

// Instances of `all` mode labeled by one language.
std::vector<LabeledInstance> from_language(std::span<const LabeledInstance> all,
                                           const LanguageId &language);

}  // namespace exmine

#endif  // EXMINE_PIPELINE_H_
