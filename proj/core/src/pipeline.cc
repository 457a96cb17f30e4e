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

#include "exmine/pipeline.h"

namespace exmine {

const std::vector<LabeledInstance> &MiningResult::instances(VoteMode mode) const {
  switch (mode) {
    case VoteMode::kVote2: return vote2;
    case VoteMode::kVote3: return vote3;
    case VoteMode::kAll: break;
  }
  return all;
}

MiningResult mine(const std::vector<ParallelDocument> &corpus,
                  std::span<const BackTranslationSet> backtranslations,
                  const ConnectiveLexicon &lexicon) {
  MiningResult r;
  r.candidates = extract_candidates(corpus, lexicon);
  r.evidence = collect_all_evidence(r.candidates, backtranslations, lexicon, &r.diagnostics);
  r.all = materialize(r.evidence, VoteMode::kAll);
  r.vote2 = materialize(r.evidence, VoteMode::kVote2);
  r.vote3 = materialize(r.evidence, VoteMode::kVote3);
  return r;
}

std::vector<LabeledInstance> from_language(std::span<const LabeledInstance> all,
                                           const LanguageId &language) {
  std::vector<LabeledInstance> out;
  for (const auto &inst : all) {
    if (inst.source == language) out.push_back(inst);
  }
  return out;
}

}  // namespace exmine
