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

#ifndef EXMINE_CANDIDATES_H_
#define EXMINE_CANDIDATES_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "exmine/corpus.h"
#include "exmine/lexicon.h"

namespace exmine {

inline constexpr std::string_view kEnglish = "en";

// Identifies an adjacent pair by the position of its second sentence.
struct CandidateRef {
  std::string doc_id;
  std::size_t paragraph_idx = 0;
  std::size_t pair_idx = 0;

  friend auto operator<=>(const CandidateRef &, const CandidateRef &) = default;
};

struct CandidateInstance {
  std::string doc_id;
  std::size_t paragraph_idx = 0;
  std::size_t pair_idx = 0;  // index of arg2 within the paragraph
  std::string arg1;
  std::string arg2;
  // Non-English sentences aligned to arg2.
  std::map<LanguageId, std::string> target_refs;

  CandidateRef ref() const { return {doc_id, paragraph_idx, pair_idx}; }
  SentencePosition arg2_position() const { return {doc_id, paragraph_idx, pair_idx}; }
  friend bool operator==(const CandidateInstance &, const CandidateInstance &) = default;
};

// True if tagging the English arg2 yields any detection, i.e. the pair is
// already marked. Medial matches count only for entries that allow them.
bool is_explicit(std::string_view arg2, const ConnectiveLexicon &lexicon);

// Every adjacent English pair within a paragraph whose second sentence
// carries no connective. Sorted by (doc_id, paragraph_idx, pair_idx).
std::vector<CandidateInstance> extract_candidates(const std::vector<ParallelDocument> &corpus,
                                                  const ConnectiveLexicon &lexicon);

}  // namespace exmine

#endif  // EXMINE_CANDIDATES_H_
