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

#ifndef EXMINE_BACKTRANSLATION_H_
#define EXMINE_BACKTRANSLATION_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exmine/candidates.h"
#include "exmine/corpus.h"
#include "exmine/lexicon.h"
#include "exmine/tagger.h"

namespace exmine {

// English back-translation of one target language, keyed by corpus position.
class BackTranslationSet {
 public:
  BackTranslationSet() = default;
  BackTranslationSet(LanguageId language, std::map<SentencePosition, std::string> sentences)
      : language_(std::move(language)), sentences_(std::move(sentences)) {}

  const LanguageId &language() const { return language_; }
  const std::map<SentencePosition, std::string> &sentences() const { return sentences_; }
  std::size_t size() const { return sentences_.size(); }
  const std::string *find(const SentencePosition &pos) const;

 private:
  LanguageId language_;
  std::map<SentencePosition, std::string> sentences_;
};

// Maps line i of `text` to positions[i]. CRLF and LF endings are equivalent.
// Throws AlignmentError when the line count differs from positions.size();
// empty lines are mapped and reported in `warnings`.
BackTranslationSet parse_backtranslations(const LanguageId &language, std::string_view text,
                                          std::span<const SentencePosition> positions,
                                          std::vector<std::string> *warnings = nullptr);

BackTranslationSet load_backtranslations(const LanguageId &language,
                                         const std::filesystem::path &path,
                                         std::span<const SentencePosition> positions,
                                         std::vector<std::string> *warnings = nullptr);

struct LanguageEvidence {
  LanguageId language;
  bool present = false;  // back-translation available for arg2
  std::vector<Detection> detections;
  std::optional<Detection> chosen;  // leftmost arg2-initial detection

  friend bool operator==(const LanguageEvidence &, const LanguageEvidence &) = default;
};

using EvidenceMap = std::map<LanguageId, LanguageEvidence>;

struct EvidenceDiagnostics {
  std::size_t missing_positions = 0;
};

// Tags the back-translated arg2 in every set. Since candidates carry no
// connective in the original English, any chosen detection is a connective
// the translator inserted.
EvidenceMap collect_evidence(const CandidateInstance &candidate,
                             std::span<const BackTranslationSet> bts,
                             const ConnectiveLexicon &lexicon,
                             EvidenceDiagnostics *diagnostics = nullptr);

struct CandidateEvidence {
  CandidateInstance candidate;
  EvidenceMap evidence;

  friend bool operator==(const CandidateEvidence &, const CandidateEvidence &) = default;
};

std::vector<CandidateEvidence> collect_all_evidence(
    const std::vector<CandidateInstance> &candidates, std::span<const BackTranslationSet> bts,
    const ConnectiveLexicon &lexicon, EvidenceDiagnostics *diagnostics = nullptr);

}  // namespace exmine

#endif  // EXMINE_BACKTRANSLATION_H_
