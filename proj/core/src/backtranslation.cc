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

#include <algorithm>

#include "exmine/errors.h"
#include "exmine/text.h"

namespace exmine {

const std::string *BackTranslationSet::find(const SentencePosition &pos) const {
  const auto it = sentences_.find(pos);
  return it == sentences_.end() ? nullptr : &it->second;
}

BackTranslationSet parse_backtranslations(const LanguageId &language, std::string_view text,
                                          std::span<const SentencePosition> positions,
                                          std::vector<std::string> *warnings) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.size() != positions.size()) {
    throw AlignmentError("back-translation for '" + language + "' has " +
                         std::to_string(lines.size()) + " lines, expected " +
                         std::to_string(positions.size()));
  }
  std::map<SentencePosition, std::string> sentences;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty() && warnings != nullptr) {
      warnings->push_back(language + " back-translation line " + std::to_string(i + 1) +
                          " is empty");
    }
    sentences.emplace(positions[i], lines[i]);
  }
  return BackTranslationSet(language, std::move(sentences));
}

BackTranslationSet load_backtranslations(const LanguageId &language,
                                         const std::filesystem::path &path,
                                         std::span<const SentencePosition> positions,
                                         std::vector<std::string> *warnings) {
  try {
    return parse_backtranslations(language, read_file(path), positions, warnings);
  } catch (const EncodingError &e) {
    throw EncodingError(path.string() + ": " + e.what(), e.line());
  }
}

EvidenceMap collect_evidence(const CandidateInstance &candidate,
                             std::span<const BackTranslationSet> bts,
                             const ConnectiveLexicon &lexicon,
                             EvidenceDiagnostics *diagnostics) {
  EvidenceMap out;
  const SentencePosition pos = candidate.arg2_position();
  for (const BackTranslationSet &bt : bts) {
    LanguageEvidence ev{bt.language(), false, {}, std::nullopt};
    if (const std::string *sentence = bt.find(pos)) {
      ev.present = true;
      ev.detections = tag_sentence(*sentence, lexicon);
      const auto first = std::find_if(
          ev.detections.begin(), ev.detections.end(),
          [](const Detection &d) { return d.position == Position::kArg2Initial; });
      if (first != ev.detections.end()) ev.chosen = *first;
    } else if (diagnostics != nullptr) {
      ++diagnostics->missing_positions;
    }
    out.insert_or_assign(bt.language(), std::move(ev));
  }
  return out;
}

std::vector<CandidateEvidence> collect_all_evidence(
    const std::vector<CandidateInstance> &candidates, std::span<const BackTranslationSet> bts,
    const ConnectiveLexicon &lexicon, EvidenceDiagnostics *diagnostics) {
  std::vector<CandidateEvidence> out;
  out.reserve(candidates.size());
  for (const CandidateInstance &c : candidates) {
    out.push_back(CandidateEvidence{c, collect_evidence(c, bts, lexicon, diagnostics)});
  }
  return out;
}

}  // namespace exmine
