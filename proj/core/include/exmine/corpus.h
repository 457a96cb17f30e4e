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

#ifndef EXMINE_CORPUS_H_
#define EXMINE_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace exmine {

using LanguageId = std::string;

enum class MarkupKind : std::uint8_t {
  kChapterMarker,
  kSpeakerMarker,
  kParagraphMarker,
  kSentence,
};

std::string_view markup_kind_name(MarkupKind kind);

// One classified input line. Markup lines keep the raw tag in `text` so that
// attributes (chapter ids) stay available; sentences are whitespace-trimmed.
struct RawCorpusLine {
  std::string text;
  MarkupKind kind = MarkupKind::kSentence;
  std::size_t line_number = 0;  // 1-based, in the source file

  friend bool operator==(const RawCorpusLine &, const RawCorpusLine &) = default;
};

enum class CorpusFormat : std::uint8_t { kEuroparl };

// Classifies each non-blank line of a Europarl-style file by exact tag prefix
// (<CHAPTER, <SPEAKER, <P>). Other angle-bracket lines are kept as sentences
// and reported through `warnings`. Throws EncodingError on invalid UTF-8.
std::vector<RawCorpusLine> parse_lines(std::string_view raw_text,
                                       CorpusFormat format = CorpusFormat::kEuroparl,
                                       std::vector<std::string> *warnings = nullptr);

// Aligned sentences at one position: language -> sentence.
using SentenceGroup = std::map<LanguageId, std::string>;
using Paragraph = std::vector<SentenceGroup>;

struct ParallelDocument {
  std::string doc_id;
  std::vector<Paragraph> paragraphs;

  std::size_t group_count() const;
  friend bool operator==(const ParallelDocument &, const ParallelDocument &) = default;
};

struct CorpusStats {
  std::size_t document_count = 0;
  std::size_t sentence_pair_count = 0;
  std::size_t dropped_documents = 0;        // marker mismatch or missing language
  std::size_t dropped_sentence_groups = 0;  // sanitization
  std::map<LanguageId, std::size_t> per_language_counts;

  friend bool operator==(const CorpusStats &, const CorpusStats &) = default;
};

struct AlignedCorpus {
  std::vector<LanguageId> languages;
  std::vector<ParallelDocument> documents;
  CorpusStats stats;
  std::vector<std::string> warnings;
};

// Groups line-aligned per-language inputs into documents. Chapter markers
// delimit documents; speaker and paragraph markers open paragraphs. A
// document survives only if it exists in every language with an identical
// sequence of line kinds; sentence groups are then formed positionally and
// a group is dropped if any of its sentences has fewer than two tokens or
// only punctuation. doc ids are `doc_id_prefix` + chapter id.
AlignedCorpus align_documents(const std::map<LanguageId, std::vector<RawCorpusLine>> &per_language,
                              std::string_view doc_id_prefix = "");

// Reads DIR/<lang>.txt for each language or, failing that, every *.txt file
// under DIR/<lang>/ (doc ids are then prefixed with "<file stem>/").
AlignedCorpus ingest_directory(const std::filesystem::path &dir,
                               const std::vector<LanguageId> &languages);

// Sentence positions of `lang` in serialization order: documents, then
// paragraphs, then groups.
struct SentencePosition {
  std::string doc_id;
  std::size_t paragraph_idx = 0;
  std::size_t sentence_idx = 0;

  friend auto operator<=>(const SentencePosition &, const SentencePosition &) = default;
};

std::vector<SentencePosition> sentence_positions(const std::vector<ParallelDocument> &docs);

}  // namespace exmine

#endif  // EXMINE_CORPUS_H_
