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

#ifndef EXMINE_SERIALIZATION_H_
#define EXMINE_SERIALIZATION_H_

// JSON Lines encodings of the pipeline's records. Object keys are emitted in
// sorted order so equal values serialize to identical bytes.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exmine/backtranslation.h"
#include "exmine/candidates.h"
#include "exmine/corpus.h"
#include "exmine/emit.h"
#include "exmine/errors.h"
#include "exmine/tagger.h"
#include "exmine/text.h"
#include "exmine/vote.h"

namespace exmine {

std::string to_json_line(const ParallelDocument &doc);
std::string to_json_line(const CandidateInstance &candidate);
std::string to_json_line(const CandidateEvidence &item);
std::string to_json_line(const LabeledInstance &inst);
std::string to_json_line(const TrainingRecord &record);

// {"line": n, "sentence": ..., "detections": [...]}
std::string tag_record_json(std::size_t line, std::string_view sentence,
                            std::span<const Detection> detections);

// Pretty-printed documents.
std::string to_json(const CorpusStats &stats);
std::string to_json(const DistributionReport &report);
std::string to_json(std::span<const DistributionReport> reports);

// Parsers throw FormatError carrying `line` on malformed input, missing
// fields or unknown sense names.
ParallelDocument parse_document(std::string_view json, std::size_t line = 0);
CandidateInstance parse_candidate(std::string_view json, std::size_t line = 0);
CandidateEvidence parse_candidate_evidence(std::string_view json, std::size_t line = 0);
LabeledInstance parse_labeled_instance(std::string_view json, std::size_t line = 0);
// Only "sense" is required; missing text fields read as empty.
TrainingRecord parse_training_record(std::string_view json, std::size_t line = 0);
CorpusStats parse_corpus_stats(std::string_view json);

template <typename T, typename Parser>
std::vector<T> read_jsonl(const std::filesystem::path &path, Parser parse) {
  std::vector<T> out;
  const std::vector<std::string> lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    out.push_back(parse(lines[i], i + 1));
  }
  return out;
}

template <typename T>
std::size_t write_jsonl(const std::filesystem::path &path, std::span<const T> records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const T &r : records) out << to_json_line(r) << '\n';
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
  return records.size();
}

void write_text_file(const std::filesystem::path &path, std::string_view contents);

}  // namespace exmine

#endif  // EXMINE_SERIALIZATION_H_
