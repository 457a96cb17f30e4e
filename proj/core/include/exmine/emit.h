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

#ifndef EXMINE_EMIT_H_
#define EXMINE_EMIT_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "exmine/sense.h"
#include "exmine/vote.h"

namespace exmine {

// A classifier training row: {arg1, arg2, sense, source}.
struct TrainingRecord {
  std::string arg1;
  std::string arg2;
  SenseLabel sense = SenseLabel::kExpansionConjunction;
  std::string source;

  friend bool operator==(const TrainingRecord &, const TrainingRecord &) = default;
};

TrainingRecord to_training_record(const LabeledInstance &inst);

// Writes one JSON object per line. Returns the number of lines written.
// Throws IoError if the file cannot be written.
std::size_t emit_training_file(std::span<const LabeledInstance> instances,
                               const std::filesystem::path &path);

// Reads any JSONL file whose records carry a "sense" field (training files,
// labeled instances, or an external export in the same schema).
std::vector<TrainingRecord> read_training_file(const std::filesystem::path &path);

struct DistributionReport {
  std::string source;
  std::array<std::size_t, kSenseCount> counts{};
  std::array<double, kSenseCount> proportions{};  // all zero when total() == 0

  std::size_t total() const;
  // Proportions are undefined for an empty report.
  bool empty() const { return total() == 0; }
  std::size_t count(SenseLabel s) const { return counts[sense_index(s)]; }
  double proportion(SenseLabel s) const { return proportions[sense_index(s)]; }
};

DistributionReport distribution(std::string source, std::span<const SenseLabel> labels);
DistributionReport distribution(std::string source, std::span<const LabeledInstance> instances);
DistributionReport distribution(std::string source, std::span<const TrainingRecord> records);

// Total-variation distance: half the L1 distance between the proportion
// vectors. Throws std::invalid_argument if either report is empty.
double compare_distributions(const DistributionReport &a, const DistributionReport &b);

}  // namespace exmine

#endif  // EXMINE_EMIT_H_
