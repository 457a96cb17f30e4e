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

#include "exmine/emit.h"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "exmine/errors.h"
#include "exmine/serialization.h"
#include "exmine/text.h"

namespace exmine {

TrainingRecord to_training_record(const LabeledInstance &inst) {
  return TrainingRecord{inst.arg1, inst.arg2, inst.sense, inst.source};
}

std::size_t emit_training_file(std::span<const LabeledInstance> instances,
                               const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  std::size_t written = 0;
  for (const LabeledInstance &inst : instances) {
    out << to_json_line(to_training_record(inst)) << '\n';
    ++written;
  }
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
  return written;
}

std::vector<TrainingRecord> read_training_file(const std::filesystem::path &path) {
  std::vector<TrainingRecord> records;
  const std::vector<std::string> lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    records.push_back(parse_training_record(lines[i], i + 1));
  }
  return records;
}

std::size_t DistributionReport::total() const {
  std::size_t n = 0;
  for (std::size_t c : counts) n += c;
  return n;
}

DistributionReport distribution(std::string source, std::span<const SenseLabel> labels) {
  DistributionReport report;
  report.source = std::move(source);
  for (SenseLabel s : labels) ++report.counts[sense_index(s)];
  if (const std::size_t total = report.total(); total > 0) {
    for (std::size_t i = 0; i < kSenseCount; ++i) {
      report.proportions[i] = static_cast<double>(report.counts[i]) / static_cast<double>(total);
    }
  }
  return report;
}

DistributionReport distribution(std::string source, std::span<const LabeledInstance> instances) {
  std::vector<SenseLabel> labels;
  labels.reserve(instances.size());
  for (const auto &inst : instances) labels.push_back(inst.sense);
  return distribution(std::move(source), labels);
}

DistributionReport distribution(std::string source, std::span<const TrainingRecord> records) {
  std::vector<SenseLabel> labels;
  labels.reserve(records.size());
  for (const auto &r : records) labels.push_back(r.sense);
  return distribution(std::move(source), labels);
}

double compare_distributions(const DistributionReport &a, const DistributionReport &b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("cannot compare an empty distribution report");
  }
  double l1 = 0.0;
  for (std::size_t i = 0; i < kSenseCount; ++i) {
    l1 += std::abs(a.proportions[i] - b.proportions[i]);
  }
  return 0.5 * l1;
}

}  // namespace exmine
