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

#ifndef EXMINE_SENSE_H_
#define EXMINE_SENSE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace exmine {

// Second-level discourse relation senses used for the 11-way task.
enum class SenseLabel : std::uint8_t {
  kTemporalAsynchronous,
  kTemporalSynchrony,
  kContingencyCause,
  kContingencyPragmaticCause,
  kComparisonContrast,
  kComparisonConcession,
  kExpansionConjunction,
  kExpansionInstantiation,
  kExpansionRestatement,
  kExpansionAlternative,
  kExpansionList,
};

inline constexpr std::size_t kSenseCount = 11;

inline constexpr std::array<SenseLabel, kSenseCount> kAllSenses = {
    SenseLabel::kTemporalAsynchronous,   SenseLabel::kTemporalSynchrony,
    SenseLabel::kContingencyCause,       SenseLabel::kContingencyPragmaticCause,
    SenseLabel::kComparisonContrast,     SenseLabel::kComparisonConcession,
    SenseLabel::kExpansionConjunction,   SenseLabel::kExpansionInstantiation,
    SenseLabel::kExpansionRestatement,   SenseLabel::kExpansionAlternative,
    SenseLabel::kExpansionList,
};

constexpr std::size_t sense_index(SenseLabel s) {
  return static_cast<std::size_t>(s);
}

// Canonical dotted name, e.g. "Comparison.Contrast".
std::string_view sense_name(SenseLabel sense);

std::optional<SenseLabel> try_parse_sense(std::string_view name);

// Throws LookupError naming the string if it is not one of the 11 senses.
SenseLabel parse_sense(std::string_view name);

}  // namespace exmine

#endif  // EXMINE_SENSE_H_
