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

#include "exmine/sense.h"

#include <string>

#include "exmine/errors.h"

namespace exmine {
namespace {

constexpr std::array<std::string_view, kSenseCount> kNames = {
    "Temporal.Asynchronous",   "Temporal.Synchrony",
    "Contingency.Cause",       "Contingency.PragmaticCause",
    "Comparison.Contrast",     "Comparison.Concession",
    "Expansion.Conjunction",   "Expansion.Instantiation",
    "Expansion.Restatement",   "Expansion.Alternative",
    "Expansion.List",
};

}  // namespace

std::string_view sense_name(SenseLabel sense) {
  return kNames[sense_index(sense)];
}

std::optional<SenseLabel> try_parse_sense(std::string_view name) {
  for (std::size_t i = 0; i < kSenseCount; ++i) {
    if (kNames[i] == name) return kAllSenses[i];
  }
  return std::nullopt;
}

SenseLabel parse_sense(std::string_view name) {
  if (auto sense = try_parse_sense(name)) return *sense;
  throw LookupError("unknown sense '" + std::string(name) + "'");
}

}  // namespace exmine
