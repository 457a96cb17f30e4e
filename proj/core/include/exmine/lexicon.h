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

#ifndef EXMINE_LEXICON_H_
#define EXMINE_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "exmine/sense.h"

namespace exmine {

// Where a connective sits relative to the second argument. A match is
// arg2-initial when only punctuation precedes it in the sentence.
enum class Position : std::uint8_t { kArg2Initial, kArg2Medial };

std::string_view position_name(Position p);
Position parse_position(std::string_view name);  // throws LookupError

class PositionSet {
 public:
  constexpr PositionSet() = default;
  constexpr PositionSet(std::initializer_list<Position> positions) {
    for (Position p : positions) insert(p);
  }

  constexpr void insert(Position p) { bits_ |= bit(p); }
  constexpr bool contains(Position p) const { return (bits_ & bit(p)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  // "arg2_initial,arg2_medial" in fixed order.
  std::string to_string() const;

  friend constexpr bool operator==(PositionSet, PositionSet) = default;

 private:
  static constexpr std::uint8_t bit(Position p) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(p));
  }
  std::uint8_t bits_ = 0;
};

// One lexicon row. Discontinuous connectives ("if ... then") keep the part
// after the gap in `tail`; `tail` is empty for contiguous patterns.
struct ConnectiveEntry {
  std::vector<std::string> head;
  std::vector<std::string> tail;
  SenseLabel primary_sense = SenseLabel::kExpansionConjunction;
  PositionSet positions_allowed;

  bool discontinuous() const { return !tail.empty(); }
  std::size_t length() const { return head.size() + tail.size(); }
  // Pattern tokens joined by spaces, gap dropped ("if then").
  std::string text() const;
  // Pattern as written in the lexicon format ("if ... then").
  std::string pattern() const;
};

class ConnectiveLexicon {
 public:
  ConnectiveLexicon() = default;

  // Validates entries and builds the first-token index. Throws LexiconError
  // on an empty pattern, empty position set or duplicate (pattern,
  // positions) key; `lines` supplies line numbers for messages if given.
  explicit ConnectiveLexicon(std::vector<ConnectiveEntry> entries,
                             std::span<const std::size_t> lines = {});

  const std::vector<ConnectiveEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Indices of entries whose first token equals `folded_token`, in file
  // order.
  std::span<const std::size_t> starting_with(std::string_view folded_token) const;

  // Primary sense of the first entry whose text matches. Accepts either
  // "if then" or the written "if ... then" form; case-insensitive. Throws
  // LookupError for connectives outside the lexicon.
  SenseLabel sense_of(std::string_view connective_text) const;

 private:
  std::vector<ConnectiveEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_token_;
  std::unordered_map<std::string, std::size_t> by_text_;
};

// Parses the tab-separated lexicon format:
//   pattern <TAB> sense <TAB> positions
// `positions` is a comma-joined subset of {arg2_initial, arg2_medial}. The gap
// of a discontinuous pattern is written as U+2026 or "...". Lines starting
// with '#' and blank lines are ignored.
ConnectiveLexicon parse_lexicon(std::string_view text);
ConnectiveLexicon load_lexicon(const std::filesystem::path &path);

}  // namespace exmine

#endif  // EXMINE_LEXICON_H_
