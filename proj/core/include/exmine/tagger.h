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

#ifndef EXMINE_TAGGER_H_
#define EXMINE_TAGGER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exmine/lexicon.h"
#include "exmine/sense.h"

namespace exmine {

// Half-open token range [begin, end).
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const TokenSpan &, const TokenSpan &) = default;
};

struct Detection {
  std::string connective_text;  // case-folded matched tokens, space-joined
  SenseLabel sense = SenseLabel::kExpansionConjunction;
  TokenSpan span;
  std::optional<TokenSpan> tail_span;  // second part of a discontinuous match
  Position position = Position::kArg2Initial;

  friend bool operator==(const Detection &, const Detection &) = default;
};

// Position of a match starting at token `start`.
Position position_at(std::span<const std::string> tokens, std::size_t start);

// Finds every lexicon connective in `tokens` whose position is allowed by its
// entry. Overlaps are resolved longest match first, then leftmost, then by
// lexicon order; the result is sorted by start index. Matching ignores case.
// A discontinuous pattern needs at least one token in its gap and pairs its
// head with the nearest following occurrence of its tail.
std::vector<Detection> tag(std::span<const std::string> tokens,
                           const ConnectiveLexicon &lexicon);

// Tokenizes `sentence` with tokenize() and tags it.
std::vector<Detection> tag_sentence(std::string_view sentence,
                                    const ConnectiveLexicon &lexicon);

}  // namespace exmine

#endif  // EXMINE_TAGGER_H_
