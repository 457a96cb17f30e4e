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

#include "exmine/tagger.h"

#include <algorithm>
#include <tuple>

#include "exmine/text.h"

namespace exmine {
namespace {

struct Match {
  std::size_t entry;
  TokenSpan head;
  std::optional<TokenSpan> tail;
  std::size_t length;
};

bool matches_at(const std::vector<std::string> &folded, std::size_t start,
                const std::vector<std::string> &pattern) {
  if (start + pattern.size() > folded.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), folded.begin() + start);
}

}  // namespace

Position position_at(std::span<const std::string> tokens, std::size_t start) {
  for (std::size_t i = 0; i < start && i < tokens.size(); ++i) {
    if (!is_punctuation_token(tokens[i])) return Position::kArg2Medial;
  }
  return Position::kArg2Initial;
}

std::vector<Detection> tag(std::span<const std::string> tokens,
                           const ConnectiveLexicon &lexicon) {
  std::vector<std::string> folded;
  folded.reserve(tokens.size());
  for (const auto &t : tokens) folded.push_back(fold_case(t));

  const auto &entries = lexicon.entries();
  std::vector<Match> matches;
  for (std::size_t start = 0; start < folded.size(); ++start) {
    for (std::size_t idx : lexicon.starting_with(folded[start])) {
      const ConnectiveEntry &e = entries[idx];
      if (!e.positions_allowed.contains(position_at(tokens, start))) continue;
      if (!matches_at(folded, start, e.head)) continue;
      Match m{idx, {start, start + e.head.size()}, std::nullopt, e.length()};
      if (e.discontinuous()) {
        // Gap of at least one token; nearest tail occurrence wins.
        for (std::size_t k = m.head.end + 1; k + e.tail.size() <= folded.size(); ++k) {
          if (matches_at(folded, k, e.tail)) {
            m.tail = TokenSpan{k, k + e.tail.size()};
            break;
          }
        }
        if (!m.tail) continue;
      }
      matches.push_back(m);
    }
  }

  std::sort(matches.begin(), matches.end(), [](const Match &a, const Match &b) {
    return std::tuple(b.length, a.head.begin, a.entry) <
           std::tuple(a.length, b.head.begin, b.entry);
  });

  std::vector<bool> taken(folded.size(), false);
  const auto free = [&](const TokenSpan &s) {
    return std::none_of(taken.begin() + s.begin, taken.begin() + s.end,
                        [](bool b) { return b; });
  };
  const auto claim = [&](const TokenSpan &s) {
    std::fill(taken.begin() + s.begin, taken.begin() + s.end, true);
  };

  std::vector<Match> accepted;
  for (const Match &m : matches) {
    if (!free(m.head) || (m.tail && !free(*m.tail))) continue;
    claim(m.head);
    if (m.tail) claim(*m.tail);
    accepted.push_back(m);
  }
  std::sort(accepted.begin(), accepted.end(), [](const Match &a, const Match &b) {
    return a.head.begin < b.head.begin;
  });

  std::vector<Detection> out;
  out.reserve(accepted.size());
  for (const Match &m : accepted) {
    std::vector<std::string> words(folded.begin() + m.head.begin,
                                   folded.begin() + m.head.end);
    if (m.tail) {
      words.insert(words.end(), folded.begin() + m.tail->begin,
                   folded.begin() + m.tail->end);
    }
    out.push_back(Detection{join(words, " "), entries[m.entry].primary_sense,
                            m.head, m.tail, position_at(tokens, m.head.begin)});
  }
  return out;
}

std::vector<Detection> tag_sentence(std::string_view sentence,
                                    const ConnectiveLexicon &lexicon) {
  const std::vector<std::string> tokens = tokenize(sentence);
  return tag(tokens, lexicon);
}

}  // namespace exmine
