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

#include "exmine/lexicon.h"

#include <string>
#include <utility>

#include "exmine/errors.h"
#include "exmine/text.h"

namespace exmine {
namespace {

constexpr std::string_view kEllipsis = "\xE2\x80\xA6";  // U+2026
constexpr std::string_view kGap = "...";

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Lower-cases and isolates gap markers so that "if…then", "if … then" and
// "if ... then" all split to {"if", "...", "then"}.
std::vector<std::string> pattern_tokens(std::string_view pattern) {
  std::string spaced;
  for (std::size_t i = 0; i < pattern.size();) {
    if (pattern.substr(i).starts_with(kEllipsis)) {
      spaced += " ... ";
      i += kEllipsis.size();
    } else if (pattern.substr(i).starts_with(kGap)) {
      spaced += " ... ";
      i += kGap.size();
    } else {
      spaced += pattern[i++];
    }
  }
  return split_whitespace(fold_case(spaced));
}

std::string normalized_text(std::string_view connective) {
  std::vector<std::string> kept;
  for (auto &tok : pattern_tokens(connective)) {
    if (tok != kGap) kept.push_back(std::move(tok));
  }
  return join(kept, " ");
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.emplace_back(trim(line.substr(start, tab - start)));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace

std::string_view position_name(Position p) {
  return p == Position::kArg2Initial ? "arg2_initial" : "arg2_medial";
}

Position parse_position(std::string_view name) {
  if (name == "arg2_initial") return Position::kArg2Initial;
  if (name == "arg2_medial") return Position::kArg2Medial;
  throw LookupError("unknown position '" + std::string(name) + "'");
}

std::string PositionSet::to_string() const {
  std::string out;
  for (Position p : {Position::kArg2Initial, Position::kArg2Medial}) {
    if (!contains(p)) continue;
    if (!out.empty()) out += ',';
    out += position_name(p);
  }
  return out;
}

std::string ConnectiveEntry::text() const {
  std::string out = join(head, " ");
  if (!tail.empty()) out += " " + join(tail, " ");
  return out;
}

std::string ConnectiveEntry::pattern() const {
  std::string out = join(head, " ");
  if (!tail.empty()) out += " ... " + join(tail, " ");
  return out;
}

ConnectiveLexicon::ConnectiveLexicon(std::vector<ConnectiveEntry> entries,
                                     std::span<const std::size_t> lines)
    : entries_(std::move(entries)) {
  const auto line_of = [&](std::size_t i) {
    return i < lines.size() ? lines[i] : 0;
  };
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    ConnectiveEntry &e = entries_[i];
    for (auto &tok : e.head) tok = fold_case(tok);
    for (auto &tok : e.tail) tok = fold_case(tok);
    if (e.head.empty()) throw LexiconError("empty connective pattern", line_of(i));
    if (e.positions_allowed.empty()) {
      throw LexiconError("no positions for '" + e.pattern() + "'", line_of(i));
    }
    const std::string key = e.pattern() + '\t' + e.positions_allowed.to_string();
    if (auto [it, fresh] = seen.emplace(key, i); !fresh) {
      std::string msg = "duplicate entry '" + e.pattern() + "' (" +
                        e.positions_allowed.to_string() + ")";
      if (line_of(it->second) != 0) {
        msg += ", first defined on line " + std::to_string(line_of(it->second));
      }
      throw LexiconError(msg, line_of(i));
    }
    by_first_token_[e.head.front()].push_back(i);
    by_text_.try_emplace(e.text(), i);
  }
}

std::span<const std::size_t> ConnectiveLexicon::starting_with(
    std::string_view folded_token) const {
  const auto it = by_first_token_.find(std::string(folded_token));
  if (it == by_first_token_.end()) return {};
  return it->second;
}

SenseLabel ConnectiveLexicon::sense_of(std::string_view connective_text) const {
  const auto it = by_text_.find(normalized_text(connective_text));
  if (it == by_text_.end()) {
    throw LookupError("connective '" + std::string(connective_text) +
                      "' is not in the lexicon");
  }
  return entries_[it->second].primary_sense;
}

ConnectiveLexicon parse_lexicon(std::string_view text) {
  std::vector<ConnectiveEntry> entries;
  std::vector<std::size_t> line_numbers;
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    const std::string_view line = trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;

    const std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 3) {
      throw LexiconError("expected 3 tab-separated columns (pattern, sense, "
                         "positions), got " + std::to_string(cols.size()),
                         line_no);
    }

    ConnectiveEntry entry;
    bool in_tail = false;
    for (auto &tok : pattern_tokens(cols[0])) {
      if (tok == kGap) {
        if (in_tail) throw LexiconError("more than one gap marker", line_no);
        if (entry.head.empty()) {
          throw LexiconError("gap marker must follow a token", line_no);
        }
        in_tail = true;
      } else {
        (in_tail ? entry.tail : entry.head).push_back(std::move(tok));
      }
    }
    if (entry.head.empty()) throw LexiconError("empty connective pattern", line_no);
    if (in_tail && entry.tail.empty()) {
      throw LexiconError("gap marker must be followed by a token", line_no);
    }

    const auto sense = try_parse_sense(cols[1]);
    if (!sense) throw LexiconError("unknown sense '" + cols[1] + "'", line_no);
    entry.primary_sense = *sense;

    std::string_view positions = cols[2];
    while (true) {
      const std::size_t comma = positions.find(',');
      const std::string_view name = trim(positions.substr(0, comma));
      if (name == "arg2_initial") {
        entry.positions_allowed.insert(Position::kArg2Initial);
      } else if (name == "arg2_medial") {
        entry.positions_allowed.insert(Position::kArg2Medial);
      } else {
        throw LexiconError("unknown position '" + std::string(name) + "'", line_no);
      }
      if (comma == std::string_view::npos) break;
      positions.remove_prefix(comma + 1);
    }

    entries.push_back(std::move(entry));
    line_numbers.push_back(line_no);
  }
  return ConnectiveLexicon(std::move(entries), line_numbers);
}

ConnectiveLexicon load_lexicon(const std::filesystem::path &path) {
  return parse_lexicon(read_file(path));
}

}  // namespace exmine
