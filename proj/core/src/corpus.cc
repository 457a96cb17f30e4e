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

#include "exmine/corpus.h"

#include <algorithm>
#include <set>
#include <utility>

#include "exmine/errors.h"
#include "exmine/text.h"

namespace exmine {
namespace {

bool is_tag(std::string_view line, std::string_view name) {
  if (!line.starts_with(name)) return false;
  const std::string_view rest = line.substr(name.size());
  return !rest.empty() && (rest.front() == ' ' || rest.front() == '>');
}

// Value of the id attribute of a chapter tag, or "" if there is none.
std::string chapter_id(std::string_view tag) {
  const std::string folded = fold_case(tag);
  const std::size_t at = folded.find(" id=");
  if (at == std::string::npos) return {};
  std::string_view value = tag.substr(at + 4);
  const std::size_t stop = value.find_first_of(" >");
  value = value.substr(0, stop);
  if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
      value.back() == value.front()) {
    value = value.substr(1, value.size() - 2);
  }
  return std::string(value);
}

struct Chunk {
  std::string id;
  std::vector<const RawCorpusLine *> lines;  // chapter marker excluded
};

std::vector<Chunk> split_chapters(const std::vector<RawCorpusLine> &lines) {
  std::vector<Chunk> chunks;
  std::map<std::string, std::size_t> seen;
  const auto open = [&](std::string id) {
    if (id.empty()) id = "ch" + std::to_string(chunks.size() + 1);
    if (const std::size_t n = ++seen[id]; n > 1) id += "~" + std::to_string(n);
    chunks.push_back(Chunk{std::move(id), {}});
  };
  for (const RawCorpusLine &line : lines) {
    if (line.kind == MarkupKind::kChapterMarker) {
      open(chapter_id(line.text));
      continue;
    }
    if (chunks.empty()) open("preamble");
    chunks.back().lines.push_back(&line);
  }
  return chunks;
}

bool usable_sentence(std::string_view sentence) {
  const std::vector<std::string> tokens = tokenize(sentence);
  if (tokens.size() < 2) return false;
  return !std::all_of(tokens.begin(), tokens.end(),
                      [](const std::string &t) { return is_punctuation_token(t); });
}

}  // namespace

std::string_view markup_kind_name(MarkupKind kind) {
  switch (kind) {
    case MarkupKind::kChapterMarker: return "chapter_marker";
    case MarkupKind::kSpeakerMarker: return "speaker_marker";
    case MarkupKind::kParagraphMarker: return "paragraph_marker";
    case MarkupKind::kSentence: return "sentence";
  }
  return "sentence";
}

std::vector<RawCorpusLine> parse_lines(std::string_view raw_text, CorpusFormat format,
                                       std::vector<std::string> *warnings) {
  (void)format;  // Europarl is the only markup dialect so far.
  const std::vector<std::string> lines = split_lines(raw_text);
  std::vector<RawCorpusLine> out;
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view text = trim(lines[i]);
    if (text.empty()) continue;
    MarkupKind kind = MarkupKind::kSentence;
    if (is_tag(text, "<CHAPTER")) {
      kind = MarkupKind::kChapterMarker;
    } else if (is_tag(text, "<SPEAKER")) {
      kind = MarkupKind::kSpeakerMarker;
    } else if (text == "<P>") {
      kind = MarkupKind::kParagraphMarker;
    } else if (text.front() == '<' && text.back() == '>' && warnings != nullptr) {
      warnings->push_back("line " + std::to_string(i + 1) +
                          ": unknown markup kept as sentence: " + std::string(text));
    }
    out.push_back(RawCorpusLine{std::string(text), kind, i + 1});
  }
  return out;
}

std::size_t ParallelDocument::group_count() const {
  std::size_t n = 0;
  for (const Paragraph &p : paragraphs) n += p.size();
  return n;
}

AlignedCorpus align_documents(
    const std::map<LanguageId, std::vector<RawCorpusLine>> &per_language,
    std::string_view doc_id_prefix) {
  AlignedCorpus result;
  for (const auto &[lang, lines] : per_language) {
    result.languages.push_back(lang);
    result.stats.per_language_counts[lang] = 0;
  }
  if (per_language.empty()) return result;

  std::map<LanguageId, std::map<std::string, Chunk>> chunks;
  // Document order follows English when present, else the first language;
  // ids only seen elsewhere are appended (they are always dropped).
  std::vector<std::string> order;
  std::set<std::string> ordered;
  const auto ref = per_language.contains("en") ? per_language.find("en")
                                               : per_language.begin();
  const auto visit = [&](const LanguageId &lang) {
    for (Chunk &c : split_chapters(per_language.at(lang))) {
      if (ordered.insert(c.id).second) order.push_back(c.id);
      chunks[lang].emplace(c.id, std::move(c));
    }
  };
  visit(ref->first);
  for (const auto &[lang, lines] : per_language) {
    if (lang != ref->first) visit(lang);
  }

  for (const std::string &id : order) {
    std::vector<const Chunk *> parts;
    for (const auto &lang : result.languages) {
      const auto it = chunks[lang].find(id);
      if (it == chunks[lang].end()) break;
      parts.push_back(&it->second);
    }
    const auto same_kinds = [&](const Chunk *c) {
      const Chunk *first = parts.front();
      return c->lines.size() == first->lines.size() &&
             std::equal(c->lines.begin(), c->lines.end(), first->lines.begin(),
                        [](const RawCorpusLine *a, const RawCorpusLine *b) {
                          return a->kind == b->kind;
                        });
    };
    if (parts.size() != result.languages.size() ||
        !std::all_of(parts.begin(), parts.end(), same_kinds)) {
      ++result.stats.dropped_documents;
      continue;
    }

    ParallelDocument doc{std::string(doc_id_prefix) + id, {}};
    Paragraph current;
    const auto close = [&] {
      if (!current.empty()) doc.paragraphs.push_back(std::move(current));
      current.clear();
    };
    for (std::size_t i = 0; i < parts.front()->lines.size(); ++i) {
      if (parts.front()->lines[i]->kind != MarkupKind::kSentence) {
        close();
        continue;
      }
      SentenceGroup group;
      bool usable = true;
      for (std::size_t l = 0; l < parts.size(); ++l) {
        const std::string &text = parts[l]->lines[i]->text;
        usable = usable && usable_sentence(text);
        group.emplace(result.languages[l], text);
      }
      if (usable) {
        current.push_back(std::move(group));
      } else {
        ++result.stats.dropped_sentence_groups;
      }
    }
    close();
    if (doc.paragraphs.empty()) continue;

    const std::size_t groups = doc.group_count();
    result.stats.sentence_pair_count += groups;
    for (auto &[lang, count] : result.stats.per_language_counts) count += groups;
    result.documents.push_back(std::move(doc));
  }
  result.stats.document_count = result.documents.size();
  return result;
}

AlignedCorpus ingest_directory(const std::filesystem::path &dir,
                               const std::vector<LanguageId> &languages) {
  namespace fs = std::filesystem;
  // stem -> language -> file
  std::map<std::string, std::map<LanguageId, fs::path>> sources;
  for (const LanguageId &lang : languages) {
    const fs::path single = dir / (lang + ".txt");
    const fs::path nested = dir / lang;
    if (fs::is_regular_file(single)) {
      sources[""][lang] = single;
    } else if (fs::is_directory(nested)) {
      for (const auto &entry : fs::directory_iterator(nested)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
          sources[entry.path().stem().string()][lang] = entry.path();
        }
      }
    } else {
      throw IoError("no input for language '" + lang + "' under " + dir.string());
    }
  }

  AlignedCorpus merged;
  merged.languages = languages;
  std::sort(merged.languages.begin(), merged.languages.end());
  for (const LanguageId &lang : merged.languages) merged.stats.per_language_counts[lang] = 0;

  for (const auto &[stem, files] : sources) {
    std::map<LanguageId, std::vector<RawCorpusLine>> lines;
    for (const LanguageId &lang : languages) {
      auto &dest = lines[lang];
      const auto it = files.find(lang);
      if (it == files.end()) continue;
      std::vector<std::string> warnings;
      try {
        dest = parse_lines(read_file(it->second), CorpusFormat::kEuroparl, &warnings);
      } catch (const EncodingError &e) {
        throw EncodingError(it->second.string() + ": " + e.what(), e.line());
      }
      for (auto &w : warnings) merged.warnings.push_back(it->second.string() + ": " + w);
    }
    AlignedCorpus part = align_documents(lines, stem.empty() ? "" : stem + "/");
    for (auto &doc : part.documents) merged.documents.push_back(std::move(doc));
    merged.stats.sentence_pair_count += part.stats.sentence_pair_count;
    merged.stats.dropped_documents += part.stats.dropped_documents;
    merged.stats.dropped_sentence_groups += part.stats.dropped_sentence_groups;
    for (const auto &[lang, n] : part.stats.per_language_counts) {
      merged.stats.per_language_counts[lang] += n;
    }
  }
  merged.stats.document_count = merged.documents.size();
  return merged;
}

std::vector<SentencePosition> sentence_positions(const std::vector<ParallelDocument> &docs) {
  std::vector<SentencePosition> out;
  for (const ParallelDocument &doc : docs) {
    for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
      for (std::size_t s = 0; s < doc.paragraphs[p].size(); ++s) {
        out.push_back(SentencePosition{doc.doc_id, p, s});
      }
    }
  }
  return out;
}

}  // namespace exmine
