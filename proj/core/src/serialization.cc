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

#include "exmine/serialization.h"

#include <utility>

#include "json.hpp"

namespace exmine {
namespace {

using nlohmann::json;

json span_json(const TokenSpan &s) { return json::array({s.begin, s.end}); }

TokenSpan span_from(const json &j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("span must be [begin, end]");
  return TokenSpan{j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

json detection_json(const Detection &d) {
  json j = {{"text", d.connective_text},
            {"sense", sense_name(d.sense)},
            {"span", span_json(d.span)},
            {"position", position_name(d.position)}};
  if (d.tail_span) j["tail_span"] = span_json(*d.tail_span);
  return j;
}

Detection detection_from(const json &j) {
  Detection d;
  d.connective_text = j.at("text").get<std::string>();
  d.sense = parse_sense(j.at("sense").get<std::string>());
  d.span = span_from(j.at("span"));
  if (j.contains("tail_span")) d.tail_span = span_from(j.at("tail_span"));
  d.position = parse_position(j.at("position").get<std::string>());
  return d;
}

json candidate_json(const CandidateInstance &c) {
  return json{{"doc_id", c.doc_id},     {"paragraph_idx", c.paragraph_idx},
              {"pair_idx", c.pair_idx}, {"arg1", c.arg1},
              {"arg2", c.arg2},         {"target_refs", c.target_refs}};
}

CandidateInstance candidate_from(const json &j) {
  CandidateInstance c;
  c.doc_id = j.at("doc_id").get<std::string>();
  c.paragraph_idx = j.at("paragraph_idx").get<std::size_t>();
  c.pair_idx = j.at("pair_idx").get<std::size_t>();
  c.arg1 = j.at("arg1").get<std::string>();
  c.arg2 = j.at("arg2").get<std::string>();
  if (j.contains("target_refs")) {
    c.target_refs = j.at("target_refs").get<std::map<LanguageId, std::string>>();
  }
  return c;
}

std::string dump(const json &j) {
  return j.dump(-1, ' ', false, json::error_handler_t::strict);
}

// Runs `fn` on the parsed object and converts any failure to FormatError.
template <typename Fn>
auto parse_with(std::string_view text, std::size_t line, std::string_view what, Fn fn) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    return fn(j);
  } catch (const FormatError &) {
    throw;
  } catch (const std::exception &e) {
    throw FormatError("bad " + std::string(what) + " record: " + e.what(), line);
  }
}

}  // namespace

std::string to_json_line(const ParallelDocument &doc) {
  json paragraphs = json::array();
  for (const Paragraph &p : doc.paragraphs) {
    json groups = json::array();
    for (const SentenceGroup &g : p) groups.push_back(g);
    paragraphs.push_back(std::move(groups));
  }
  return dump(json{{"doc_id", doc.doc_id}, {"paragraphs", std::move(paragraphs)}});
}

std::string to_json_line(const CandidateInstance &candidate) {
  return dump(candidate_json(candidate));
}

std::string to_json_line(const CandidateEvidence &item) {
  json j = candidate_json(item.candidate);
  json evidence = json::object();
  for (const auto &[lang, ev] : item.evidence) {
    json detections = json::array();
    for (const Detection &d : ev.detections) detections.push_back(detection_json(d));
    evidence[lang] = json{{"present", ev.present},
                          {"detections", std::move(detections)},
                          {"chosen", ev.chosen ? detection_json(*ev.chosen) : json(nullptr)}};
  }
  j["evidence"] = std::move(evidence);
  return dump(j);
}

std::string to_json_line(const LabeledInstance &inst) {
  return dump(json{{"doc_id", inst.ref.doc_id},
                   {"paragraph_idx", inst.ref.paragraph_idx},
                   {"pair_idx", inst.ref.pair_idx},
                   {"arg1", inst.arg1},
                   {"arg2", inst.arg2},
                   {"sense", sense_name(inst.sense)},
                   {"source", inst.source},
                   {"contributing_languages", inst.contributing_languages}});
}

std::string to_json_line(const TrainingRecord &record) {
  return dump(json{{"arg1", record.arg1},
                   {"arg2", record.arg2},
                   {"sense", sense_name(record.sense)},
                   {"source", record.source}});
}

std::string tag_record_json(std::size_t line, std::string_view sentence,
                            std::span<const Detection> detections) {
  json list = json::array();
  for (const Detection &d : detections) list.push_back(detection_json(d));
  return dump(json{{"line", line}, {"sentence", sentence}, {"detections", std::move(list)}});
}

std::string to_json(const CorpusStats &stats) {
  return json{{"document_count", stats.document_count},
              {"sentence_pair_count", stats.sentence_pair_count},
              {"dropped_documents", stats.dropped_documents},
              {"dropped_sentence_groups", stats.dropped_sentence_groups},
              {"per_language_counts", stats.per_language_counts}}
      .dump(2);
}

namespace {

json report_json(const DistributionReport &report) {
  json counts = json::object();
  json proportions = json::object();
  for (SenseLabel s : kAllSenses) {
    counts[std::string(sense_name(s))] = report.count(s);
    proportions[std::string(sense_name(s))] = report.proportion(s);
  }
  return json{{"source", report.source},
              {"total", report.total()},
              {"counts", std::move(counts)},
              {"proportions", report.empty() ? json(nullptr) : std::move(proportions)}};
}

}  // namespace

std::string to_json(const DistributionReport &report) { return report_json(report).dump(2); }

std::string to_json(std::span<const DistributionReport> reports) {
  json list = json::array();
  for (const auto &r : reports) list.push_back(report_json(r));
  return list.dump(2);
}

ParallelDocument parse_document(std::string_view text, std::size_t line) {
  return parse_with(text, line, "document", [](const json &j) {
    ParallelDocument doc;
    doc.doc_id = j.at("doc_id").get<std::string>();
    for (const json &p : j.at("paragraphs")) {
      Paragraph para;
      for (const json &g : p) para.push_back(g.get<SentenceGroup>());
      doc.paragraphs.push_back(std::move(para));
    }
    return doc;
  });
}

CandidateInstance parse_candidate(std::string_view text, std::size_t line) {
  return parse_with(text, line, "candidate", candidate_from);
}

CandidateEvidence parse_candidate_evidence(std::string_view text, std::size_t line) {
  return parse_with(text, line, "evidence", [](const json &j) {
    CandidateEvidence item{candidate_from(j), {}};
    for (const auto &[lang, ev] : j.at("evidence").items()) {
      LanguageEvidence le{lang, ev.at("present").get<bool>(), {}, std::nullopt};
      for (const json &d : ev.at("detections")) le.detections.push_back(detection_from(d));
      if (!ev.at("chosen").is_null()) le.chosen = detection_from(ev.at("chosen"));
      item.evidence.emplace(lang, std::move(le));
    }
    return item;
  });
}

LabeledInstance parse_labeled_instance(std::string_view text, std::size_t line) {
  return parse_with(text, line, "labeled instance", [](const json &j) {
    LabeledInstance inst;
    inst.ref = CandidateRef{j.at("doc_id").get<std::string>(),
                            j.at("paragraph_idx").get<std::size_t>(),
                            j.at("pair_idx").get<std::size_t>()};
    inst.arg1 = j.at("arg1").get<std::string>();
    inst.arg2 = j.at("arg2").get<std::string>();
    inst.sense = parse_sense(j.at("sense").get<std::string>());
    inst.source = j.at("source").get<std::string>();
    inst.contributing_languages = j.at("contributing_languages").get<std::set<LanguageId>>();
    return inst;
  });
}

TrainingRecord parse_training_record(std::string_view text, std::size_t line) {
  return parse_with(text, line, "training", [](const json &j) {
    TrainingRecord r;
    r.arg1 = j.value("arg1", "");
    r.arg2 = j.value("arg2", "");
    r.sense = parse_sense(j.at("sense").get<std::string>());
    r.source = j.value("source", "");
    return r;
  });
}

CorpusStats parse_corpus_stats(std::string_view text) {
  return parse_with(text, 0, "stats", [](const json &j) {
    CorpusStats s;
    s.document_count = j.at("document_count").get<std::size_t>();
    s.sentence_pair_count = j.at("sentence_pair_count").get<std::size_t>();
    s.dropped_documents = j.at("dropped_documents").get<std::size_t>();
    s.dropped_sentence_groups = j.value("dropped_sentence_groups", std::size_t{0});
    s.per_language_counts =
        j.value("per_language_counts", std::map<LanguageId, std::size_t>{});
    return s;
  });
}

void write_text_file(const std::filesystem::path &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace exmine
