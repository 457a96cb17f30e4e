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

// exmine: mine implicit discourse relation instances from parallel corpora.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exmine/backtranslation.h"
#include "exmine/candidates.h"
#include "exmine/corpus.h"
#include "exmine/emit.h"
#include "exmine/errors.h"
#include "exmine/lexicon.h"
#include "exmine/pipeline.h"
#include "exmine/serialization.h"
#include "exmine/tagger.h"
#include "exmine/text.h"
#include "exmine/vote.h"

namespace fs = std::filesystem;
using namespace exmine;

namespace {

void print_warnings(const std::vector<std::string> &warnings) {
  for (const auto &w : warnings) std::cerr << "exmine: warning: " << w << '\n';
}

std::vector<LanguageId> split_commas(const std::string &s) {
  std::vector<LanguageId> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string part(trim(std::string_view(s).substr(start, comma - start)));
    if (!part.empty()) out.push_back(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Parses repeated "lang=path" arguments.
std::map<LanguageId, fs::path> parse_bt_args(const std::vector<std::string> &args) {
  std::map<LanguageId, fs::path> out;
  for (const auto &arg : args) {
    const std::size_t eq = arg.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
      throw CLI::ValidationError("--bt", "expected LANG=FILE, got '" + arg + "'");
    }
    if (!out.emplace(arg.substr(0, eq), arg.substr(eq + 1)).second) {
      throw CLI::ValidationError("--bt", "language given twice: " + arg.substr(0, eq));
    }
  }
  return out;
}

std::vector<BackTranslationSet> load_bt_sets(const std::map<LanguageId, fs::path> &files,
                                             const std::vector<ParallelDocument> &corpus) {
  const std::vector<SentencePosition> positions = sentence_positions(corpus);
  std::vector<BackTranslationSet> sets;
  std::vector<std::string> warnings;
  for (const auto &[lang, path] : files) {
    sets.push_back(load_backtranslations(lang, path, positions, &warnings));
  }
  print_warnings(warnings);
  return sets;
}

std::vector<ParallelDocument> read_corpus(const fs::path &path) {
  return read_jsonl<ParallelDocument>(path, parse_document);
}

void write_corpus(const fs::path &path, const AlignedCorpus &corpus) {
  write_jsonl<ParallelDocument>(path, corpus.documents);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Mine implicit discourse relations from translator-inserted connectives"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "exmine 0.1.0");

  std::string lexicon_path = EXMINE_DEFAULT_LEXICON_PATH;
  const auto add_lexicon = [&](CLI::App *cmd) {
    cmd->add_option("--lexicon", lexicon_path, "Connective lexicon (TSV)")
        ->check(CLI::ExistingFile)
        ->capture_default_str();
  };

  // ingest
  std::string langs = "en,fr,de,cs";
  std::string in_dir, out_file, stats_file;
  auto *ingest = app.add_subcommand("ingest", "Build the document-aligned corpus");
  ingest->add_option("--langs", langs, "Comma-separated languages")->capture_default_str();
  ingest->add_option("--in", in_dir, "Directory with <lang>.txt or <lang>/*.txt")
      ->required()
      ->check(CLI::ExistingDirectory);
  ingest->add_option("--out", out_file, "Document-aligned corpus (JSONL)")->required();
  ingest->add_option("--stats", stats_file, "Corpus statistics (JSON)");

  // tag
  std::string in_file;
  auto *tagc = app.add_subcommand("tag", "Tag connectives in one sentence per line");
  add_lexicon(tagc);
  tagc->add_option("--in", in_file, "Sentences, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  tagc->add_option("--out", out_file, "Detections (JSONL)")->required();

  // candidates
  std::string corpus_file;
  auto *cands = app.add_subcommand("candidates", "Extract implicit relation candidates");
  cands->add_option("--corpus", corpus_file, "Document-aligned corpus")
      ->required()
      ->check(CLI::ExistingFile);
  add_lexicon(cands);
  cands->add_option("--out", out_file, "Candidates (JSONL)")->required();

  // evidence
  std::string candidates_file;
  std::vector<std::string> bt_args;
  auto *evid = app.add_subcommand("evidence", "Tag back-translations of each candidate");
  evid->add_option("--candidates", candidates_file, "Candidates (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  evid->add_option("--corpus", corpus_file,
                   "Document-aligned corpus the back-translations follow")
      ->required()
      ->check(CLI::ExistingFile);
  evid->add_option("--bt", bt_args, "LANG=FILE back-translation, repeatable")->required();
  add_lexicon(evid);
  evid->add_option("--out", out_file, "Evidence (JSONL)")->required();

  // vote
  std::string evidence_file, mode_name;
  auto *votec = app.add_subcommand("vote", "Label candidates from evidence");
  votec->add_option("--evidence", evidence_file, "Evidence (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  votec->add_option("--mode", mode_name, "all, vote2 or vote3")
      ->required()
      ->check(CLI::IsMember({"all", "vote2", "vote3"}));
  votec->add_option("--out", out_file, "Labeled instances (JSONL)")->required();

  // emit
  auto *emitc = app.add_subcommand("emit", "Write classifier training data");
  emitc->add_option("--in", in_file, "Labeled instances (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  emitc->add_option("--out", out_file, "Training file (JSONL)")->required();

  // stats
  std::string stats_inputs;
  bool compare = false;
  auto *statsc = app.add_subcommand("stats", "Sense distribution report");
  statsc->add_option("--in", stats_inputs, "FILE[,FILE...] of JSONL records with a sense")
      ->required();
  statsc->add_option("--out", out_file, "Report (JSON)")->required();
  statsc->add_flag("--compare", compare,
                   "Print total-variation distance between consecutive inputs");

  // pipeline
  std::string out_dir;
  auto *pipe = app.add_subcommand("pipeline", "Run ingest through emit in one go");
  pipe->add_option("--langs", langs, "Comma-separated languages")->capture_default_str();
  pipe->add_option("--in", in_dir, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  pipe->add_option("--bt", bt_args, "LANG=FILE back-translation, repeatable")->required();
  add_lexicon(pipe);
  pipe->add_option("--out-dir", out_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      AlignedCorpus corpus = ingest_directory(in_dir, split_commas(langs));
      print_warnings(corpus.warnings);
      write_corpus(out_file, corpus);
      if (!stats_file.empty()) write_text_file(stats_file, to_json(corpus.stats) + "\n");
      std::cerr << "exmine: " << corpus.stats.document_count << " documents, "
                << corpus.stats.sentence_pair_count << " sentence groups, "
                << corpus.stats.dropped_documents << " documents dropped\n";
    } else if (*tagc) {
      const ConnectiveLexicon lexicon = load_lexicon(lexicon_path);
      const std::vector<std::string> lines = split_lines(read_file(in_file));
      std::string out;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto detections = tag_sentence(lines[i], lexicon);
        out += tag_record_json(i + 1, lines[i], detections) + "\n";
      }
      write_text_file(out_file, out);
    } else if (*cands) {
      const ConnectiveLexicon lexicon = load_lexicon(lexicon_path);
      const auto candidates = extract_candidates(read_corpus(corpus_file), lexicon);
      write_jsonl<CandidateInstance>(out_file, candidates);
      std::cerr << "exmine: " << candidates.size() << " candidates\n";
    } else if (*evid) {
      const ConnectiveLexicon lexicon = load_lexicon(lexicon_path);
      const auto sets = load_bt_sets(parse_bt_args(bt_args), read_corpus(corpus_file));
      const auto candidates = read_jsonl<CandidateInstance>(candidates_file, parse_candidate);
      EvidenceDiagnostics diag;
      const auto evidence = collect_all_evidence(candidates, sets, lexicon, &diag);
      write_jsonl<CandidateEvidence>(out_file, evidence);
      if (diag.missing_positions > 0) {
        std::cerr << "exmine: warning: " << diag.missing_positions
                  << " candidate positions missing from back-translations\n";
      }
    } else if (*votec) {
      const auto evidence =
          read_jsonl<CandidateEvidence>(evidence_file, parse_candidate_evidence);
      const auto instances = materialize(evidence, parse_vote_mode(mode_name));
      write_jsonl<LabeledInstance>(out_file, instances);
      std::cerr << "exmine: " << instances.size() << " instances (" << mode_name << ")\n";
    } else if (*emitc) {
      const auto instances = read_jsonl<LabeledInstance>(in_file, parse_labeled_instance);
      const std::size_t n = emit_training_file(instances, out_file);
      std::cerr << "exmine: wrote " << n << " training instances\n";
    } else if (*statsc) {
      std::vector<DistributionReport> reports;
      for (const auto &file : split_commas(stats_inputs)) {
        const auto records = read_training_file(file);
        reports.push_back(distribution(fs::path(file).stem().string(), records));
        if (reports.back().empty()) {
          std::cerr << "exmine: warning: " << file << " has no instances; proportions undefined\n";
        }
      }
      if (reports.size() == 1) {
        write_text_file(out_file, to_json(reports.front()) + "\n");
      } else {
        write_text_file(out_file, to_json(std::span<const DistributionReport>(reports)) + "\n");
      }
      if (compare) {
        for (std::size_t i = 1; i < reports.size(); ++i) {
          std::cout << reports[i - 1].source << " vs " << reports[i].source << ": "
                    << compare_distributions(reports[i - 1], reports[i]) << '\n';
        }
      }
    } else if (*pipe) {
      const fs::path dir(out_dir);
      fs::create_directories(dir);
      const ConnectiveLexicon lexicon = load_lexicon(lexicon_path);
      AlignedCorpus corpus = ingest_directory(in_dir, split_commas(langs));
      print_warnings(corpus.warnings);
      write_corpus(dir / "corpus.jsonl", corpus);
      write_text_file(dir / "corpus_stats.json", to_json(corpus.stats) + "\n");
      const auto sets = load_bt_sets(parse_bt_args(bt_args), corpus.documents);
      const MiningResult result = mine(corpus.documents, sets, lexicon);
      write_jsonl<CandidateInstance>(dir / "candidates.jsonl", result.candidates);
      write_jsonl<CandidateEvidence>(dir / "evidence.jsonl", result.evidence);
      std::vector<DistributionReport> reports;
      for (VoteMode mode : {VoteMode::kAll, VoteMode::kVote2, VoteMode::kVote3}) {
        const std::string name(vote_mode_name(mode));
        write_jsonl<LabeledInstance>(dir / (name + ".jsonl"), result.instances(mode));
        emit_training_file(result.instances(mode), dir / ("train_" + name + ".jsonl"));
        reports.push_back(distribution(name, result.instances(mode)));
      }
      write_text_file(dir / "distribution.json",
                      to_json(std::span<const DistributionReport>(reports)) + "\n");
      std::cerr << "exmine: " << result.candidates.size() << " candidates; all="
                << result.all.size() << " vote2=" << result.vote2.size()
                << " vote3=" << result.vote3.size() << '\n';
    }
  } catch (const std::exception &e) {
    std::cerr << "exmine: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
