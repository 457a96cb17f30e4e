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

#include "exmine/candidates.h"

#include <algorithm>
#include <string>

#include "exmine/tagger.h"

namespace exmine {

bool is_explicit(std::string_view arg2, const ConnectiveLexicon &lexicon) {
  return !tag_sentence(arg2, lexicon).empty();
}

std::vector<CandidateInstance> extract_candidates(const std::vector<ParallelDocument> &corpus,
                                                  const ConnectiveLexicon &lexicon) {
  const std::string en(kEnglish);
  std::vector<CandidateInstance> out;
  for (const ParallelDocument &doc : corpus) {
    for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
      const Paragraph &para = doc.paragraphs[p];
      for (std::size_t i = 1; i < para.size(); ++i) {
        const std::string &arg2 = para[i].at(en);
        if (is_explicit(arg2, lexicon)) continue;
        CandidateInstance c{doc.doc_id, p, i, para[i - 1].at(en), arg2, {}};
        for (const auto &[lang, sentence] : para[i]) {
          if (lang != en) c.target_refs.emplace(lang, sentence);
        }
        out.push_back(std::move(c));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CandidateInstance &a, const CandidateInstance &b) {
                     return a.ref() < b.ref();
                   });
  return out;
}

}  // namespace exmine
