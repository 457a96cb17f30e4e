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

#ifndef EXMINE_TESTS_SUPPORT_ORACLE_H_
#define EXMINE_TESTS_SUPPORT_ORACLE_H_

// Reference implementations used only by tests. They share no code path
// with the library beyond the lexicon data and punctuation classification.

#include <string>
#include <vector>

#include "exmine/lexicon.h"
#include "exmine/tagger.h"

namespace exmine::testing {

// Tries every lexicon pattern at every start position without the
// first-token index, then applies longest/leftmost/lexicon-order resolution.
std::vector<Detection> brute_force_tag(const std::vector<std::string> &tokens,
                                       const ConnectiveLexicon &lexicon);

}  // namespace exmine::testing

#endif  // EXMINE_TESTS_SUPPORT_ORACLE_H_
