// Copyright 2026 The Polispell Authors.
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
#ifndef POLISPELL_TESTS_FIXTURES_H_
#define POLISPELL_TESTS_FIXTURES_H_

#include <string>
#include <string_view>
#include <vector>

#include "polispell/compound.h"
#include "polispell/knowledge_base.h"
#include "polispell/lexicon.h"

namespace polispell::testing {

// Normalized UTF-32 from a UTF-8 literal.
std::u32string U(std::string_view utf8);
std::string S(std::u32string_view text);

std::string data_path(std::string_view name);
std::vector<std::string> read_lines(std::string_view name);

// Lexicons and indexes over the bundled fixture files, built once with the
// default parameters (k = 1/3, dictionary depth 3, compound depth 4).
struct Fixture {
  Lexicon dictionary{LexiconRole::kBase};
  Lexicon compounds{LexiconRole::kCompound};
  Lexicon merged{LexiconRole::kMerged};
  KnowledgeBase dict_kb;
  KnowledgeBase compound_kb;
  BigramList bigrams;

  Resources resources() const { return {&dict_kb, &compound_kb, &bigrams}; }
};

const Fixture& fixture();

}  // namespace polispell::testing

#endif  // POLISPELL_TESTS_FIXTURES_H_
