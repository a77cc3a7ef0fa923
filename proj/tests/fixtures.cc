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
#include "fixtures.h"

#include <fstream>
#include <stdexcept>

#include "polispell/unicode.h"

namespace polispell::testing {

std::u32string U(std::string_view utf8) { return normalize_utf8(utf8); }

std::string S(std::u32string_view text) { return encode_utf8(text); }

std::string data_path(std::string_view name) {
  return std::string(POLISPELL_TEST_DATA) + "/" + std::string(name);
}

std::vector<std::string> read_lines(std::string_view name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing fixture " + std::string(name));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

const Fixture& fixture() {
  static const Fixture f = [] {
    Fixture f;
    f.dictionary = load_lexicon(data_path("dictionary.tsv"), LexiconRole::kBase);
    f.compounds =
        load_lexicon(data_path("compounds.tsv"), LexiconRole::kCompound);
    f.merged = merge_lexicons(f.dictionary, f.compounds);
    f.dict_kb = KnowledgeBase::build(f.dictionary, EditParams{{1, 3}, 3});
    f.compound_kb = KnowledgeBase::build(f.merged, EditParams{{1, 3}, 4});
    std::ifstream corpus(data_path("corpus.txt"));
    f.bigrams = extract_bigrams(corpus);
    return f;
  }();
  return f;
}

}  // namespace polispell::testing
