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

#ifndef POLISPELL_COMPOUND_H_
#define POLISPELL_COMPOUND_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polispell/knowledge_base.h"
#include "polispell/lexicon.h"
#include "polispell/mwe.h"
#include "polispell/tokenizer.h"

namespace polispell {

enum class Resolution {
  kKept,           // dictionary word, or nothing better was found
  kReplaced,       // single-word lookup
  kMerged,         // joined with the previous token
  kSplit,          // two words separated by a space
  kApostrophized,  // apostrophe restored inside the token or across a pair
  kExpression,     // part of a multiword expression
};

const char* to_string(Resolution r);

// The outcome for one output position. It covers input tokens
// [index, index + consumed).
struct TokenDecision {
  std::size_t index = 0;
  std::size_t consumed = 1;
  std::u32string original;
  Resolution resolution = Resolution::kKept;
  std::u32string result;
  int distance = 0;
  // Lexicon frequency of the result; 0 for tokens left as written because
  // nothing matched.
  std::uint64_t frequency = 0;

  bool unresolved() const {
    return resolution == Resolution::kKept && frequency == 0;
  }
};

struct CorrectionResult {
  std::string corrected;
  std::vector<TokenDecision> decisions;
  EpCatalogue catalogue;
  std::vector<DerivationStep> derivation;
};

// Read-only resources shared by every sentence. `compounds` and `bigrams`
// are optional.
struct Resources {
  const KnowledgeBase* dictionary = nullptr;
  const KnowledgeBase* compounds = nullptr;
  const BigramList* bigrams = nullptr;
};

// The first token of a sentence: kept when it is a dictionary word,
// otherwise the best of single lookup, apostrophe drift and split.
TokenDecision correct_first_token(std::size_t index, std::u32string_view token,
                                  const KnowledgeBase& kb);

// A token with a resolved predecessor. When `joinable` is false (punctuation
// in between, or the predecessor is an expression) no merge or pair is
// attempted. A returned decision with consumed > 1 replaces `prev`.
TokenDecision correct_token(std::size_t index, std::u32string_view token,
                            const TokenDecision& prev, bool joinable,
                            const KnowledgeBase& kb,
                            const BigramList* bigrams);

// Expressions first, then tokens left to right with one token of lookback.
// Throws ConfigError when `resources.dictionary` is missing.
CorrectionResult correct_sentence(std::string_view raw,
                                  const Resources& resources);

}  // namespace polispell

#endif  // POLISPELL_COMPOUND_H_
