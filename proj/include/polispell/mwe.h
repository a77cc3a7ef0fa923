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

#ifndef POLISPELL_MWE_H_
#define POLISPELL_MWE_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "polispell/knowledge_base.h"
#include "polispell/lexicon.h"
#include "polispell/tokenizer.h"

namespace polispell {

// Multiword expression recognition: every contiguous run of 1..Sup tokens
// is looked up against the merged lexicon, the closest span per compound
// expression is kept, and winners are substituted innermost-first through
// placeholders so nested expressions still match.

struct Span {
  std::size_t start = 0;
  std::size_t n = 0;

  std::size_t end() const { return start + n; }
  bool contains(const Span& o) const {
    return start <= o.start && o.end() <= end();
  }
  bool overlaps(const Span& o) const {
    return start < o.end() && o.start < end();
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct MweMatch {
  std::u32string expression;
  Span span;
  // dl_distance(span tokens joined by spaces, expression).
  int distance = 0;

  friend bool operator==(const MweMatch&, const MweMatch&) = default;
};

struct EpEntry {
  int id = 0;
  std::u32string expression;
  // Span text as it appeared in the sentence.
  std::u32string original;
  Span span;
  int distance = 0;
};

using EpCatalogue = std::vector<EpEntry>;

struct DerivationStep {
  enum class Kind {
    kSubstitute,  // a span became placeholder EP<id>
    kRewrite,     // a pending match now reads through an earlier placeholder
    kSubsumed,    // a match already inside an accepted placeholder
  };
  int step = 0;
  Kind kind = Kind::kSubstitute;
  int id = 0;
  std::u32string expression;
  // The span as currently written, placeholders included ("EP1 dei
  // ministri").
  std::u32string tokens;
  // Whole sentence after a substitution; empty for other kinds.
  std::u32string sentence;
  int distance = 0;
};

const char* to_string(DerivationStep::Kind kind);

struct MweResult {
  // Each outermost span collapsed into a single token holding the expression.
  Sentence corrected;
  // Outermost expressions, by placeholder id.
  EpCatalogue catalogue;
  std::vector<DerivationStep> derivation;
};

// min(L_F, max compound token count).
std::size_t sup_bound(const Sentence& sentence, std::size_t max_compound_tokens);
std::size_t sup_bound(const Sentence& sentence, const Lexicon& merged);

// The L_F - n + 1 contiguous spans of n tokens, left to right. Throws
// std::invalid_argument unless 1 <= n <= L_F.
std::vector<Span> enumerate_ngrams(const Sentence& sentence, std::size_t n);

// Best match per compound expression over all spans of 1..Sup tokens, using
// an index built over the merged lexicon. Only entries flagged compound are
// reported; spans never cross punctuation. Ties prefer fewer tokens, then
// the leftmost span.
std::map<std::u32string, MweMatch> match_expressions(const Sentence& sentence,
                                                     const KnowledgeBase& kb);

// Resolves partial overlaps (lower distance, then longer expression, then
// leftmost) and substitutes the survivors in order of distance, then span
// length, so an inner expression is replaced before the one enclosing it.
MweResult resolve_and_substitute(
    const Sentence& sentence, const std::map<std::u32string, MweMatch>& matches);

}  // namespace polispell

#endif  // POLISPELL_MWE_H_
