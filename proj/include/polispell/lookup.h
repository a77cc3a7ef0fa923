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

#ifndef POLISPELL_LOOKUP_H_
#define POLISPELL_LOOKUP_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polispell/knowledge_base.h"

namespace polispell {

// A generator proposed for a query, with its verified distance.
struct Candidate {
  std::u32string term;
  int distance = 0;
  std::uint64_t frequency = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Distance ascending, frequency descending, term ascending.
bool ranks_before(const Candidate& a, const Candidate& b);

struct CandidateSet {
  std::u32string query;
  std::vector<Candidate> candidates;

  bool empty() const { return candidates.empty(); }
  const Candidate& best() const { return candidates.front(); }
  // True when the query is itself a lexicon term.
  bool exact() const { return !empty() && best().distance == 0; }
};

// Every lexicon term within edit_threshold(|query|) of the query, where the
// threshold uses the knowledge base's parameters. Candidates come from the
// intersection of the query's deletion neighborhood with the index and are
// each confirmed with dl_distance.
CandidateSet lookup(std::u32string_view query, const KnowledgeBase& kb);

// Treats `prev cur` as one string, space included.
CandidateSet merged_lookup(std::u32string_view prev, std::u32string_view cur,
                           const KnowledgeBase& kb);

// A token corrected into two words separated by a space.
struct SplitCandidate {
  Candidate left;
  Candidate right;
  // dl_distance(token, left + " " + right).
  int distance = 0;
  // min(left.frequency, right.frequency).
  std::uint64_t frequency = 0;

  std::u32string text() const { return left.term + U' ' + right.term; }
};

// Tries every internal split point. Both halves must resolve and the pair
// must lie within edit_threshold(|token|). Ordered like a CandidateSet.
std::vector<SplitCandidate> split_lookup(std::u32string_view token,
                                         const KnowledgeBase& kb);

}  // namespace polispell

#endif  // POLISPELL_LOOKUP_H_
