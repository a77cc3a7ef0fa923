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

#ifndef POLISPELL_APOSTROPHE_H_
#define POLISPELL_APOSTROPHE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polispell/knowledge_base.h"
#include "polispell/lookup.h"

namespace polispell {

// Apostrophe restoration. Two shapes are handled: a fused token ("laltro")
// where the apostrophe slides through every internal position, and a spaced
// pair ("un amica") joined into one apostrophized dictionary term.

struct DriftDetermination {
  std::u32string text;
  // Number of original characters to the left of the apostrophe, 1-based.
  std::size_t position = 0;

  friend bool operator==(const DriftDetermination&,
                         const DriftDetermination&) = default;
};

// A token is eligible when it has at least two characters and no apostrophe.
bool drift_eligible(std::u32string_view token);

// The |token| - 1 hypotheses with one apostrophe, left to right.
// std::nullopt when the token is not eligible.
std::optional<std::vector<DriftDetermination>> drift_determinations(
    std::u32string_view token);

// Best apostrophized candidate over all determinations, or nothing when no
// determination reaches a term that carries an apostrophe.
std::optional<Candidate> correct_via_drift(std::u32string_view token,
                                           const KnowledgeBase& kb);

// True when a pair (prev, cur) cannot be an elision: prev ends with a vowel
// and cur starts with a consonant.
bool rejects_elision(std::u32string_view prev, std::u32string_view cur);

// Joins members of the two correction classes as `prev'cur` and accepts the
// join only when it is a dictionary term. When both queries are dictionary
// words themselves only their own join is considered. Returns the accepted
// term with the highest frequency, at distance 0.
std::optional<Candidate> correct_pair(const CandidateSet& prev,
                                      const CandidateSet& cur,
                                      const KnowledgeBase& kb);

}  // namespace polispell

#endif  // POLISPELL_APOSTROPHE_H_
