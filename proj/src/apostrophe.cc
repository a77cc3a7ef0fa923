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

#include "polispell/apostrophe.h"

#include <algorithm>

#include "polispell/unicode.h"

namespace polispell {

bool drift_eligible(std::u32string_view token) {
  return token.size() >= 2 &&
         token.find(kApostrophe) == std::u32string_view::npos;
}

std::optional<std::vector<DriftDetermination>> drift_determinations(
    std::u32string_view token) {
  if (!drift_eligible(token)) return std::nullopt;
  std::vector<DriftDetermination> out;
  out.reserve(token.size() - 1);
  for (std::size_t pos = 1; pos < token.size(); ++pos) {
    std::u32string text(token.substr(0, pos));
    text.push_back(kApostrophe);
    text.append(token.substr(pos));
    out.push_back({std::move(text), pos});
  }
  return out;
}

std::optional<Candidate> correct_via_drift(std::u32string_view token,
                                           const KnowledgeBase& kb) {
  auto determinations = drift_determinations(token);
  if (!determinations) return std::nullopt;

  std::optional<Candidate> best;
  for (const auto& det : *determinations) {
    for (const auto& c : lookup(det.text, kb).candidates) {
      // A hit without an apostrophe is an ordinary correction of the token,
      // not an elision.
      if (c.term.find(kApostrophe) == std::u32string::npos) continue;
      if (!best || ranks_before(c, *best)) best = c;
    }
  }
  return best;
}

bool rejects_elision(std::u32string_view prev, std::u32string_view cur) {
  if (prev.empty() || cur.empty()) return true;
  return is_vowel(prev.back()) && is_consonant(cur.front());
}

std::optional<Candidate> correct_pair(const CandidateSet& prev,
                                      const CandidateSet& cur,
                                      const KnowledgeBase& kb) {
  // The raw tokens belong to their own classes even when unknown ("l").
  auto members = [](const CandidateSet& set) {
    std::vector<std::u32string> out{set.query};
    for (const auto& c : set.candidates) {
      if (c.term != set.query) out.push_back(c.term);
    }
    return out;
  };
  std::vector<std::u32string> prev_class = members(prev);
  std::vector<std::u32string> cur_class = members(cur);
  if (prev.exact() && cur.exact()) {
    prev_class.resize(1);
    cur_class.resize(1);
  }

  std::optional<Candidate> best;
  for (const auto& p : prev_class) {
    if (p.find(kApostrophe) != std::u32string::npos) continue;
    for (const auto& c : cur_class) {
      if (rejects_elision(p, c)) continue;
      std::u32string joined = p;
      joined.push_back(kApostrophe);
      joined += c;
      const DictionaryEntry* entry = kb.find_term(joined);
      if (entry == nullptr) continue;
      Candidate hit{entry->term, 0, entry->frequency};
      if (!best || ranks_before(hit, *best)) best = std::move(hit);
    }
  }
  return best;
}

}  // namespace polispell
