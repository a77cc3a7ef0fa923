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

#include "polispell/lookup.h"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace polispell {

bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.term < b.term;
}

CandidateSet lookup(std::u32string_view query, const KnowledgeBase& kb) {
  CandidateSet result{std::u32string(query), {}};
  const int threshold = edit_threshold(query.size(), kb.params());
  std::unordered_set<std::uint32_t> seen;

  auto probe = [&](const std::u32string& key) {
    for (const Posting& p : kb.find(key)) {
      // Any generator within the threshold shares a key with the query that
      // needs at most `threshold` deletions on both sides.
      if (p.deletions > static_cast<std::uint32_t>(threshold)) continue;
      const DictionaryEntry& g = kb.generator(p.generator);
      const auto len_diff = g.term.size() > query.size()
                                ? g.term.size() - query.size()
                                : query.size() - g.term.size();
      if (len_diff > static_cast<std::size_t>(threshold)) continue;
      if (!seen.insert(p.generator).second) continue;
      const int d = dl_distance(query, g.term);
      if (d <= threshold) {
        result.candidates.push_back({g.term, d, g.frequency});
      }
    }
  };

  probe(result.query);
  for_each_deletion(query, threshold, probe);
  std::sort(result.candidates.begin(), result.candidates.end(), ranks_before);
  return result;
}

CandidateSet merged_lookup(std::u32string_view prev, std::u32string_view cur,
                           const KnowledgeBase& kb) {
  std::u32string joined(prev);
  joined.push_back(U' ');
  joined.append(cur);
  return lookup(joined, kb);
}

std::vector<SplitCandidate> split_lookup(std::u32string_view token,
                                         const KnowledgeBase& kb) {
  std::vector<SplitCandidate> out;
  if (token.size() < 2) return out;
  const int threshold = edit_threshold(token.size(), kb.params());
  std::set<std::u32string> emitted;

  for (std::size_t cut = 1; cut < token.size(); ++cut) {
    const CandidateSet left = lookup(token.substr(0, cut), kb);
    if (left.empty()) continue;
    const CandidateSet right = lookup(token.substr(cut), kb);
    for (const auto& l : left.candidates) {
      for (const auto& r : right.candidates) {
        if (l.distance + r.distance > threshold) continue;
        SplitCandidate s{l, r, 0, std::min(l.frequency, r.frequency)};
        const std::u32string text = s.text();
        s.distance = dl_distance(token, text);
        if (s.distance > threshold) continue;
        if (!emitted.insert(text).second) continue;
        out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SplitCandidate& a, const SplitCandidate& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return a.text() < b.text();
            });
  return out;
}

}  // namespace polispell
