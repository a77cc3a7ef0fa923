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
#ifndef POLISPELL_TESTS_ORACLES_H_
#define POLISPELL_TESTS_ORACLES_H_

// Reference implementations used only by tests. They are written to be
// obviously correct rather than fast, and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polispell::testing {

// Every subset of 1..max_deletions positions removed, via bitmasks.
inline std::set<std::u32string> brute_deletions(const std::u32string& term,
                                                int max_deletions) {
  std::set<std::u32string> out;
  const std::size_t n = term.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int removed = __builtin_popcountll(mask);
    if (removed > max_deletions) continue;
    std::u32string s;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) s.push_back(term[i]);
    }
    out.insert(s);
  }
  return out;
}

// Top-down memoized recursion over suffix pairs: the textbook restricted
// edit distance definition.
inline int brute_osa(const std::u32string& a, const std::u32string& b) {
  std::map<std::pair<std::size_t, std::size_t>, int> memo;
  std::function<int(std::size_t, std::size_t)> d = [&](std::size_t i,
                                                       std::size_t j) -> int {
    if (i == 0) return static_cast<int>(j);
    if (j == 0) return static_cast<int>(i);
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = std::min({d(i - 1, j) + 1, d(i, j - 1) + 1,
                         d(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)});
    if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
      best = std::min(best, d(i - 2, j - 2) + 1);
    }
    memo[key] = best;
    return best;
  };
  return d(a.size(), b.size());
}

inline int brute_threshold(std::size_t length, std::int64_t num,
                           std::int64_t den, int max_edit) {
  // Nearest integer, halves up, computed with long double.
  const long double x = static_cast<long double>(length) * num / den;
  const auto r = static_cast<int>(x + 0.5L + 1e-12L);
  return std::min(r, max_edit);
}

struct BruteHit {
  std::u32string term;
  int distance = 0;
  std::uint64_t frequency = 0;
};

// Linear scan of every term, ranked by distance, frequency, then text.
inline std::vector<BruteHit> brute_lookup(
    const std::u32string& query,
    const std::vector<std::pair<std::u32string, std::uint64_t>>& terms,
    int threshold) {
  std::vector<BruteHit> out;
  for (const auto& [term, freq] : terms) {
    const int d = brute_osa(query, term);
    if (d <= threshold) out.push_back({term, d, freq});
  }
  std::sort(out.begin(), out.end(), [](const BruteHit& a, const BruteHit& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.term < b.term;
  });
  return out;
}

}  // namespace polispell::testing

#endif  // POLISPELL_TESTS_ORACLES_H_
