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

#ifndef POLISPELL_EDIT_DISTANCE_H_
#define POLISPELL_EDIT_DISTANCE_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace polispell {

// Exact rational, used for the length factor of the edit threshold so that
// 1/3 does not suffer from binary rounding.
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 3;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num * b.den == b.num * a.den;
  }
};

// Parses "1/3", "0.33" or "1". Throws std::invalid_argument unless the value
// lies in (0, 1].
Ratio parse_ratio(std::string_view text);
std::string to_string(const Ratio& r);

struct EditParams {
  Ratio k{1, 3};
  // Depth of the deletion expansion; hard upper bound on any correction.
  int max_edit_distance = 3;

  friend bool operator==(const EditParams&, const EditParams&) = default;
};

// Optimal string alignment distance: insertions, deletions, substitutions
// and transpositions of adjacent characters, no substring edited twice.
template <typename CharT>
int dl_distance(std::basic_string_view<CharT> a,
                std::basic_string_view<CharT> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return static_cast<int>(m);
  if (m == 0) return static_cast<int>(n);

  std::vector<int> before(m + 1), prev(m + 1), cur(m + 1);
  std::iota(prev.begin(), prev.end(), 0);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const int cost = a[i - 1] == b[j - 1] ? 0 : 1;
      int best = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        best = std::min(best, before[j - 2] + 1);
      }
      cur[j] = best;
    }
    std::swap(before, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

inline int dl_distance(std::u32string_view a, std::u32string_view b) {
  return dl_distance<char32_t>(a, b);
}

// All distinct strings obtained by removing between 1 and
// min(max_deletions, |term|) characters. The term itself is not included.
// Sorted ascending.
std::vector<std::u32string> deletions(std::u32string_view term,
                                      int max_deletions);

// Calls `sink(variant)` once per distinct deletion variant, shortest last.
template <typename Sink>
void for_each_deletion(std::u32string_view term, int max_deletions,
                       Sink&& sink);

// min(round_half_up(length * k), max_edit_distance).
int edit_threshold(std::size_t length, const EditParams& params);

}  // namespace polispell

#include "polispell/internal/deletions_impl.h"

#endif  // POLISPELL_EDIT_DISTANCE_H_
