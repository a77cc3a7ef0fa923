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

#ifndef POLISPELL_INTERNAL_DELETIONS_IMPL_H_
#define POLISPELL_INTERNAL_DELETIONS_IMPL_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace polispell {

template <typename Sink>
void for_each_deletion(std::u32string_view term, int max_deletions,
                       Sink&& sink) {
  if (max_deletions <= 0 || term.empty()) return;
  const std::size_t depth =
      std::min(static_cast<std::size_t>(max_deletions), term.size());

  // Breadth first, one level per removed character. Variants of a level all
  // share one length, so uniqueness only has to hold within a level.
  std::vector<std::u32string> frontier{std::u32string(term)};
  for (std::size_t level = 1; level <= depth; ++level) {
    std::unordered_set<std::u32string> next;
    for (const auto& s : frontier) {
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        std::u32string variant;
        variant.reserve(s.size() - 1);
        variant.append(s, 0, pos);
        variant.append(s, pos + 1, std::u32string::npos);
        next.insert(std::move(variant));
      }
    }
    frontier.assign(next.begin(), next.end());
    for (const auto& v : frontier) sink(v);
  }
}

}  // namespace polispell

#endif  // POLISPELL_INTERNAL_DELETIONS_IMPL_H_
