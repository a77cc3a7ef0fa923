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

#include "polispell/edit_distance.h"

#include <charconv>
#include <stdexcept>

namespace polispell {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not an integer: " + std::string(s));
  }
  return v;
}

}  // namespace

Ratio parse_ratio(std::string_view text) {
  Ratio r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9) {
      throw std::invalid_argument("bad decimal: " + std::string(text));
    }
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    r.num = (whole.empty() ? 0 : parse_int(whole)) * r.den + parse_int(frac);
  } else {
    r.num = parse_int(text);
    r.den = 1;
  }
  if (r.den <= 0 || r.num <= 0 || r.num > r.den) {
    throw std::invalid_argument("k must lie in (0, 1]: " + std::string(text));
  }
  return r;
}

std::string to_string(const Ratio& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::vector<std::u32string> deletions(std::u32string_view term,
                                      int max_deletions) {
  std::vector<std::u32string> out;
  for_each_deletion(term, max_deletions,
                    [&](const std::u32string& v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

int edit_threshold(std::size_t length, const EditParams& params) {
  const auto len = static_cast<std::int64_t>(length);
  // round_half_up(len * num / den) == floor((2 * len * num + den) / (2 * den))
  const std::int64_t rounded =
      (2 * len * params.k.num + params.k.den) / (2 * params.k.den);
  return static_cast<int>(
      std::min<std::int64_t>(rounded, params.max_edit_distance));
}

}  // namespace polispell
