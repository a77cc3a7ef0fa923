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

#include "polispell/tokenizer.h"

#include <algorithm>

#include "polispell/unicode.h"

namespace polispell {

namespace {

bool is_word_char(char32_t c) {
  return is_letter(c) || is_digit(c) || is_mark(c);
}

std::u32string fold_gap(std::u32string_view gap) {
  std::u32string out;
  bool in_space = false;
  for (char32_t c : gap) {
    if (is_space(c)) {
      if (!in_space) out.push_back(U' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  return out;
}

void trim(std::u32string& s) {
  while (!s.empty() && s.back() == U' ') s.pop_back();
  std::size_t lead = 0;
  while (lead < s.size() && s[lead] == U' ') ++lead;
  s.erase(0, lead);
}

}  // namespace

bool Sentence::punctuated_before(std::size_t i) const {
  const auto& gap = gaps.at(i);
  return std::any_of(gap.begin(), gap.end(),
                     [](char32_t c) { return c != U' '; });
}

bool Sentence::terminated_before(std::size_t i) const {
  const auto& gap = gaps.at(i);
  return std::any_of(gap.begin(), gap.end(), is_sentence_terminator);
}

std::u32string Sentence::join(std::size_t start, std::size_t n) const {
  std::u32string out;
  for (std::size_t i = start; i < start + n; ++i) {
    if (i > start) out.push_back(U' ');
    out += tokens.at(i);
  }
  return out;
}

Sentence tokenize(std::string_view raw, std::size_t base_offset) {
  Sentence s;
  s.raw = std::string(raw);
  const std::u32string text = normalize_utf8(raw, base_offset);

  std::u32string gap;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i])) {
      gap.push_back(text[i++]);
      continue;
    }
    std::u32string token;
    while (i < text.size()) {
      const char32_t c = text[i];
      if (is_word_char(c)) {
        token.push_back(c);
        ++i;
      } else if (c == kApostrophe && is_letter(token.back())) {
        // Elision apostrophe: binds to the preceding letters ("l'", "po'").
        token.push_back(c);
        ++i;
      } else {
        break;
      }
    }
    s.gaps.back() = fold_gap(gap);
    s.tokens.push_back(std::move(token));
    s.gaps.emplace_back();
    gap.clear();
  }
  s.gaps.back() = fold_gap(gap);
  trim(s.gaps.front());
  trim(s.gaps.back());
  return s;
}

bool is_opaque(std::u32string_view token) {
  return std::any_of(token.begin(), token.end(), is_digit);
}

}  // namespace polispell
