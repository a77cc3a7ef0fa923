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

#ifndef POLISPELL_UNICODE_H_
#define POLISPELL_UNICODE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polispell {

// Raised for text that is not valid UTF-8. The offset is counted in bytes
// from the start of the stream being read.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

inline constexpr char32_t kApostrophe = U'\'';

// Decodes UTF-8 into scalar values. `base_offset` is added to the offset
// reported on failure so callers streaming line by line get absolute offsets.
std::u32string decode_utf8(std::string_view text, std::size_t base_offset = 0);

std::string encode_utf8(std::u32string_view text);

// Lowercases, applies NFC and folds typographic apostrophes to U+0027.
std::u32string normalize(std::u32string_view text);

// decode_utf8 followed by normalize.
std::u32string normalize_utf8(std::string_view text,
                              std::size_t base_offset = 0);

// Normalizes a lexicon term: normalize() plus whitespace trimming and
// collapsing of internal whitespace runs to a single space. Throws
// std::invalid_argument when nothing is left.
std::u32string make_term(std::string_view utf8);

bool is_letter(char32_t c);
bool is_digit(char32_t c);
bool is_space(char32_t c);
bool is_mark(char32_t c);

// Italian vowels, with the accented forms that occur in ordinary spelling.
bool is_vowel(char32_t c);
inline bool is_consonant(char32_t c) { return is_letter(c) && !is_vowel(c); }

inline bool is_sentence_terminator(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?';
}

}  // namespace polispell

#endif  // POLISPELL_UNICODE_H_
