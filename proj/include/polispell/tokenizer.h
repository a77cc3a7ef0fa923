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

#ifndef POLISPELL_TOKENIZER_H_
#define POLISPELL_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace polispell {

// A tokenized sentence. Tokens are lowercased and NFC-normalized; an
// apostrophe that follows a letter stays inside its token ("l'altro").
//
// gaps[i] is the text between tokens i-1 and i, with whitespace runs folded
// to one space; gaps[0] and gaps[size()] are the leading and trailing text,
// trimmed. So gaps.size() == tokens.size() + 1 always.
struct Sentence {
  std::string raw;
  std::vector<std::u32string> tokens;
  std::vector<std::u32string> gaps{std::u32string()};

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  // True when the gap before token i holds anything but whitespace.
  bool punctuated_before(std::size_t i) const;
  // True when the gap before token i holds . ! or ?
  bool terminated_before(std::size_t i) const;

  // Tokens [start, start + n) joined with single spaces.
  std::u32string join(std::size_t start, std::size_t n) const;
};

// Throws InputError on malformed UTF-8; `base_offset` is added to the
// reported offset.
Sentence tokenize(std::string_view raw, std::size_t base_offset = 0);

// Tokens that contain a digit are carried through untouched.
bool is_opaque(std::u32string_view token);

}  // namespace polispell

#endif  // POLISPELL_TOKENIZER_H_
