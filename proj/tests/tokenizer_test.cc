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

#include <doctest.h>

#include "fixtures.h"
#include "polispell/unicode.h"

namespace polispell {
namespace {

using testing::S;
using testing::U;

std::vector<std::string> words(const Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) out.push_back(S(t));
  return out;
}

TEST_CASE("apostrophe stays inside its token") {
  CHECK(words(tokenize("tra l'altro")) ==
        std::vector<std::string>{"tra", "l'altro"});
  CHECK(words(tokenize("tra l’altro")) ==
        std::vector<std::string>{"tra", "l'altro"});
}

TEST_CASE("lowercases and splits on whitespace") {
  CHECK(words(tokenize("Lacqua score verso il basso")) ==
        std::vector<std::string>{"lacqua", "score", "verso", "il", "basso"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("   ").empty());
}

TEST_CASE("punctuation is kept in the gaps") {
  const Sentence s = tokenize("  Ciao,   mondo!  Si.");
  CHECK(words(s) == std::vector<std::string>{"ciao", "mondo", "si"});
  REQUIRE(s.gaps.size() == 4);
  CHECK(S(s.gaps[0]).empty());
  CHECK(S(s.gaps[1]) == ", ");
  CHECK(S(s.gaps[2]) == "! ");
  CHECK(S(s.gaps[3]) == ".");
  CHECK(s.punctuated_before(1));
  CHECK_FALSE(s.terminated_before(1));
  CHECK(s.terminated_before(2));
}

TEST_CASE("leading apostrophe is punctuation, trailing one binds") {
  CHECK(words(tokenize("'ciao po' di")) ==
        std::vector<std::string>{"ciao", "po'", "di"});
}

TEST_CASE("NFC composes decomposed accents") {
  const Sentence s = tokenize("comunita\xCC\x80");  // a + combining grave
  REQUIRE(s.size() == 1);
  CHECK(s.tokens[0] == U"comunità");
}

TEST_CASE("digits are opaque tokens") {
  const Sentence s = tokenize("nel 2019 o 3a");
  CHECK(words(s) == std::vector<std::string>{"nel", "2019", "o", "3a"});
  CHECK(is_opaque(s.tokens[1]));
  CHECK(is_opaque(s.tokens[3]));
  CHECK_FALSE(is_opaque(s.tokens[0]));
}

TEST_CASE("malformed UTF-8 reports the byte offset") {
  try {
    tokenize("abc \xC3(", 10);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.byte_offset() == 14);
  }
}

TEST_CASE("join uses single spaces") {
  const Sentence s = tokenize("presidenza  del,consiglio");
  CHECK(S(s.join(0, 3)) == "presidenza del consiglio");
}

}  // namespace
}  // namespace polispell
