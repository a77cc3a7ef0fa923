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

#include <doctest.h>

#include "fixtures.h"
#include "polispell/knowledge_base.h"
#include "polispell/unicode.h"

namespace polispell {
namespace {

using testing::fixture;
using testing::S;
using testing::U;

std::vector<std::string> texts(const std::vector<DriftDetermination>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(S(d.text));
  return out;
}

TEST_CASE("determinations of dllaltro") {
  const auto ds = drift_determinations(U"dllaltro");
  REQUIRE(ds);
  CHECK(texts(*ds) == std::vector<std::string>{
                          "d'llaltro", "dl'laltro", "dll'altro", "dlla'ltro",
                          "dllal'tro", "dllalt'ro", "dllaltr'o"});
  for (std::size_t i = 0; i < ds->size(); ++i) CHECK((*ds)[i].position == i + 1);
}

TEST_CASE("eligibility") {
  CHECK(texts(*drift_determinations(U"ab")) == std::vector<std::string>{"a'b"});
  CHECK_FALSE(drift_determinations(U"l'altro"));
  CHECK_FALSE(drift_determinations(U"a"));
  CHECK_FALSE(drift_determinations(U""));
}

TEST_CASE("determinations are reversible") {
  for (const char* w : {"acqua", "dllaltro", "comunità", "xy"}) {
    const std::u32string token = U(w);
    const auto ds = drift_determinations(token);
    REQUIRE(ds);
    CHECK(ds->size() == token.size() - 1);
    for (const auto& d : *ds) {
      CHECK(d.text.size() == token.size() + 1);
      CHECK(d.text[d.position] == kApostrophe);
      std::u32string back = d.text;
      back.erase(d.position, 1);
      CHECK(back == token);
    }
  }
}

TEST_CASE("drift correction") {
  const KnowledgeBase& kb = fixture().dict_kb;
  const auto dell = correct_via_drift(U"dllaltro", kb);
  REQUIRE(dell);
  CHECK(S(dell->term) == "dell'altro");
  CHECK(dell->distance == 1);

  const auto lacqua = correct_via_drift(U"lacqua", kb);
  REQUIRE(lacqua);
  CHECK(S(lacqua->term) == "l'acqua");
  CHECK(lacqua->distance == 0);

  CHECK_FALSE(correct_via_drift(U"xqzp", kb));
  CHECK_FALSE(correct_via_drift(U"l'acqua", kb));
}

TEST_CASE("drift returns the best over every determination") {
  const KnowledgeBase& kb = fixture().dict_kb;
  for (const char* w : {"dllaltro", "lacqua", "unamica", "dellacqua", "laltro"}) {
    const std::u32string token = U(w);
    const auto best = correct_via_drift(token, kb);
    REQUIRE(best);
    const auto ds = drift_determinations(token);
    for (const auto& d : *ds) {
      for (const auto& c : lookup(d.text, kb).candidates) {
        if (c.term.find(kApostrophe) == std::u32string::npos) continue;
        CHECK_FALSE(ranks_before(c, *best));
      }
    }
  }
}

TEST_CASE("phonotactic filter") {
  CHECK(rejects_elision(U"le", U"strada"));
  CHECK_FALSE(rejects_elision(U"le", U"acque"));
  CHECK_FALSE(rejects_elision(U"l", U"acqua"));
  CHECK_FALSE(rejects_elision(U"un", U"amica"));
}

std::optional<Candidate> pair(const char* a, const char* b) {
  const KnowledgeBase& kb = fixture().dict_kb;
  return correct_pair(lookup(U(a), kb), lookup(U(b), kb), kb);
}

TEST_CASE("pair correction") {
  const auto l = pair("l", "acqua");
  REQUIRE(l);
  CHECK(S(l->term) == "l'acqua");
  CHECK(l->distance == 0);
  const auto un = pair("un", "amica");
  REQUIRE(un);
  CHECK(S(un->term) == "un'amica");
  CHECK_FALSE(pair("le", "acque"));
  CHECK_FALSE(pair("la", "strada"));
  CHECK_FALSE(pair("tra", "altro"));
}

TEST_CASE("pair correction only yields dictionary terms") {
  const KnowledgeBase& kb = fixture().dict_kb;
  std::vector<std::u32string> words;
  for (const auto& g : kb.generators()) {
    if (g.term.find(kApostrophe) == std::u32string::npos) words.push_back(g.term);
  }
  for (const auto& a : words) {
    for (const auto& b : words) {
      const auto hit = correct_pair(lookup(a, kb), lookup(b, kb), kb);
      if (!hit) continue;
      CAPTURE(S(a));
      CAPTURE(S(b));
      CHECK(kb.find_term(hit->term) != nullptr);
      CHECK(hit->term.find(kApostrophe) != std::u32string::npos);
      // Both were exact words, so only their literal join qualifies.
      CHECK(hit->term == a + kApostrophe + b);
    }
  }
}

}  // namespace
}  // namespace polispell
