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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. All comparisons are exact: tolerance is zero
// throughout, since every quantity checked is an integer or a string.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "oracles.h"
#include "polispell/apostrophe.h"
#include "polispell/compound.h"
#include "polispell/edit_distance.h"
#include "polispell/knowledge_base.h"
#include "polispell/lookup.h"
#include "polispell/mwe.h"
#include "polispell/unicode.h"

namespace {

using namespace polispell;
using testing::fixture;
using testing::S;
using testing::U;

constexpr int kTolerance = 0;

constexpr const char* kSentence =
    "aspettiamo la risposta dlla cmnità erupea e della presidenza del "
    "cosniglio dei ministri";

// Collects mismatch notes for the criterion being evaluated.
struct Check {
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  }
  void expect_eq(long long got, long long want, const std::string& what) {
    if (std::llabs(got - want) > kTolerance) {
      notes.push_back(what + ": got " + std::to_string(got) + ", want " +
                      std::to_string(want));
    }
  }
};

bool report(int number, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s criterion %d: %s\n", c.notes.empty() ? "PASS" : "FAIL",
              number, title);
  for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
  return c.notes.empty();
}

void deletion_expansion(Check& c) {
  const auto got = deletions(U"acqua", 1);
  const std::set<std::u32string> want{U"cqua", U"aqua", U"acua", U"acqa",
                                      U"acqu"};
  c.expect(std::set<std::u32string>(got.begin(), got.end()) == want,
           "deletions(acqua, 1) differs from the expected five strings");
  c.expect_eq(static_cast<long long>(got.size()), 5, "deletion count");
}

void distances(Check& c) {
  const std::vector<std::tuple<const char*, const char*, int>> cases{
      {"smartfon", "smartphone", 3},
      {"smartfon", "smartbox", 2},
      {"cmnità erupea", "comunità europea", 4},
      {"presidenza del cosniglio", "presidenza del consiglio", 1},
      {"presidenza del cosniglio dei ministri",
       "presidenza del consiglio dei ministri", 1},
  };
  for (const auto& [a, b, want] : cases) {
    const std::string what = std::string("dl(") + a + ", " + b + ")";
    c.expect_eq(dl_distance(std::u32string_view(U(a)), std::u32string_view(U(b))),
                want, what);
    c.expect_eq(testing::brute_osa(U(a), U(b)), want, what + " [reference]");
  }
}

void lookup_ranking(Check& c) {
  const KnowledgeBase& kb = fixture().dict_kb;
  auto first = [&](const CandidateSet& set) {
    return set.empty() ? std::string("<none>") : S(set.best().term);
  };
  c.expect(first(lookup(U"smartfon", kb)) == "smartbox",
           "smartfon -> " + first(lookup(U"smartfon", kb)));
  c.expect(first(lookup(U"smartfone", kb)) == "smartphone",
           "smartfone -> " + first(lookup(U"smartfone", kb)));
  const CandidateSet merged = merged_lookup(U"smart", U"fon", kb);
  c.expect(first(merged) == "smartphone", "smart fon -> " + first(merged));
}

void threshold_formula(Check& c) {
  c.expect_eq(edit_threshold(8, EditParams{}), 3, "edit_threshold(8)");
  const int table[30] = {0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5,
                         5, 6, 6, 6, 7, 7, 7, 8, 8, 8, 9, 9, 9, 10, 10};
  const EditParams unclamped{{1, 3}, 1000};
  for (std::size_t length = 1; length <= 30; ++length) {
    c.expect_eq(edit_threshold(length, unclamped), table[length - 1],
                "edit_threshold(" + std::to_string(length) + ")");
  }
}

void apostrophe_drift(Check& c) {
  const KnowledgeBase& kb = fixture().dict_kb;
  const auto drift = correct_via_drift(U"dllaltro", kb);
  c.expect(drift && S(drift->term) == "dell'altro",
           "dllaltro did not drift to dell'altro");
  if (drift) c.expect_eq(drift->distance, 1, "dllaltro drift distance");

  auto pair = [&](const char* a, const char* b) {
    return correct_pair(lookup(U(a), kb), lookup(U(b), kb), kb);
  };
  const auto l = pair("l", "acqua");
  c.expect(l && S(l->term) == "l'acqua", "(l, acqua) did not join");
  c.expect(!pair("le", "acque"), "(le, acque) was joined");
  c.expect(!pair("la", "strada"), "(la, strada) was joined");
}

void expression_end_to_end(Check& c) {
  const CorrectionResult r = correct_sentence(kSentence, fixture().resources());
  const std::string want =
      "aspettiamo la risposta della comunità europea e della presidenza del "
      "consiglio dei ministri";
  c.expect(r.corrected == want, "corrected: " + r.corrected);
  c.expect_eq(static_cast<long long>(r.catalogue.size()), 2, "catalogue size");

  using K = DerivationStep::Kind;
  const auto& d = r.derivation;
  const bool ep1 = d.size() >= 3 && d[0].kind == K::kSubstitute &&
                   d[0].id == 1 &&
                   S(d[0].expression) == "presidenza del consiglio";
  const bool rewrite = d.size() >= 3 && d[1].kind == K::kRewrite &&
                       S(d[1].tokens) == "EP1 dei ministri";
  const bool ep2 = d.size() >= 3 && d[2].kind == K::kSubstitute &&
                   d[2].id == 2 && S(d[2].tokens) == "EP1 dei ministri" &&
                   S(d[2].expression) ==
                       "presidenza del consiglio dei ministri";
  c.expect(ep1 && rewrite && ep2,
           "derivation does not show EP1 folded into EP2");
}

void span_enumeration(Check& c) {
  const Sentence s = tokenize(kSentence);
  c.expect_eq(static_cast<long long>(s.size()), 13, "token count");
  c.expect_eq(static_cast<long long>(enumerate_ngrams(s, 2).size()), 12, "n=2");
  c.expect_eq(static_cast<long long>(enumerate_ngrams(s, 3).size()), 11, "n=3");
  c.expect_eq(static_cast<long long>(enumerate_ngrams(s, 5).size()), 9, "n=5");
}

void oracle_equivalence(Check& c) {
  std::mt19937 rng(20260101);
  const std::u32string alphabet = U"abcdefgh";
  auto random_word = [&] {
    const std::size_t n = 3 + rng() % 8;
    std::u32string w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(alphabet[rng() % 8]);
    return w;
  };
  auto mutate = [&](std::u32string w, int edits) {
    for (int e = 0; e < edits && w.size() > 1; ++e) {
      const std::size_t p = rng() % w.size();
      switch (rng() % 4) {
        case 0: w.erase(p, 1); break;
        case 1: w.insert(w.begin() + p, alphabet[rng() % 8]); break;
        case 2: w[p] = alphabet[rng() % 8]; break;
        default:
          if (p + 1 < w.size()) std::swap(w[p], w[p + 1]);
      }
    }
    return w;
  };

  long long queries = 0, nonempty = 0, mismatches = 0;
  for (int round = 0; round < 50; ++round) {
    Lexicon lex;
    const int size = 1 + static_cast<int>(rng() % 200);
    for (int i = 0; i < size; ++i) lex.add(random_word(), 1 + rng() % 1000);
    std::vector<std::pair<std::u32string, std::uint64_t>> terms;
    for (const auto& [t, e] : lex.entries()) terms.emplace_back(t, e.frequency);

    for (int threshold : {1, 2}) {
      // k = 1 makes every query length of at least 3 clamp to the depth.
      const KnowledgeBase kb =
          KnowledgeBase::build(lex, EditParams{{1, 1}, threshold});
      for (int q = 0; q < 500; ++q) {
        // Half the queries are near misses of lexicon terms, kept to the
        // same 3..10 length range as the terms.
        std::u32string query = random_word();
        if (q % 2 == 1) {
          const std::u32string near = mutate(
              terms[rng() % terms.size()].first, 1 + static_cast<int>(rng() % 3));
          if (near.size() >= 3 && near.size() <= 10) query = near;
        }
        std::set<std::u32string> want;
        for (const auto& [term, freq] : terms) {
          if (testing::brute_osa(query, term) <= threshold) want.insert(term);
        }
        std::set<std::u32string> got;
        for (const auto& cand : lookup(query, kb).candidates) got.insert(cand.term);
        ++queries;
        if (!want.empty()) ++nonempty;
        if (got != want && ++mismatches <= 5) {
          c.expect(false, "query " + S(query) + " at threshold " +
                              std::to_string(threshold) + " differs");
        }
      }
    }
  }
  c.expect_eq(mismatches, 0, "mismatching queries");
  std::printf("    %lld queries, %lld with candidates\n", queries, nonempty);
}

void idempotence(Check& c) {
  const Resources res = fixture().resources();
  for (const auto& line : testing::read_lines("sample_sentences.txt")) {
    const std::string once = correct_sentence(line, res).corrected;
    const std::string twice = correct_sentence(once, res).corrected;
    c.expect(once == twice, "\"" + line + "\": \"" + once + "\" -> \"" + twice + "\"");
  }
}

}  // namespace

int main() {
  int failed = 0;
  failed += !report(1, "deletion expansion of acqua", deletion_expansion);
  failed += !report(2, "worked edit distances", distances);
  failed += !report(3, "lookup ranking for smartfon, smartfone, smart fon",
                    lookup_ranking);
  failed += !report(4, "edit threshold formula", threshold_formula);
  failed += !report(5, "apostrophe drift and elided pairs", apostrophe_drift);
  failed += !report(6, "multiword expressions end to end", expression_end_to_end);
  failed += !report(7, "span enumeration counts", span_enumeration);
  failed += !report(8, "index lookup equals brute-force scan", oracle_equivalence);
  failed += !report(9, "correction is idempotent", idempotence);
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
