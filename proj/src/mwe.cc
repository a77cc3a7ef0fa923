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

#include "polispell/mwe.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "polispell/lookup.h"

namespace polispell {

const char* to_string(DerivationStep::Kind kind) {
  switch (kind) {
    case DerivationStep::Kind::kSubstitute:
      return "substitute";
    case DerivationStep::Kind::kRewrite:
      return "rewrite";
    case DerivationStep::Kind::kSubsumed:
      return "subsumed";
  }
  return "unknown";
}

std::size_t sup_bound(const Sentence& sentence,
                      std::size_t max_compound_tokens) {
  return std::min(sentence.size(), max_compound_tokens);
}

std::size_t sup_bound(const Sentence& sentence, const Lexicon& merged) {
  return sup_bound(sentence, merged.max_compound_tokens());
}

std::vector<Span> enumerate_ngrams(const Sentence& sentence, std::size_t n) {
  if (n < 1 || n > sentence.size()) {
    throw std::invalid_argument("n-gram size " + std::to_string(n) +
                                " outside [1, " +
                                std::to_string(sentence.size()) + "]");
  }
  std::vector<Span> spans;
  spans.reserve(sentence.size() - n + 1);
  for (std::size_t start = 0; start + n <= sentence.size(); ++start) {
    spans.push_back({start, n});
  }
  return spans;
}

namespace {

// Sorted characters; half the multiset difference of two strings is a lower
// bound on their distance (a substitution moves it by at most 2, an insert
// or delete by 1, a transposition not at all).
std::u32string char_bag(std::u32string_view s) {
  std::u32string bag(s);
  std::sort(bag.begin(), bag.end());
  return bag;
}

int bag_lower_bound(const std::u32string& a, const std::u32string& b) {
  std::size_t i = 0, j = 0, diff = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
      ++diff;
    } else {
      ++j;
      ++diff;
    }
  }
  diff += (a.size() - i) + (b.size() - j);
  return static_cast<int>((diff + 1) / 2);
}

bool crosses_punctuation(const Sentence& s, const Span& span) {
  for (std::size_t i = span.start + 1; i < span.end(); ++i) {
    if (s.punctuated_before(i)) return true;
  }
  return false;
}

std::u32string placeholder(int id) {
  std::u32string out = U"EP";
  for (char c : std::to_string(id)) out.push_back(static_cast<char32_t>(c));
  return out;
}

}  // namespace

std::map<std::u32string, MweMatch> match_expressions(const Sentence& sentence,
                                                     const KnowledgeBase& kb) {
  std::map<std::u32string, MweMatch> best;
  const auto& compound_ids = kb.compound_generators();
  if (sentence.empty() || compound_ids.empty()) return best;

  std::vector<std::u32string> compound_bags;
  compound_bags.reserve(compound_ids.size());
  for (auto id : compound_ids) {
    compound_bags.push_back(char_bag(kb.generator(id).term));
  }

  const std::size_t sup = sup_bound(sentence, kb.max_compound_tokens());
  for (std::size_t n = 1; n <= sup; ++n) {
    for (const Span& span : enumerate_ngrams(sentence, n)) {
      if (crosses_punctuation(sentence, span)) continue;
      const std::u32string text = sentence.join(span.start, span.n);
      if (n == 1) {
        // An ordinary dictionary word is never an expression by itself.
        const DictionaryEntry* e = kb.find_term(text);
        if (e != nullptr && !e->compound) continue;
      }
      const int threshold = edit_threshold(text.size(), kb.params());

      // Cheap screen against the compound entries before the index lookup;
      // it can only discard spans that the lookup would reject anyway.
      const std::u32string bag = char_bag(text);
      bool plausible = false;
      for (const auto& cbag : compound_bags) {
        const auto len_diff = cbag.size() > bag.size()
                                  ? cbag.size() - bag.size()
                                  : bag.size() - cbag.size();
        if (len_diff <= static_cast<std::size_t>(threshold) &&
            bag_lower_bound(bag, cbag) <= threshold) {
          plausible = true;
          break;
        }
      }
      if (!plausible) continue;

      for (const Candidate& c : lookup(text, kb).candidates) {
        const DictionaryEntry* e = kb.find_term(c.term);
        if (e == nullptr || !e->compound) continue;
        MweMatch m{c.term, span, c.distance};
        auto it = best.find(c.term);
        if (it == best.end()) {
          best.emplace(c.term, std::move(m));
          continue;
        }
        const MweMatch& cur = it->second;
        if (std::tie(m.distance, m.span.n, m.span.start) <
            std::tie(cur.distance, cur.span.n, cur.span.start)) {
          it->second = std::move(m);
        }
      }
    }
  }
  return best;
}

MweResult resolve_and_substitute(
    const Sentence& sentence,
    const std::map<std::u32string, MweMatch>& matches) {
  std::vector<MweMatch> pool;
  for (const auto& [expr, m] : matches) pool.push_back(m);

  // Partial overlaps: lower distance, then longer expression, then leftmost.
  std::sort(pool.begin(), pool.end(), [](const MweMatch& a, const MweMatch& b) {
    const auto ta = token_count(a.expression);
    const auto tb = token_count(b.expression);
    return std::tie(a.distance, tb, a.span.start, a.expression) <
           std::tie(b.distance, ta, b.span.start, b.expression);
  });
  std::vector<MweMatch> accepted;
  for (const auto& m : pool) {
    const bool conflict =
        std::any_of(accepted.begin(), accepted.end(), [&](const MweMatch& a) {
          if (a.span == m.span) return true;
          return a.span.overlaps(m.span) && !a.span.contains(m.span) &&
                 !m.span.contains(a.span);
        });
    if (!conflict) accepted.push_back(m);
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const MweMatch& a, const MweMatch& b) {
              return std::tie(a.distance, a.span.n, a.span.start,
                              a.expression) <
                     std::tie(b.distance, b.span.n, b.span.start,
                              b.expression);
            });

  MweResult result;
  const std::size_t len = sentence.size();
  // owner[i]: id of the outermost placeholder covering token i, 0 if none.
  std::vector<int> owner(len, 0);
  std::map<int, EpEntry> eps;
  std::set<int> inner;

  auto render = [&](std::size_t start, std::size_t end) {
    std::u32string out;
    for (std::size_t i = start; i < end;) {
      if (!out.empty()) out.push_back(U' ');
      if (owner[i] != 0) {
        const int id = owner[i];
        out += placeholder(id);
        while (i < end && owner[i] == id) ++i;
      } else {
        out += sentence.tokens[i++];
      }
    }
    return out;
  };

  int step = 0;
  int next_id = 1;
  for (std::size_t k = 0; k < accepted.size(); ++k) {
    const MweMatch& m = accepted[k];
    const int first_owner = owner[m.span.start];
    if (first_owner != 0 && eps.at(first_owner).span.contains(m.span)) {
      result.derivation.push_back({++step, DerivationStep::Kind::kSubsumed,
                                   first_owner, m.expression,
                                   render(m.span.start, m.span.end()), {},
                                   m.distance});
      continue;
    }

    const int id = next_id++;
    const std::u32string written = render(m.span.start, m.span.end());
    for (std::size_t i = m.span.start; i < m.span.end(); ++i) {
      if (owner[i] != 0) inner.insert(owner[i]);
      owner[i] = id;
    }
    eps[id] = EpEntry{id, m.expression,
                      sentence.join(m.span.start, m.span.n), m.span,
                      m.distance};
    result.derivation.push_back({++step, DerivationStep::Kind::kSubstitute,
                                 id, m.expression, written, render(0, len),
                                 m.distance});

    for (std::size_t p = k + 1; p < accepted.size(); ++p) {
      const MweMatch& pending = accepted[p];
      if (pending.span.contains(m.span) && !(pending.span == m.span)) {
        result.derivation.push_back(
            {++step, DerivationStep::Kind::kRewrite, 0, pending.expression,
             render(pending.span.start, pending.span.end()), {},
             pending.distance});
      }
    }
  }

  for (const auto& [id, ep] : eps) {
    if (!inner.count(id)) result.catalogue.push_back(ep);
  }

  Sentence& out = result.corrected;
  if (len == 0) {
    out = sentence;
    return result;
  }
  out.raw = sentence.raw;
  out.tokens.clear();
  out.gaps.assign(1, sentence.gaps.front());
  for (std::size_t i = 0; i < len;) {
    if (i > 0) out.gaps.push_back(sentence.gaps[i]);
    if (owner[i] != 0) {
      const EpEntry& ep = eps.at(owner[i]);
      out.tokens.push_back(ep.expression);
      i = ep.span.end();
    } else {
      out.tokens.push_back(sentence.tokens[i++]);
    }
  }
  out.gaps.push_back(sentence.gaps.back());
  return result;
}

}  // namespace polispell
