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

#include "polispell/compound.h"

#include <algorithm>
#include <map>
#include <optional>

#include "polispell/apostrophe.h"
#include "polispell/lookup.h"
#include "polispell/unicode.h"

namespace polispell {

const char* to_string(Resolution r) {
  switch (r) {
    case Resolution::kKept:
      return "kept";
    case Resolution::kReplaced:
      return "replaced";
    case Resolution::kMerged:
      return "merged";
    case Resolution::kSplit:
      return "split";
    case Resolution::kApostrophized:
      return "apostrophized";
    case Resolution::kExpression:
      return "expression";
  }
  return "unknown";
}

namespace {

// Cost assigned to a position nothing could correct, when weighing a merge.
constexpr int kUnresolvedCost = 1 << 20;

struct Option {
  Resolution resolution = Resolution::kReplaced;
  std::u32string result;
  int distance = 0;
  std::uint64_t frequency = 0;
  // (previous word, first word of result) is an attested bigram.
  bool attested = false;
};

bool option_before(const Option& a, const Option& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.attested != b.attested) return a.attested;
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.result < b.result;
}

std::u32string_view first_word(std::u32string_view s) {
  return s.substr(0, s.find(U' '));
}

std::u32string_view last_word(std::u32string_view s) {
  const auto space = s.rfind(U' ');
  return space == std::u32string_view::npos ? s : s.substr(space + 1);
}

TokenDecision keep(std::size_t index, std::u32string_view token,
                   std::uint64_t frequency) {
  return {index, 1, std::u32string(token), Resolution::kKept,
          std::u32string(token), 0, frequency};
}

TokenDecision from_option(std::size_t index, std::u32string_view token,
                          const Option& o) {
  return {index,          1,          std::u32string(token), o.resolution,
          o.result,       o.distance, o.frequency};
}

// Cases that rewrite a single token: lookup, apostrophe drift and split.
std::vector<Option> single_token_options(std::u32string_view token,
                                         const CandidateSet& set,
                                         const KnowledgeBase& kb) {
  std::vector<Option> options;
  for (const auto& c : set.candidates) {
    options.push_back({Resolution::kReplaced, c.term, c.distance, c.frequency});
  }
  if (auto drift = correct_via_drift(token, kb)) {
    options.push_back({Resolution::kApostrophized, drift->term,
                       drift->distance, drift->frequency});
  }
  auto splits = split_lookup(token, kb);
  if (!splits.empty()) {
    const auto& s = splits.front();
    options.push_back(
        {Resolution::kSplit, s.text(), s.distance, s.frequency});
  }
  return options;
}

void mark_attested(std::vector<Option>& options, std::u32string_view prev,
                   const BigramList* bigrams) {
  if (bigrams == nullptr || bigrams->empty()) return;
  const std::u32string_view left = last_word(prev);
  for (auto& o : options) {
    o.attested = bigrams->contains(left, first_word(o.result));
  }
}

bool single_word(const TokenDecision& d) {
  return d.consumed == 1 && (d.resolution == Resolution::kKept ||
                             d.resolution == Resolution::kReplaced);
}

}  // namespace

TokenDecision correct_first_token(std::size_t index, std::u32string_view token,
                                  const KnowledgeBase& kb) {
  if (is_opaque(token)) return keep(index, token, 0);
  const CandidateSet set = lookup(token, kb);
  if (set.exact()) return keep(index, token, set.best().frequency);

  auto options = single_token_options(token, set, kb);
  if (options.empty()) return keep(index, token, 0);
  const auto best = std::min_element(options.begin(), options.end(),
                                     option_before);
  return from_option(index, token, *best);
}

TokenDecision correct_token(std::size_t index, std::u32string_view token,
                            const TokenDecision& prev, bool joinable,
                            const KnowledgeBase& kb,
                            const BigramList* bigrams) {
  if (is_opaque(token)) return keep(index, token, 0);
  const CandidateSet set = lookup(token, kb);
  const bool can_join =
      joinable && single_word(prev) && !is_opaque(prev.original);

  // An elided pair resolving to a dictionary term is the only outcome at
  // distance zero across both positions, so it goes first.
  if (can_join) {
    const CandidateSet prev_set = lookup(prev.original, kb);
    if (auto pair = correct_pair(prev_set, set, kb)) {
      return {prev.index,
              2,
              prev.original + U' ' + std::u32string(token),
              Resolution::kApostrophized,
              pair->term,
              pair->distance,
              pair->frequency};
    }
  }
  if (set.exact()) return keep(index, token, set.best().frequency);

  auto options = single_token_options(token, set, kb);
  mark_attested(options, prev.result, bigrams);
  std::optional<Option> best;
  if (!options.empty()) {
    best = *std::min_element(options.begin(), options.end(), option_before);
  }

  if (can_join) {
    const CandidateSet merged = merged_lookup(prev.original, token, kb);
    if (!merged.empty()) {
      const int prev_cost = prev.unresolved() ? kUnresolvedCost : prev.distance;
      const int cur_cost = best ? best->distance : kUnresolvedCost;
      const Candidate& m = merged.best();
      if (m.distance < prev_cost + cur_cost) {
        return {prev.index,
                2,
                merged.query,
                Resolution::kMerged,
                m.term,
                m.distance,
                m.frequency};
      }
    }
  }

  if (!best) return keep(index, token, 0);
  return from_option(index, token, *best);
}

CorrectionResult correct_sentence(std::string_view raw,
                                  const Resources& resources) {
  if (resources.dictionary == nullptr) {
    throw ConfigError("correction needs a dictionary index");
  }
  const KnowledgeBase& kb = *resources.dictionary;
  const Sentence sentence = tokenize(raw);
  CorrectionResult result;

  // Expressions are fixed first so that per-token correction never touches
  // the words inside them.
  std::map<std::size_t, EpEntry> protected_spans;
  if (resources.compounds != nullptr && !sentence.empty()) {
    auto matches = match_expressions(sentence, *resources.compounds);
    MweResult mwe = resolve_and_substitute(sentence, matches);
    for (const auto& ep : mwe.catalogue) protected_spans.emplace(ep.span.start, ep);
    result.catalogue = std::move(mwe.catalogue);
    result.derivation = std::move(mwe.derivation);
  }

  auto& decisions = result.decisions;
  for (std::size_t i = 0; i < sentence.size();) {
    if (auto it = protected_spans.find(i); it != protected_spans.end()) {
      const EpEntry& ep = it->second;
      const DictionaryEntry* entry =
          resources.compounds->find_term(ep.expression);
      decisions.push_back({i, ep.span.n, ep.original, Resolution::kExpression,
                           ep.expression, ep.distance,
                           entry ? entry->frequency : 0});
      i = ep.span.end();
      continue;
    }
    const std::u32string& token = sentence.tokens[i];
    if (decisions.empty()) {
      decisions.push_back(correct_first_token(i, token, kb));
    } else {
      const TokenDecision& prev = decisions.back();
      const bool joinable = !sentence.punctuated_before(i) &&
                            prev.resolution != Resolution::kExpression;
      TokenDecision d =
          correct_token(i, token, prev, joinable, kb, resources.bigrams);
      if (d.consumed > 1) decisions.pop_back();
      decisions.push_back(std::move(d));
    }
    ++i;
  }

  std::u32string out = sentence.gaps.front();
  for (std::size_t k = 0; k < decisions.size(); ++k) {
    if (k > 0) out += sentence.gaps[decisions[k].index];
    out += decisions[k].result;
  }
  if (!sentence.empty()) out += sentence.gaps.back();
  result.corrected = encode_utf8(out);
  return result;
}

}  // namespace polispell
