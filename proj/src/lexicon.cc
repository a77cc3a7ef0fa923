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

#include "polispell/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "polispell/tokenizer.h"
#include "polispell/unicode.h"

namespace polispell {

std::size_t token_count(std::u32string_view term) {
  if (term.empty()) return 0;
  return 1 + static_cast<std::size_t>(
                 std::count(term.begin(), term.end(), U' '));
}

const char* to_string(LexiconRole role) {
  switch (role) {
    case LexiconRole::kBase:
      return "dictionary";
    case LexiconRole::kCompound:
      return "compound";
    case LexiconRole::kMerged:
      return "merged";
  }
  return "unknown";
}

void Lexicon::add(std::u32string term, std::uint64_t frequency,
                  bool compound) {
  if (term.empty()) throw std::invalid_argument("empty term");
  if (frequency == 0) throw std::invalid_argument("zero frequency");
  if (role_ == LexiconRole::kCompound) compound = true;
  max_compound_tokens_ = std::max(max_compound_tokens_, token_count(term));
  auto it = entries_.find(term);
  if (it == entries_.end()) {
    DictionaryEntry e{term, frequency, compound};
    entries_.emplace(std::move(term), std::move(e));
    return;
  }
  it->second.frequency = std::max(it->second.frequency, frequency);
  it->second.compound = it->second.compound || compound;
}

void Lexicon::count(const std::u32string& term, std::uint64_t count) {
  auto it = entries_.find(term);
  if (it == entries_.end()) {
    add(term, count);
  } else {
    it->second.frequency += count;
  }
}

const DictionaryEntry* Lexicon::find(std::u32string_view term) const {
  auto it = entries_.find(term);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<DictionaryEntry> Lexicon::by_frequency() const {
  std::vector<DictionaryEntry> out;
  out.reserve(entries_.size());
  for (const auto& [term, e] : entries_) out.push_back(e);
  std::stable_sort(out.begin(), out.end(),
                   [](const DictionaryEntry& a, const DictionaryEntry& b) {
                     return a.frequency > b.frequency;
                   });
  return out;
}

void BigramList::add(std::u32string first, std::u32string second,
                     std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("zero bigram frequency");
  pairs_[{std::move(first), std::move(second)}] += count;
}

std::uint64_t BigramList::count(std::u32string_view first,
                                std::u32string_view second) const {
  auto it = pairs_.find({std::u32string(first), std::u32string(second)});
  return it == pairs_.end() ? 0 : it->second;
}

std::uint64_t BigramList::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, n] : pairs_) sum += n;
  return sum;
}

namespace {

// Streams `in` line by line, handing each tokenized line to `fn`.
template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    fn(tokenize(line, offset));
    offset += line.size() + 1;
  }
}

std::uint64_t parse_frequency(std::string_view s, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw FormatError("line " + std::to_string(line_no) +
                          ": bad frequency '" + std::string(s) + "'",
                      line_no);
  }
  return v;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::u32string parse_term(std::string_view field, std::size_t line_no) {
  try {
    return make_term(field);
  } catch (const InputError& e) {
    throw FormatError("line " + std::to_string(line_no) + ": " + e.what(),
                      line_no);
  } catch (const std::invalid_argument&) {
    throw FormatError("line " + std::to_string(line_no) + ": empty term",
                      line_no);
  }
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

Lexicon ingest_corpus(std::istream& in) {
  Lexicon lex(LexiconRole::kBase);
  for_each_line(in, [&](const Sentence& s) {
    for (const auto& tok : s.tokens) {
      if (!is_opaque(tok)) lex.count(tok);
    }
  });
  return lex;
}

BigramList extract_bigrams(std::istream& in) {
  BigramList bigrams;
  for_each_line(in, [&](const Sentence& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s.terminated_before(i)) continue;
      if (is_opaque(s.tokens[i - 1]) || is_opaque(s.tokens[i])) continue;
      bigrams.add(s.tokens[i - 1], s.tokens[i]);
    }
  });
  return bigrams;
}

Lexicon merge_lexicons(const Lexicon& base, const Lexicon& compounds) {
  Lexicon merged(LexiconRole::kMerged);
  for (const auto& [term, e] : base.entries()) {
    merged.add(term, e.frequency, e.compound);
  }
  for (const auto& [term, e] : compounds.entries()) {
    merged.add(term, e.frequency, true);
  }
  return merged;
}

Lexicon read_lexicon(std::istream& in, LexiconRole role) {
  Lexicon lex(role);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    std::uint64_t freq = 1;
    if (fields.size() == 2) {
      freq = parse_frequency(fields[1], line_no);
    } else if (fields.size() != 1 || role != LexiconRole::kCompound) {
      throw FormatError("line " + std::to_string(line_no) +
                            ": expected term<TAB>frequency",
                        line_no);
    }
    lex.add(parse_term(fields[0], line_no), freq);
  }
  return lex;
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  for (const auto& e : lexicon.by_frequency()) {
    out << encode_utf8(e.term) << '\t' << e.frequency << '\n';
  }
}

BigramList read_bigrams(std::istream& in) {
  BigramList bigrams;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw FormatError("line " + std::to_string(line_no) +
                            ": expected first<TAB>second<TAB>frequency",
                        line_no);
    }
    bigrams.add(parse_term(fields[0], line_no), parse_term(fields[1], line_no),
                parse_frequency(fields[2], line_no));
  }
  return bigrams;
}

void write_bigrams(std::ostream& out, const BigramList& bigrams) {
  std::vector<std::pair<const BigramList::Key*, std::uint64_t>> rows;
  for (const auto& [key, n] : bigrams.pairs()) rows.emplace_back(&key, n);
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  for (const auto& [key, n] : rows) {
    out << encode_utf8(key->first) << '\t' << encode_utf8(key->second) << '\t'
        << n << '\n';
  }
}

Lexicon load_lexicon(const std::string& path, LexiconRole role) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return read_lexicon(in, role);
}

BigramList load_bigrams(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return read_bigrams(in);
}

}  // namespace polispell
