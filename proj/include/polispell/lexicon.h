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

#ifndef POLISPELL_LEXICON_H_
#define POLISPELL_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polispell {

// Malformed dictionary, bigram or cache file. Line numbers are 1-based.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Number of space-separated tokens in a term.
std::size_t token_count(std::u32string_view term);

struct DictionaryEntry {
  std::u32string term;
  std::uint64_t frequency = 1;
  // Set for entries that come from the compound lexicon.
  bool compound = false;

  friend bool operator==(const DictionaryEntry&,
                         const DictionaryEntry&) = default;
};

enum class LexiconRole { kBase, kCompound, kMerged };

const char* to_string(LexiconRole role);

class Lexicon {
 public:
  using Map = std::map<std::u32string, DictionaryEntry, std::less<>>;

  explicit Lexicon(LexiconRole role = LexiconRole::kBase) : role_(role) {}

  LexiconRole role() const { return role_; }

  // Inserts `term`; when it already exists the larger frequency is kept.
  // Entries of a compound lexicon are always flagged compound.
  void add(std::u32string term, std::uint64_t frequency,
           bool compound = false);

  // Adds `count` occurrences to `term`, creating it if needed.
  void count(const std::u32string& term, std::uint64_t count = 1);

  const DictionaryEntry* find(std::u32string_view term) const;
  bool contains(std::u32string_view term) const {
    return find(term) != nullptr;
  }

  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Largest token count over all entries (0 when empty).
  std::size_t max_compound_tokens() const { return max_compound_tokens_; }

  // Entries by descending frequency, then term.
  std::vector<DictionaryEntry> by_frequency() const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.role_ == b.role_ && a.entries_ == b.entries_;
  }

 private:
  LexiconRole role_;
  Map entries_;
  std::size_t max_compound_tokens_ = 0;
};

// Word pairs observed next to each other in the corpus.
class BigramList {
 public:
  using Key = std::pair<std::u32string, std::u32string>;

  void add(std::u32string first, std::u32string second,
           std::uint64_t count = 1);
  std::uint64_t count(std::u32string_view first,
                      std::u32string_view second) const;
  bool contains(std::u32string_view first, std::u32string_view second) const {
    return count(first, second) > 0;
  }

  const std::map<Key, std::uint64_t>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  std::uint64_t total() const;

  friend bool operator==(const BigramList&, const BigramList&) = default;

 private:
  std::map<Key, std::uint64_t> pairs_;
};

// Counts token frequencies over a UTF-8 stream, one line at a time.
// Apostrophized forms count as single terms; tokens holding digits are
// skipped. Throws InputError with the absolute byte offset on bad UTF-8.
Lexicon ingest_corpus(std::istream& in);

// Adjacent pairs within a line, not crossing . ! or ? and not involving
// digit tokens.
BigramList extract_bigrams(std::istream& in);

// G = D ∪ E_c, keeping the larger frequency on collision.
Lexicon merge_lexicons(const Lexicon& base, const Lexicon& compounds);

// `term<TAB>frequency` per line. For the compound role the frequency column
// may be omitted and defaults to 1. Throws FormatError with the line number.
Lexicon read_lexicon(std::istream& in, LexiconRole role);
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

// `first<TAB>second<TAB>frequency` per line.
BigramList read_bigrams(std::istream& in);
void write_bigrams(std::ostream& out, const BigramList& bigrams);

Lexicon load_lexicon(const std::string& path, LexiconRole role);
BigramList load_bigrams(const std::string& path);

}  // namespace polispell

#endif  // POLISPELL_LEXICON_H_
