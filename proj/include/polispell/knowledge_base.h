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

#ifndef POLISPELL_KNOWLEDGE_BASE_H_
#define POLISPELL_KNOWLEDGE_BASE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polispell/edit_distance.h"
#include "polispell/lexicon.h"

namespace polispell {

// Raised when a cache does not match the requested configuration, or when a
// required resource is missing.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One generator listed under a deletion key.
struct Posting {
  std::uint32_t generator = 0;
  // len(generator) - len(key).
  std::uint32_t deletions = 0;

  friend bool operator==(const Posting&, const Posting&) = default;
};

// Symmetric-delete index: every deletion variant of every lexicon entry, up
// to params.max_edit_distance characters, mapped back to its generators.
// Each generator is also listed under its own text with zero deletions.
// Immutable once built.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  static KnowledgeBase build(const Lexicon& lexicon, const EditParams& params);

  const EditParams& params() const { return params_; }
  LexiconRole role() const { return role_; }

  std::span<const Posting> find(const std::u32string& key) const;

  const DictionaryEntry& generator(std::uint32_t id) const {
    return generators_.at(id);
  }
  std::span<const DictionaryEntry> generators() const { return generators_; }

  // Exact membership of a lexicon term.
  const DictionaryEntry* find_term(std::u32string_view term) const;

  std::size_t key_count() const { return index_.size(); }
  std::size_t max_compound_tokens() const { return max_compound_tokens_; }

  // Ids of generators flagged compound, in id order.
  const std::vector<std::uint32_t>& compound_generators() const {
    return compound_ids_;
  }

  // Keys in ascending order.
  std::vector<std::u32string> sorted_keys() const;

  // Rebuilds the source lexicon from the generator table.
  Lexicon lexicon() const;

  // Line-oriented block: a header with role, params and sizes, then one line
  // per generator, then one line per key in sorted order.
  void write(std::ostream& out) const;
  static KnowledgeBase read(std::istream& in, std::size_t& line_no);

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.params_ == b.params_ && a.role_ == b.role_ &&
           a.generators_ == b.generators_ && a.index_ == b.index_;
  }

 private:
  void finish();

  EditParams params_;
  LexiconRole role_ = LexiconRole::kBase;
  std::vector<DictionaryEntry> generators_;
  std::unordered_map<std::u32string, std::vector<Posting>> index_;
  std::unordered_map<std::u32string, std::uint32_t> term_ids_;
  std::vector<std::uint32_t> compound_ids_;
  std::size_t max_compound_tokens_ = 0;
};

inline constexpr int kCacheFormatVersion = 1;

// The pair of indexes the correction pipeline needs: D for single words and
// G = D ∪ E_c for compound expressions.
struct KbCache {
  KnowledgeBase dictionary;
  KnowledgeBase compounds;
};

void write_kb_cache(std::ostream& out, const KbCache& cache);

// Fails with ConfigError when the format version is unknown or when an
// expected parameter set is given and differs from the stored one.
KbCache read_kb_cache(std::istream& in,
                      const std::optional<EditParams>& expect_dictionary = {},
                      const std::optional<EditParams>& expect_compounds = {});

KbCache load_kb_cache(const std::string& path,
                      const std::optional<EditParams>& expect_dictionary = {},
                      const std::optional<EditParams>& expect_compounds = {});

}  // namespace polispell

#endif  // POLISPELL_KNOWLEDGE_BASE_H_
