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

#include "polispell/knowledge_base.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "polispell/unicode.h"

namespace polispell {

KnowledgeBase KnowledgeBase::build(const Lexicon& lexicon,
                                   const EditParams& params) {
  if (params.max_edit_distance < 0) {
    throw std::invalid_argument("max edit distance must be >= 0");
  }
  KnowledgeBase kb;
  kb.params_ = params;
  kb.role_ = lexicon.role();
  kb.generators_.reserve(lexicon.size());
  for (const auto& [term, e] : lexicon.entries()) kb.generators_.push_back(e);

  for (std::uint32_t id = 0; id < kb.generators_.size(); ++id) {
    const std::u32string& term = kb.generators_[id].term;
    kb.index_[term].push_back({id, 0});
    for_each_deletion(term, params.max_edit_distance,
                      [&](const std::u32string& variant) {
                        kb.index_[variant].push_back(
                            {id, static_cast<std::uint32_t>(term.size() -
                                                            variant.size())});
                      });
  }
  kb.finish();
  return kb;
}

void KnowledgeBase::finish() {
  term_ids_.clear();
  compound_ids_.clear();
  max_compound_tokens_ = 0;
  for (std::uint32_t id = 0; id < generators_.size(); ++id) {
    const auto& g = generators_[id];
    term_ids_.emplace(g.term, id);
    if (g.compound) compound_ids_.push_back(id);
    max_compound_tokens_ = std::max(max_compound_tokens_, token_count(g.term));
  }
}

std::span<const Posting> KnowledgeBase::find(const std::u32string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return {};
  return it->second;
}

const DictionaryEntry* KnowledgeBase::find_term(
    std::u32string_view term) const {
  auto it = term_ids_.find(std::u32string(term));
  return it == term_ids_.end() ? nullptr : &generators_[it->second];
}

std::vector<std::u32string> KnowledgeBase::sorted_keys() const {
  std::vector<std::u32string> keys;
  keys.reserve(index_.size());
  for (const auto& [key, postings] : index_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

Lexicon KnowledgeBase::lexicon() const {
  Lexicon lex(role_);
  for (const auto& g : generators_) lex.add(g.term, g.frequency, g.compound);
  return lex;
}

namespace {

constexpr std::string_view kMagic = "polispell-kb-cache";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::size_t line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("kb cache line " + std::to_string(line_no) +
                          ": bad number '" + std::string(s) + "'",
                      line_no);
  }
  return v;
}

std::string_view strip_prefix(std::string_view s, std::string_view prefix,
                              std::size_t line_no) {
  if (s.substr(0, prefix.size()) != prefix) {
    throw FormatError("kb cache line " + std::to_string(line_no) +
                          ": expected " + std::string(prefix),
                      line_no);
  }
  return s.substr(prefix.size());
}

bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  return true;
}

LexiconRole parse_role(std::string_view s, std::size_t line_no) {
  for (auto role :
       {LexiconRole::kBase, LexiconRole::kCompound, LexiconRole::kMerged}) {
    if (s == to_string(role)) return role;
  }
  throw FormatError("kb cache line " + std::to_string(line_no) +
                        ": unknown role " + std::string(s),
                    line_no);
}

std::string describe(const EditParams& p) {
  return "k=" + to_string(p.k) + " max=" + std::to_string(p.max_edit_distance);
}

}  // namespace

void KnowledgeBase::write(std::ostream& out) const {
  out << "kb\t" << to_string(role_) << "\tk=" << to_string(params_.k)
      << "\tmax=" << params_.max_edit_distance << '\t' << generators_.size()
      << '\t' << index_.size() << '\n';
  for (const auto& g : generators_) {
    out << encode_utf8(g.term) << '\t' << g.frequency << '\t'
        << (g.compound ? 'c' : 'w') << '\n';
  }
  for (const auto& key : sorted_keys()) {
    out << encode_utf8(key) << '\t';
    const auto& postings = index_.at(key);
    for (std::size_t i = 0; i < postings.size(); ++i) {
      if (i) out << ',';
      out << postings[i].generator << ':' << postings[i].deletions;
    }
    out << '\n';
  }
}

KnowledgeBase KnowledgeBase::read(std::istream& in, std::size_t& line_no) {
  std::string line;
  if (!next_line(in, line, line_no)) {
    throw FormatError("kb cache truncated before header", line_no);
  }
  auto head = split(line, '\t');
  if (head.size() != 6 || head[0] != "kb") {
    throw FormatError(
        "kb cache line " + std::to_string(line_no) + ": bad block header",
        line_no);
  }
  KnowledgeBase kb;
  kb.role_ = parse_role(head[1], line_no);
  try {
    kb.params_.k = parse_ratio(strip_prefix(head[2], "k=", line_no));
  } catch (const std::invalid_argument& e) {
    throw FormatError("kb cache line " + std::to_string(line_no) + ": " +
                          e.what(),
                      line_no);
  }
  kb.params_.max_edit_distance =
      parse_number<int>(strip_prefix(head[3], "max=", line_no), line_no);
  const auto n_generators = parse_number<std::size_t>(head[4], line_no);
  const auto n_keys = parse_number<std::size_t>(head[5], line_no);

  kb.generators_.reserve(n_generators);
  for (std::size_t i = 0; i < n_generators; ++i) {
    if (!next_line(in, line, line_no)) {
      throw FormatError("kb cache truncated in generators", line_no);
    }
    auto f = split(line, '\t');
    if (f.size() != 3 || (f[2] != "c" && f[2] != "w")) {
      throw FormatError(
          "kb cache line " + std::to_string(line_no) + ": bad generator",
          line_no);
    }
    kb.generators_.push_back({decode_utf8(f[0]),
                              parse_number<std::uint64_t>(f[1], line_no),
                              f[2] == "c"});
  }
  kb.index_.reserve(n_keys);
  for (std::size_t i = 0; i < n_keys; ++i) {
    if (!next_line(in, line, line_no)) {
      throw FormatError("kb cache truncated in keys", line_no);
    }
    auto tab = line.rfind('\t');
    if (tab == std::string::npos) {
      throw FormatError(
          "kb cache line " + std::to_string(line_no) + ": bad key line",
          line_no);
    }
    std::vector<Posting> postings;
    for (auto item : split(std::string_view(line).substr(tab + 1), ',')) {
      auto colon = item.find(':');
      if (colon == std::string_view::npos) {
        throw FormatError(
            "kb cache line " + std::to_string(line_no) + ": bad posting",
            line_no);
      }
      Posting p{parse_number<std::uint32_t>(item.substr(0, colon), line_no),
                parse_number<std::uint32_t>(item.substr(colon + 1), line_no)};
      if (p.generator >= kb.generators_.size()) {
        throw FormatError("kb cache line " + std::to_string(line_no) +
                              ": generator id out of range",
                          line_no);
      }
      postings.push_back(p);
    }
    kb.index_.emplace(decode_utf8(std::string_view(line).substr(0, tab)),
                      std::move(postings));
  }
  kb.finish();
  return kb;
}

void write_kb_cache(std::ostream& out, const KbCache& cache) {
  out << kMagic << '\t' << kCacheFormatVersion << '\n';
  cache.dictionary.write(out);
  cache.compounds.write(out);
  out << "end\n";
}

KbCache read_kb_cache(std::istream& in,
                      const std::optional<EditParams>& expect_dictionary,
                      const std::optional<EditParams>& expect_compounds) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw ConfigError("kb cache is empty");
  auto head = split(line, '\t');
  if (head.size() != 2 || head[0] != kMagic) {
    throw ConfigError("not a kb cache file");
  }
  if (head[1] != std::to_string(kCacheFormatVersion)) {
    throw ConfigError("unsupported kb cache format version " +
                      std::string(head[1]));
  }
  KbCache cache;
  cache.dictionary = KnowledgeBase::read(in, line_no);
  cache.compounds = KnowledgeBase::read(in, line_no);
  if (!next_line(in, line, line_no) || line != "end") {
    throw FormatError("kb cache missing end marker", line_no);
  }
  if (expect_dictionary && *expect_dictionary != cache.dictionary.params()) {
    throw ConfigError("kb cache dictionary index was built with " +
                      describe(cache.dictionary.params()) +
                      ", requested " + describe(*expect_dictionary));
  }
  if (expect_compounds && *expect_compounds != cache.compounds.params()) {
    throw ConfigError("kb cache compound index was built with " +
                      describe(cache.compounds.params()) + ", requested " +
                      describe(*expect_compounds));
  }
  return cache;
}

KbCache load_kb_cache(const std::string& path,
                      const std::optional<EditParams>& expect_dictionary,
                      const std::optional<EditParams>& expect_compounds) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read kb cache " + path);
  return read_kb_cache(in, expect_dictionary, expect_compounds);
}

}  // namespace polispell
