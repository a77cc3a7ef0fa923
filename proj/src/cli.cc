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

#include "polispell/cli.h"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "polispell/knowledge_base.h"
#include "polispell/lexicon.h"
#include "polispell/lookup.h"
#include "polispell/unicode.h"

namespace polispell::cli {

namespace {

using nlohmann::ordered_json;

// Indexes either loaded from a cache or built from the TSV files.
struct Loaded {
  KbCache cache;
  bool has_compounds = false;
  std::optional<BigramList> bigrams;

  Resources resources() const {
    return {&cache.dictionary, has_compounds ? &cache.compounds : nullptr,
            bigrams ? &*bigrams : nullptr};
  }
};

KbCache build_cache(const Lexicon& dict, const Lexicon& compounds,
                    const Config& config) {
  return {KnowledgeBase::build(dict, config.dictionary_params()),
          KnowledgeBase::build(merge_lexicons(dict, compounds),
                               config.compound_params())};
}

// `params_given` is set when the user passed any of the distance flags, in
// which case a cache built with other values is refused.
Loaded load_resources(const Config& config, bool params_given) {
  Loaded loaded;
  if (!config.kb_cache_path.empty()) {
    std::optional<EditParams> want_dict, want_compound;
    if (params_given) {
      want_dict = config.dictionary_params();
      want_compound = config.compound_params();
    }
    loaded.cache =
        load_kb_cache(config.kb_cache_path, want_dict, want_compound);
    loaded.has_compounds = !loaded.cache.compounds.compound_generators().empty();
  } else if (!config.dict_path.empty()) {
    const Lexicon dict = load_lexicon(config.dict_path, LexiconRole::kBase);
    Lexicon compounds(LexiconRole::kCompound);
    if (!config.compounds_path.empty()) {
      compounds = load_lexicon(config.compounds_path, LexiconRole::kCompound);
    }
    loaded.cache = build_cache(dict, compounds, config);
    loaded.has_compounds = !compounds.empty();
  } else {
    throw ConfigError("either --kb-cache or --dict is required");
  }
  if (!config.bigrams_path.empty()) {
    loaded.bigrams = load_bigrams(config.bigrams_path);
  }
  return loaded;
}

int build_dict(const std::string& corpus, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  std::ifstream in(corpus);
  if (!in) {
    err << "cannot read corpus: " << corpus << '\n';
    return kUsageError;
  }
  const Lexicon lex = ingest_corpus(in);
  std::ofstream os(out_path);
  if (!os) {
    err << "cannot write " << out_path << '\n';
    return kUsageError;
  }
  write_lexicon(os, lex);
  out << "entries\t" << lex.size() << '\n';
  return kOk;
}

int build_bigrams(const std::string& corpus, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  std::ifstream in(corpus);
  if (!in) {
    err << "cannot read corpus: " << corpus << '\n';
    return kUsageError;
  }
  const BigramList bigrams = extract_bigrams(in);
  std::ofstream os(out_path);
  if (!os) {
    err << "cannot write " << out_path << '\n';
    return kUsageError;
  }
  write_bigrams(os, bigrams);
  out << "pairs\t" << bigrams.size() << '\n';
  return kOk;
}

int build_kb(const Config& config, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
  if (config.dict_path.empty()) {
    err << "build-kb needs --dict\n";
    return kUsageError;
  }
  const Lexicon dict = load_lexicon(config.dict_path, LexiconRole::kBase);
  Lexicon compounds(LexiconRole::kCompound);
  if (!config.compounds_path.empty()) {
    compounds = load_lexicon(config.compounds_path, LexiconRole::kCompound);
  }
  const KbCache cache = build_cache(dict, compounds, config);
  std::ofstream os(out_path);
  if (!os) {
    err << "cannot write " << out_path << '\n';
    return kUsageError;
  }
  write_kb_cache(os, cache);
  out << "dictionary keys\t" << cache.dictionary.key_count() << '\n'
      << "compound keys\t" << cache.compounds.key_count() << '\n';
  return kOk;
}

int run_lookup(const Config& config, bool params_given,
               const std::string& word, std::ostream& out) {
  const Loaded loaded = load_resources(config, params_given);
  const CandidateSet set = lookup(make_term(word), loaded.cache.dictionary);
  for (const auto& c : set.candidates) {
    out << encode_utf8(c.term) << '\t' << c.distance << '\t' << c.frequency
        << '\n';
  }
  return set.empty() ? kUncorrectable : kOk;
}

int run_correct(const Config& config, bool params_given,
                const std::vector<std::string>& text, bool verbose,
                bool parallel, std::istream& in, std::ostream& out) {
  const Loaded loaded = load_resources(config, params_given);
  const Resources resources = loaded.resources();

  std::vector<std::string> lines;
  if (!text.empty()) {
    std::string joined;
    for (const auto& t : text) {
      if (!joined.empty()) joined.push_back(' ');
      joined += t;
    }
    lines.push_back(std::move(joined));
  } else {
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  auto process = [&](const std::string& line) {
    return format_record(line, correct_sentence(line, resources), verbose);
  };

  if (!parallel) {
    for (const auto& line : lines) out << process(line) << '\n';
    return kOk;
  }
  const std::size_t batch =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < lines.size(); start += batch) {
    std::vector<std::future<std::string>> jobs;
    const std::size_t end = std::min(lines.size(), start + batch);
    for (std::size_t i = start; i < end; ++i) {
      jobs.push_back(std::async(std::launch::async, process,
                                std::cref(lines[i])));
    }
    for (auto& job : jobs) out << job.get() << '\n';
  }
  return kOk;
}

}  // namespace

std::string format_record(const std::string& input,
                          const CorrectionResult& result, bool verbose) {
  ordered_json record;
  record["input"] = input;
  record["corrected"] = result.corrected;
  ordered_json decisions = ordered_json::array();
  for (const auto& d : result.decisions) {
    decisions.push_back({{"index", d.index},
                         {"tokens", d.consumed},
                         {"original", encode_utf8(d.original)},
                         {"resolution", to_string(d.resolution)},
                         {"result", encode_utf8(d.result)},
                         {"distance", d.distance},
                         {"frequency", d.frequency}});
  }
  record["decisions"] = std::move(decisions);
  ordered_json eps = ordered_json::array();
  for (const auto& ep : result.catalogue) {
    eps.push_back({{"id", ep.id},
                   {"expression", encode_utf8(ep.expression)},
                   {"original", encode_utf8(ep.original)},
                   {"start", ep.span.start},
                   {"tokens", ep.span.n},
                   {"distance", ep.distance}});
  }
  record["eps"] = std::move(eps);
  if (verbose) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : result.derivation) {
      ordered_json step = {{"step", s.step},
                           {"kind", to_string(s.kind)},
                           {"id", s.id},
                           {"expression", encode_utf8(s.expression)},
                           {"tokens", encode_utf8(s.tokens)},
                           {"distance", s.distance}};
      if (!s.sentence.empty()) step["sentence"] = encode_utf8(s.sentence);
      steps.push_back(std::move(step));
    }
    record["derivation"] = std::move(steps);
  }
  return record.dump();
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Dictionary-driven spelling correction with apostrophe and "
               "multiword expression recognition"};
  app.require_subcommand(1);

  Config config;
  std::string k_text = "1/3";
  auto* k_opt = app.add_option("--k", k_text, "length factor of the edit threshold");
  auto* max_opt = app.add_option("--max-edit", config.dict_max_edit,
                                 "deletion depth of the dictionary index");
  auto* cmax_opt = app.add_option("--compound-max-edit",
                                  config.compound_max_edit,
                                  "deletion depth of the compound index");
  app.add_option("--dict", config.dict_path, "dictionary TSV");
  app.add_option("--compounds", config.compounds_path, "compound lexicon TSV");
  app.add_option("--bigrams", config.bigrams_path, "bigram TSV");
  app.add_option("--kb-cache", config.kb_cache_path, "prebuilt index cache");
  bool verbose = false;
  bool parallel = false;
  app.add_flag("--verbose", verbose, "include the expression derivation");
  app.add_flag("--parallel", parallel, "correct lines concurrently");
  app.fallthrough();

  std::string corpus, out_path, word;
  std::vector<std::string> text;
  auto* dict_cmd = app.add_subcommand("build-dict", "count a corpus into a dictionary");
  dict_cmd->add_option("corpus", corpus)->required();
  dict_cmd->add_option("out", out_path)->required();
  auto* bigram_cmd = app.add_subcommand("bigrams", "extract adjacent word pairs");
  bigram_cmd->add_option("corpus", corpus)->required();
  bigram_cmd->add_option("out", out_path)->required();
  auto* kb_cmd = app.add_subcommand("build-kb", "build and persist the indexes");
  kb_cmd->add_option("out", out_path)->required();
  auto* lookup_cmd = app.add_subcommand("lookup", "correct a single word");
  lookup_cmd->add_option("word", word)->required();
  auto* correct_cmd = app.add_subcommand("correct", "correct sentences");
  correct_cmd->add_option("text", text, "text to correct; stdin when absent");
  for (auto* sub : {dict_cmd, bigram_cmd, kb_cmd, lookup_cmd, correct_cmd}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const bool params_given =
      k_opt->count() > 0 || max_opt->count() > 0 || cmax_opt->count() > 0;
  try {
    config.k = parse_ratio(k_text);
    if (config.dict_max_edit < 0 || config.compound_max_edit < 0) {
      throw std::invalid_argument("edit distances must be >= 0");
    }
    if (dict_cmd->parsed()) return build_dict(corpus, out_path, out, err);
    if (bigram_cmd->parsed()) return build_bigrams(corpus, out_path, out, err);
    if (kb_cmd->parsed()) return build_kb(config, out_path, out, err);
    if (lookup_cmd->parsed()) return run_lookup(config, params_given, word, out);
    return run_correct(config, params_given, text, verbose, parallel, in, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace polispell::cli
