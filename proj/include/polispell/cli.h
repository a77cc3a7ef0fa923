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

#ifndef POLISPELL_CLI_H_
#define POLISPELL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "polispell/compound.h"
#include "polispell/edit_distance.h"

namespace polispell::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUncorrectable = 1;
inline constexpr int kUsageError = 2;

struct Config {
  Ratio k{1, 3};
  int dict_max_edit = 3;
  int compound_max_edit = 4;
  std::string dict_path;
  std::string compounds_path;
  std::string bigrams_path;
  std::string kb_cache_path;

  EditParams dictionary_params() const { return {k, dict_max_edit}; }
  EditParams compound_params() const { return {k, compound_max_edit}; }
};

// Renders one `correct` output record (a single JSON object, no newline).
std::string format_record(const std::string& input,
                          const CorrectionResult& result, bool verbose);

// Entry point behind the polispell binary. Arguments exclude argv[0].
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace polispell::cli

#endif  // POLISPELL_CLI_H_
