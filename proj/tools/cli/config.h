// Copyright 2026 The corpsum Authors.
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

#ifndef CORPSUM_TOOLS_CLI_CONFIG_H_
#define CORPSUM_TOOLS_CLI_CONFIG_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "corpsum/extraction.h"
#include "corpsum/linguistic.h"

namespace corpsum::cli {

// Settings shared by the subcommands. Precedence: command-line flags, then
// a --config file, then these defaults.
struct Config {
  double ratio = 0.30;
  std::optional<size_t> quota;
  double backref_factor = 0.70;
  std::string connectives_file;       // empty means the default list
  std::string tagger = "builtin";     // builtin | pretagged
  std::string lexicon;                // empty means the builtin lexicon
  bool strict_period = false;
  bool p_only = false;
  double majority = 0.5;
  std::string format;                 // subcommand-specific default when empty

  TaggerMode tagger_mode() const;
  // Throws Error(kInvalidArgument) when a value is out of range.
  void Validate() const;
};

// Applies "key = value" lines (blank and '#' lines skipped) on top of
// `config`. Keys use the flag names without dashes; '-' and '_' are
// interchangeable.
void ApplyConfigText(std::string_view text, std::string_view source, Config &config);
void ApplyConfigFile(const std::filesystem::path &path, Config &config);

// One connective per line, case-folded.
std::set<std::string> ReadConnectives(const std::filesystem::path &path);

}  // namespace corpsum::cli

#endif  // CORPSUM_TOOLS_CLI_CONFIG_H_
