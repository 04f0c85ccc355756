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

#ifndef CORPSUM_TOOLS_CLI_COMMANDS_H_
#define CORPSUM_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace corpsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 2;
inline constexpr int kExitUsage = 64;

// Runs `corpsum <args...>` (program name excluded). Results go to `out`,
// diagnostics to `err`. Returns the process exit status.
int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace corpsum::cli

#endif  // CORPSUM_TOOLS_CLI_COMMANDS_H_
