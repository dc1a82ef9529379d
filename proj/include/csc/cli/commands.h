// Copyright 2026 The CSC Toolkit Authors.
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

#ifndef CSC_CLI_COMMANDS_H_
#define CSC_CLI_COMMANDS_H_

#include <string>
#include <vector>

namespace csc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

// Parses `args` (args[0] is the program name), runs one of augment, stats,
// score, synth, train, generate or sweep, and returns the exit status.
// Diagnostics go to stderr; data goes to files or stdout.
int Run(const std::vector<std::string>& args);

}  // namespace csc::cli

#endif  // CSC_CLI_COMMANDS_H_
