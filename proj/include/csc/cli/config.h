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

#ifndef CSC_CLI_CONFIG_H_
#define CSC_CLI_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "csc/crbin.h"
#include "csc/tokenizer.h"

namespace csc::cli {

// Settings shared by all subcommands.
struct ToolConfig {
  std::string tokenizer = "whitespace+cjk-chars";
  std::string merges;  // required by the subword scheme
  double delta = 0.2;
  std::uint64_t seed = 0;
  int jobs = 1;

  // Throws InputError for delta outside (0, 1], jobs < 1, an unknown
  // scheme, or a missing merges file.
  void Validate() const;

  Tokenizer MakeTokenizer() const;
  BinConfig bins() const { return BinConfig(delta); }
};

// Throws IoError unless every path names a readable regular file.
void RequireReadable(const std::vector<std::string>& paths);

}  // namespace csc::cli

#endif  // CSC_CLI_CONFIG_H_
