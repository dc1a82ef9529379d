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

#include "csc/cli/config.h"

#include <filesystem>
#include <fstream>
#include <memory>

#include "csc/error.h"

namespace csc::cli {

void ToolConfig::Validate() const {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw InputError("delta must be in (0, 1], got " + std::to_string(delta));
  }
  if (jobs < 1) throw InputError("jobs must be at least 1");
  const TokenizerScheme scheme = ParseScheme(tokenizer);
  if (scheme == TokenizerScheme::kSubword) {
    if (merges.empty()) throw InputError("subword tokenizer needs --merges");
    RequireReadable({merges});
  }
}

Tokenizer ToolConfig::MakeTokenizer() const {
  TokenizerConfig config;
  config.scheme = ParseScheme(tokenizer);
  if (!merges.empty()) {
    config.merges = std::make_shared<MergesTable>(MergesTable::Load(merges));
  }
  return Tokenizer(config);
}

void RequireReadable(const std::vector<std::string>& paths) {
  for (const std::string& path : paths) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec) ||
        !std::ifstream(path).good()) {
      throw IoError("cannot read " + path);
    }
  }
}

}  // namespace csc::cli
