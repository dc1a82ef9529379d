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

#ifndef CSC_TOKENIZER_H_
#define CSC_TOKENIZER_H_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace csc {

// A token surface plus whether it attaches to the previous token without a
// space in the normalized text. Equality used by metrics is on surface only.
struct Token {
  std::string surface;
  bool attached = false;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class TokenizerScheme { kWhitespace, kWhitespaceCjk, kSubword };

const char* SchemeName(TokenizerScheme scheme);
TokenizerScheme ParseScheme(std::string_view name);

// Set of subword pieces used by greedy longest-match segmentation.
class MergesTable {
 public:
  MergesTable() = default;
  explicit MergesTable(std::vector<std::string> pieces);

  // One piece per line. A line "a b" (BPE merge notation) contributes the
  // merged piece "ab". Blank lines and lines starting with '#' are skipped.
  static MergesTable Load(const std::string& path);

  bool Contains(std::string_view piece) const;
  std::size_t max_piece_chars() const { return max_piece_chars_; }
  std::size_t size() const { return pieces_.size(); }

 private:
  std::unordered_set<std::string> pieces_;
  std::size_t max_piece_chars_ = 0;
};

struct TokenizerConfig {
  TokenizerScheme scheme = TokenizerScheme::kWhitespaceCjk;
  std::shared_ptr<const MergesTable> merges;
};

// Normalization applied before tokenization: NFC, whitespace runs collapsed
// to a single space, leading and trailing whitespace removed.
std::string NormalizeText(std::string_view text);

class Tokenizer {
 public:
  Tokenizer() = default;
  explicit Tokenizer(TokenizerConfig config);

  // Throws EmptyText when nothing remains after normalization.
  std::vector<Token> Tokenize(std::string_view text) const;

  // Inverse of Tokenize on normalized text.
  static std::string Detokenize(const std::vector<Token>& tokens);

  const TokenizerConfig& config() const { return config_; }

 private:
  void SplitWord(const std::vector<char32_t>& word,
                 std::vector<Token>* out) const;

  TokenizerConfig config_;
};

std::vector<std::string> Surfaces(const std::vector<Token>& tokens);

}  // namespace csc

#endif  // CSC_TOKENIZER_H_
