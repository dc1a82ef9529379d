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

#ifndef CSC_MODEL_CONFIG_H_
#define CSC_MODEL_CONFIG_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "csc/crbin.h"
#include "json.hpp"

namespace csc::model {

enum class Conditioning { kCrEmbedding, kTaskToken, kNone };

const char* ConditioningName(Conditioning c);
Conditioning ParseConditioning(std::string_view name);

// Token inventory. Ids 0..2 are <bos>, <eos>, <unk>; then one reserved
// <bin_k> token per compression bin; then the corpus tokens in sorted order.
class Vocab {
 public:
  static constexpr int kBos = 0;
  static constexpr int kEos = 1;
  static constexpr int kUnk = 2;
  static constexpr int kFirstBin = 3;

  Vocab() = default;
  Vocab(int num_bins, std::vector<std::string> corpus_tokens);
  // Rebuilds from a complete token list (checkpoint loading).
  static Vocab FromTokens(std::vector<std::string> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  int Id(const std::string& token) const;
  const std::string& Token(int id) const;
  int BinToken(int bin) const { return kFirstBin + bin - 1; }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::vector<int> Encode(const std::vector<std::string>& tokens) const;
  // Stops at <eos>; drops <bos> and bin tokens.
  std::vector<std::string> Decode(const std::vector<int>& ids) const;

  friend bool operator==(const Vocab& a, const Vocab& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

struct ModelConfig {
  int layers = 2;
  int heads = 4;
  int d_model = 64;
  int d_ff = 128;
  int max_len = 64;
  BinConfig bins{0.2};
  Conditioning conditioning = Conditioning::kCrEmbedding;
  double label_smoothing = 0.0;
  Vocab src_vocab;
  Vocab tgt_vocab;

  int src_vocab_size() const { return src_vocab.size(); }
  int tgt_vocab_size() const { return tgt_vocab.size(); }

  // Throws InputError on inconsistent dimensions.
  void Validate() const;

  nlohmann::ordered_json ToJson() const;
  static ModelConfig FromJson(const nlohmann::json& j);

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

}  // namespace csc::model

#endif  // CSC_MODEL_CONFIG_H_
