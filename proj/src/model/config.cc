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

#include "csc/model/config.h"

#include <algorithm>
#include <utility>

#include "csc/error.h"

namespace csc::model {

const char* ConditioningName(Conditioning c) {
  switch (c) {
    case Conditioning::kCrEmbedding:
      return "cr_embedding";
    case Conditioning::kTaskToken:
      return "task_token";
    case Conditioning::kNone:
      return "none";
  }
  return "?";
}

Conditioning ParseConditioning(std::string_view name) {
  if (name == "cr_embedding") return Conditioning::kCrEmbedding;
  if (name == "task_token") return Conditioning::kTaskToken;
  if (name == "none") return Conditioning::kNone;
  throw InputError("unknown conditioning mode: " + std::string(name));
}

Vocab::Vocab(int num_bins, std::vector<std::string> corpus_tokens) {
  std::vector<std::string> tokens = {"<bos>", "<eos>", "<unk>"};
  for (int b = 1; b <= num_bins; ++b) {
    tokens.push_back("<bin_" + std::to_string(b) + ">");
  }
  std::sort(corpus_tokens.begin(), corpus_tokens.end());
  corpus_tokens.erase(std::unique(corpus_tokens.begin(), corpus_tokens.end()),
                      corpus_tokens.end());
  for (std::string& t : corpus_tokens) {
    if (std::find(tokens.begin(), tokens.end(), t) == tokens.end()) {
      tokens.push_back(std::move(t));
    }
  }
  *this = FromTokens(std::move(tokens));
}

Vocab Vocab::FromTokens(std::vector<std::string> tokens) {
  Vocab v;
  v.tokens_ = std::move(tokens);
  for (int i = 0; i < v.size(); ++i) {
    if (!v.index_.emplace(v.tokens_[i], i).second) {
      throw InputError("duplicate vocabulary token: " + v.tokens_[i]);
    }
  }
  return v;
}

int Vocab::Id(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? kUnk : it->second;
}

const std::string& Vocab::Token(int id) const {
  if (id < 0 || id >= size()) throw IndexError("token id out of range");
  return tokens_[id];
}

std::vector<int> Vocab::Encode(const std::vector<std::string>& tokens) const {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const std::string& t : tokens) ids.push_back(Id(t));
  return ids;
}

std::vector<std::string> Vocab::Decode(const std::vector<int>& ids) const {
  std::vector<std::string> out;
  for (int id : ids) {
    if (id == kEos) break;
    if (id == kBos || (id >= kFirstBin && tokens_[id].rfind("<bin_", 0) == 0)) {
      continue;
    }
    out.push_back(Token(id));
  }
  return out;
}

void ModelConfig::Validate() const {
  if (layers < 1 || heads < 1 || d_model < 1 || d_ff < 1 || max_len < 2) {
    throw InputError("model dimensions must be positive");
  }
  if (d_model % heads != 0) {
    throw InputError("d_model must be divisible by heads");
  }
  if (!(label_smoothing >= 0.0 && label_smoothing < 0.5)) {
    throw InputError("label smoothing must lie in [0, 0.5)");
  }
  if (src_vocab.size() < Vocab::kFirstBin + bins.num_bins() ||
      tgt_vocab.size() < Vocab::kFirstBin + bins.num_bins()) {
    throw InputError("vocabulary lacks reserved tokens for the bin config");
  }
}

nlohmann::ordered_json ModelConfig::ToJson() const {
  nlohmann::ordered_json j;
  j["layers"] = layers;
  j["heads"] = heads;
  j["d_model"] = d_model;
  j["d_ff"] = d_ff;
  j["max_len"] = max_len;
  j["delta"] = bins.delta();
  j["conditioning"] = ConditioningName(conditioning);
  j["label_smoothing"] = label_smoothing;
  j["numeric_width"] = 64;
  j["src_vocab"] = src_vocab.tokens();
  j["tgt_vocab"] = tgt_vocab.tokens();
  return j;
}

ModelConfig ModelConfig::FromJson(const nlohmann::json& j) {
  ModelConfig c;
  try {
    c.layers = j.at("layers").get<int>();
    c.heads = j.at("heads").get<int>();
    c.d_model = j.at("d_model").get<int>();
    c.d_ff = j.at("d_ff").get<int>();
    c.max_len = j.at("max_len").get<int>();
    c.bins = BinConfig(j.at("delta").get<double>());
    c.conditioning = ParseConditioning(j.at("conditioning").get<std::string>());
    c.label_smoothing = j.at("label_smoothing").get<double>();
    if (j.at("numeric_width").get<int>() != 64) {
      throw InputError("only 64-bit models are supported");
    }
    c.src_vocab =
        Vocab::FromTokens(j.at("src_vocab").get<std::vector<std::string>>());
    c.tgt_vocab =
        Vocab::FromTokens(j.at("tgt_vocab").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad model config: ") + e.what());
  }
  c.Validate();
  return c;
}

}  // namespace csc::model
