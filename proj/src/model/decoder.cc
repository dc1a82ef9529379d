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

#include "csc/model/decoder.h"

namespace csc::model {

bool RepeatsNgram(std::span<const int> prefix, int next, int n) {
  if (n <= 0) return false;
  const std::size_t len = static_cast<std::size_t>(n);
  if (prefix.size() + 1 < len) return false;
  // Candidate n-gram: last n-1 tokens of the prefix followed by `next`.
  const std::size_t tail = prefix.size() - (len - 1);
  for (std::size_t i = 0; i + len <= prefix.size(); ++i) {
    bool same = prefix[i + len - 1] == next;
    for (std::size_t j = 0; same && j + 1 < len; ++j) {
      same = prefix[i + j] == prefix[tail + j];
    }
    if (same) return true;
  }
  return false;
}

namespace {

class TransformerScorer {
 public:
  using State = DecoderState;

  TransformerScorer(const Transformer& model, std::span<const int> src,
                    int bin)
      : model_(model), src_(src), bin_(bin) {}

  std::pair<State, Eigen::VectorXd> Start() {
    State state(model_, src_, bin_);
    Eigen::VectorXd next = state.Advance(StartToken(bin_, model_.config()));
    return {std::move(state), std::move(next)};
  }

  Eigen::VectorXd Advance(State& state, int token) {
    return state.Advance(token);
  }

 private:
  const Transformer& model_;
  std::span<const int> src_;
  int bin_;
};

}  // namespace

std::vector<int> Decode(const Transformer& model, std::span<const int> src,
                        int bin, const DecodeOptions& options) {
  const ModelConfig& c = model.config();
  SearchOptions search;
  search.beam_width = options.beam_width;
  search.block_ngram = options.block_ngram;
  search.max_steps = c.max_len - 1;
  search.banned.assign(c.tgt_vocab_size(), false);
  search.banned[Vocab::kBos] = true;
  search.banned[Vocab::kUnk] = true;
  for (int b = 1; b <= c.bins.num_bins(); ++b) {
    search.banned[c.tgt_vocab.BinToken(b)] = true;
  }
  TransformerScorer scorer(model, src, bin);
  return BeamSearch(scorer, search);
}

}  // namespace csc::model
