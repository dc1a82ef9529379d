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

#ifndef CSC_MODEL_TRANSFORMER_H_
#define CSC_MODEL_TRANSFORMER_H_

#include <span>
#include <vector>

#include "csc/corpus.h"
#include "csc/model/params.h"

namespace csc::model {

enum class Side { kEncoder, kDecoder };

// Model-ready ids for one TrainingPair under the config's conditioning.
struct Example {
  std::vector<int> src;      // encoder input
  std::vector<int> tgt_in;   // start token + target
  std::vector<int> tgt_out;  // target + <eos>
  int bin = 1;
};

// Encoder ids for a token sequence; task_token mode prepends <bin_k>.
std::vector<int> SourceIds(const std::vector<std::string>& tokens, int bin,
                           const ModelConfig& config);
// First decoder input: <bin_k> in task_token mode, <bos> otherwise.
int StartToken(int bin, const ModelConfig& config);
Example MakeExample(const TrainingPair& pair, const ModelConfig& config);

// Forward and backward passes of the pre-norm encoder-decoder. Holds a
// reference to the parameters, which must outlive it.
class Transformer {
 public:
  explicit Transformer(const ModelParams& params);

  const ModelConfig& config() const { return params_.config; }
  const ModelParams& params() const { return params_; }

  // token_emb * sqrt(d_model) + positional + bin_emb[bin] (the bin term only
  // under cr_embedding conditioning). Throws IndexError, LengthError.
  Matrix Embed(std::span<const int> ids, int bin, Side side) const;

  // Final-normalized encoder states, |src| x d_model.
  Matrix Encode(std::span<const int> src, int bin) const;

  // Logits for every decoder position, |tgt_prefix| x tgt_vocab.
  Matrix Forward(std::span<const int> src, std::span<const int> tgt_prefix,
                 int bin) const;

  // Sum of per-token cross-entropy for one example; adds
  // scale * d(sum)/d(params) into `grads` when non-null.
  double ExampleLoss(const Example& example, Gradients* grads,
                     double scale) const;

  const Matrix& positional() const { return positional_; }

 private:
  void CheckIds(std::span<const int> ids, int bin, Side side) const;

  const ModelParams& params_;
  ModelView<const double> view_;
  Matrix positional_;
};

struct LossResult {
  double loss = 0.0;  // token-mean cross-entropy
  std::size_t tokens = 0;
};

// Token-mean loss over a batch and its gradient (overwrites `grads`).
// Examples are processed in fixed shards and reduced in shard order, so the
// result is identical for every `jobs` value. Throws EmptyBatch.
LossResult LossAndGrads(const Transformer& model,
                        std::span<const Example> batch, Gradients* grads,
                        int jobs = 1);

// Loss only.
LossResult BatchLoss(const Transformer& model, std::span<const Example> batch,
                     int jobs = 1);

// Incremental decoder: caches self-attention keys/values per layer so each
// step costs one position. Produces the same log-probabilities as Forward.
class DecoderState {
 public:
  DecoderState(const Transformer& model, std::span<const int> src, int bin);

  // Feeds the next decoder input token and returns log-probabilities of the
  // following token.
  Eigen::VectorXd Advance(int token);
  int length() const { return length_; }

 private:
  const Transformer* model_;
  int bin_;
  int length_ = 0;
  std::vector<Matrix> self_k_, self_v_;
  std::vector<Matrix> cross_k_, cross_v_;
};

}  // namespace csc::model

#endif  // CSC_MODEL_TRANSFORMER_H_
