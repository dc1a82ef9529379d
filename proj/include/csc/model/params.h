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

#ifndef CSC_MODEL_PARAMS_H_
#define CSC_MODEL_PARAMS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "csc/model/config.h"

namespace csc::model {

using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVector = Eigen::Matrix<double, 1, Eigen::Dynamic>;

// Flat parameter storage. A fixed base alignment keeps Eigen's vectorized
// reductions bit-identical across allocations.
using FlatVector = std::vector<double, Eigen::aligned_allocator<double>>;

struct TensorInfo {
  std::string name;
  std::size_t rows;
  std::size_t cols;  // 1 for vectors
  std::size_t offset;

  std::size_t size() const { return rows * cols; }
  bool is_vector() const { return cols == 1; }
};

// Ordered list of named tensors packed into one flat buffer.
class ParamLayout {
 public:
  explicit ParamLayout(const ModelConfig& config);

  const std::vector<TensorInfo>& tensors() const { return tensors_; }
  std::size_t total_size() const { return total_; }
  int layers() const { return layers_; }
  const TensorInfo& Find(const std::string& name) const;

 private:
  void Add(std::string name, std::size_t rows, std::size_t cols);

  std::vector<TensorInfo> tensors_;
  std::size_t total_ = 0;
  int layers_ = 0;
};

// Typed views over a flat buffer; T is double or const double.
template <typename T>
struct Views {
  using Mat = Eigen::Map<
      std::conditional_t<std::is_const_v<T>, const Matrix, Matrix>>;
  using Vec = Eigen::Map<
      std::conditional_t<std::is_const_v<T>, const RowVector, RowVector>>;

  struct Linear {
    Mat w;  // in x out
    Vec b;
  };
  struct LayerNorm {
    Vec g;
    Vec b;
  };
  struct Attention {
    Linear q, k, v, o;
  };
  struct FeedForward {
    Linear in, out;
  };
  struct EncoderLayer {
    LayerNorm ln1;
    Attention attn;
    LayerNorm ln2;
    FeedForward ffn;
  };
  struct DecoderLayer {
    LayerNorm ln1;
    Attention self_attn;
    LayerNorm ln2;
    Attention cross_attn;
    LayerNorm ln3;
    FeedForward ffn;
  };
};

template <typename T>
struct ModelView {
  using V = Views<T>;
  typename V::Mat src_emb;
  typename V::Mat tgt_emb;
  typename V::Mat bin_emb;
  std::vector<typename V::EncoderLayer> encoder;
  typename V::LayerNorm encoder_ln;
  std::vector<typename V::DecoderLayer> decoder;
  typename V::LayerNorm decoder_ln;
  typename V::Linear output;
};

ModelView<const double> MakeView(const ParamLayout& layout,
                                 const double* data);
ModelView<double> MakeView(const ParamLayout& layout, double* data);

// All learnable tensors of the model. The sinusoidal position table is
// derived from the config and is not stored.
struct ModelParams {
  ModelConfig config;
  ParamLayout layout;
  FlatVector values;

  explicit ModelParams(ModelConfig c);

  ModelView<const double> view() const {
    return MakeView(layout, values.data());
  }
  ModelView<double> mutable_view() { return MakeView(layout, values.data()); }

  bool AllFinite() const;
};

// Zero-initialized buffer shaped like the parameters.
struct Gradients {
  FlatVector values;

  explicit Gradients(const ParamLayout& layout)
      : values(layout.total_size(), 0.0) {}
  void Zero() { std::fill(values.begin(), values.end(), 0.0); }
};

// Xavier-uniform projections, N(0, 1/d) token embeddings, N(0, 1) bin
// embeddings, unit layer-norm gains, zero biases.
void InitializeParams(ModelParams* params, std::uint64_t seed);

// positional[t][2i] = sin(t / 10000^(2i/d)), [2i+1] = cos(...).
Matrix SinusoidalTable(int max_len, int d_model);

}  // namespace csc::model

#endif  // CSC_MODEL_PARAMS_H_
