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

#include "csc/model/params.h"

#include <cmath>
#include <utility>

#include "csc/error.h"
#include "csc/rng.h"

namespace csc::model {
ParamLayout::ParamLayout(const ModelConfig& config) : layers_(config.layers) {
  const int d = config.d_model;
  const int f = config.d_ff;
  Add("src_emb", config.src_vocab_size(), d);
  Add("tgt_emb", config.tgt_vocab_size(), d);
  Add("bin_emb", config.bins.num_bins(), d);
  auto layer_norm = [&](const std::string& p) {
    Add(p + ".g", d, 1);
    Add(p + ".b", d, 1);
  };
  auto linear = [&](const std::string& p, int in, int out) {
    Add(p + ".w", in, out);
    Add(p + ".b", out, 1);
  };
  auto attention = [&](const std::string& p) {
    for (const char* m : {".q", ".k", ".v", ".o"}) linear(p + m, d, d);
  };
  for (int l = 0; l < config.layers; ++l) {
    const std::string p = "enc" + std::to_string(l);
    layer_norm(p + ".ln1");
    attention(p + ".attn");
    layer_norm(p + ".ln2");
    linear(p + ".ffn.in", d, f);
    linear(p + ".ffn.out", f, d);
  }
  layer_norm("enc.ln");
  for (int l = 0; l < config.layers; ++l) {
    const std::string p = "dec" + std::to_string(l);
    layer_norm(p + ".ln1");
    attention(p + ".self");
    layer_norm(p + ".ln2");
    attention(p + ".cross");
    layer_norm(p + ".ln3");
    linear(p + ".ffn.in", d, f);
    linear(p + ".ffn.out", f, d);
  }
  layer_norm("dec.ln");
  linear("out", d, config.tgt_vocab_size());
}

void ParamLayout::Add(std::string name, std::size_t rows, std::size_t cols) {
  tensors_.push_back({std::move(name), rows, cols, total_});
  total_ += rows * cols;
}

const TensorInfo& ParamLayout::Find(const std::string& name) const {
  for (const TensorInfo& t : tensors_) {
    if (t.name == name) return t;
  }
  throw IndexError("no tensor named " + name);
}

namespace {

// Hands out views in layout order, checking names as it goes.
template <typename T>
class Cursor {
 public:
  using V = Views<T>;

  Cursor(const ParamLayout& layout, T* data) : layout_(layout), data_(data) {}

  typename V::Mat Mat(const std::string& name) {
    const TensorInfo& t = Next(name);
    return typename V::Mat(data_ + t.offset, t.rows, t.cols);
  }
  typename V::Vec Vec(const std::string& name) {
    const TensorInfo& t = Next(name);
    return typename V::Vec(data_ + t.offset, t.rows);
  }
  typename V::LayerNorm LayerNorm(const std::string& p) {
    auto g = Vec(p + ".g");
    auto b = Vec(p + ".b");
    return {g, b};
  }
  typename V::Linear Linear(const std::string& p) {
    auto w = Mat(p + ".w");
    auto b = Vec(p + ".b");
    return {w, b};
  }
  typename V::Attention Attention(const std::string& p) {
    auto q = Linear(p + ".q");
    auto k = Linear(p + ".k");
    auto v = Linear(p + ".v");
    auto o = Linear(p + ".o");
    return {q, k, v, o};
  }
  typename V::FeedForward FeedForward(const std::string& p) {
    auto in = Linear(p + ".in");
    auto out = Linear(p + ".out");
    return {in, out};
  }
  bool done() const { return next_ == layout_.tensors().size(); }

 private:
  const TensorInfo& Next(const std::string& name) {
    const TensorInfo& t = layout_.tensors().at(next_++);
    if (t.name != name) throw Error("layout mismatch at " + name);
    return t;
  }

  const ParamLayout& layout_;
  T* data_;
  std::size_t next_ = 0;
};

template <typename T>
ModelView<T> Build(const ParamLayout& layout, T* data) {
  Cursor<T> c(layout, data);
  auto src = c.Mat("src_emb");
  auto tgt = c.Mat("tgt_emb");
  auto bin = c.Mat("bin_emb");
  const int layers = layout.layers();
  std::vector<typename Views<T>::EncoderLayer> encoder;
  for (int l = 0; l < layers; ++l) {
    const std::string p = "enc" + std::to_string(l);
    auto ln1 = c.LayerNorm(p + ".ln1");
    auto attn = c.Attention(p + ".attn");
    auto ln2 = c.LayerNorm(p + ".ln2");
    auto ffn = c.FeedForward(p + ".ffn");
    encoder.push_back({ln1, attn, ln2, ffn});
  }
  auto enc_ln = c.LayerNorm("enc.ln");
  std::vector<typename Views<T>::DecoderLayer> decoder;
  for (int l = 0; l < layers; ++l) {
    const std::string p = "dec" + std::to_string(l);
    auto ln1 = c.LayerNorm(p + ".ln1");
    auto self = c.Attention(p + ".self");
    auto ln2 = c.LayerNorm(p + ".ln2");
    auto cross = c.Attention(p + ".cross");
    auto ln3 = c.LayerNorm(p + ".ln3");
    auto ffn = c.FeedForward(p + ".ffn");
    decoder.push_back({ln1, self, ln2, cross, ln3, ffn});
  }
  auto dec_ln = c.LayerNorm("dec.ln");
  auto out = c.Linear("out");
  if (!c.done()) throw Error("layout has trailing tensors");
  return {src, tgt, bin, std::move(encoder), enc_ln,
          std::move(decoder), dec_ln, out};
}

}  // namespace

ModelView<const double> MakeView(const ParamLayout& layout,
                                 const double* data) {
  return Build<const double>(layout, data);
}

ModelView<double> MakeView(const ParamLayout& layout, double* data) {
  return Build<double>(layout, data);
}

ModelParams::ModelParams(ModelConfig c)
    : config(std::move(c)), layout(config), values(layout.total_size(), 0.0) {
  config.Validate();
}

bool ModelParams::AllFinite() const {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void InitializeParams(ModelParams* params, std::uint64_t seed) {
  Rng rng(seed);
  const double emb_std = 1.0 / std::sqrt(params->config.d_model);
  for (const TensorInfo& t : params->layout.tensors()) {
    double* p = params->values.data() + t.offset;
    const std::string& n = t.name;
    const auto ends_with = [&](const char* suffix) {
      const std::string s(suffix);
      return n.size() >= s.size() &&
             n.compare(n.size() - s.size(), s.size(), s) == 0;
    };
    if (n == "src_emb" || n == "tgt_emb") {
      for (std::size_t i = 0; i < t.size(); ++i) p[i] = emb_std * rng.Normal();
    } else if (n == "bin_emb") {
      for (std::size_t i = 0; i < t.size(); ++i) p[i] = rng.Normal();
    } else if (ends_with(".g")) {
      std::fill(p, p + t.size(), 1.0);
    } else if (t.is_vector()) {
      std::fill(p, p + t.size(), 0.0);
    } else {
      const double a = std::sqrt(6.0 / static_cast<double>(t.rows + t.cols));
      for (std::size_t i = 0; i < t.size(); ++i) {
        p[i] = a * (2.0 * rng.Uniform() - 1.0);
      }
    }
  }
}

Matrix SinusoidalTable(int max_len, int d_model) {
  Matrix table(max_len, d_model);
  for (int t = 0; t < max_len; ++t) {
    for (int i = 0; i < d_model; i += 2) {
      const double freq = std::pow(10000.0, -static_cast<double>(i) / d_model);
      table(t, i) = std::sin(t * freq);
      if (i + 1 < d_model) table(t, i + 1) = std::cos(t * freq);
    }
  }
  return table;
}

}  // namespace csc::model
