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

#include "csc/model/transformer.h"

#include <cmath>
#include <optional>
#include <utility>

#include "csc/error.h"
#include "csc/parallel.h"

namespace csc::model {
namespace {

using CV = Views<const double>;
using GV = Views<double>;

constexpr double kLayerNormEps = 1e-5;
constexpr int kGradShards = 8;

struct LayerNormCache {
  Matrix xhat;
  Eigen::VectorXd rstd;
};

struct AttentionCache {
  Matrix xq, xkv, q, k, v, concat;
  std::vector<Matrix> probs;  // per head
};

struct FeedForwardCache {
  Matrix x, h;
};

struct EncoderLayerCache {
  LayerNormCache ln1;
  AttentionCache attn;
  LayerNormCache ln2;
  FeedForwardCache ffn;
};

struct DecoderLayerCache {
  LayerNormCache ln1;
  AttentionCache self_attn;
  LayerNormCache ln2;
  AttentionCache cross_attn;
  LayerNormCache ln3;
  FeedForwardCache ffn;
};

Matrix LayerNormForward(const Matrix& x, const CV::LayerNorm& ln,
                        LayerNormCache* cache) {
  const Eigen::Index n = x.rows();
  Matrix xhat(n, x.cols());
  Eigen::VectorXd rstd(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mean = x.row(i).mean();
    const auto centered = x.row(i).array() - mean;
    const double var = centered.square().mean();
    rstd(i) = 1.0 / std::sqrt(var + kLayerNormEps);
    xhat.row(i) = centered * rstd(i);
  }
  Matrix y = (xhat.array().rowwise() * ln.g.array()).matrix();
  y.rowwise() += ln.b;
  if (cache) {
    cache->xhat = std::move(xhat);
    cache->rstd = std::move(rstd);
  }
  return y;
}

Matrix LayerNormBackward(const Matrix& dy, const CV::LayerNorm& ln,
                         const LayerNormCache& cache, GV::LayerNorm* grad) {
  if (grad) {
    grad->g += (dy.array() * cache.xhat.array()).colwise().sum().matrix();
    grad->b += dy.colwise().sum();
  }
  const Matrix dxhat = (dy.array().rowwise() * ln.g.array()).matrix();
  Matrix dx(dy.rows(), dy.cols());
  for (Eigen::Index i = 0; i < dy.rows(); ++i) {
    const double mean_d = dxhat.row(i).mean();
    const double mean_dx =
        (dxhat.row(i).array() * cache.xhat.row(i).array()).mean();
    dx.row(i) = cache.rstd(i) * (dxhat.row(i).array() - mean_d -
                                 cache.xhat.row(i).array() * mean_dx)
                                    .matrix();
  }
  return dx;
}

Matrix LinearForward(const Matrix& x, const CV::Linear& lin) {
  Matrix y = x * lin.w;
  y.rowwise() += lin.b;
  return y;
}

Matrix LinearBackward(const Matrix& dy, const Matrix& x, const CV::Linear& lin,
                      GV::Linear* grad) {
  if (grad) {
    grad->w.noalias() += x.transpose() * dy;
    grad->b += dy.colwise().sum();
  }
  return dy * lin.w.transpose();
}

// Row-wise softmax in place; with `causal`, row i sees columns 0..i+offset.
void SoftmaxRows(Matrix* s, bool causal, Eigen::Index offset) {
  for (Eigen::Index i = 0; i < s->rows(); ++i) {
    const Eigen::Index valid =
        causal ? std::min<Eigen::Index>(i + offset + 1, s->cols()) : s->cols();
    auto row = s->row(i);
    const double max = row.head(valid).maxCoeff();
    double sum = 0.0;
    for (Eigen::Index j = 0; j < valid; ++j) {
      row(j) = std::exp(row(j) - max);
      sum += row(j);
    }
    row.head(valid) /= sum;
    row.tail(s->cols() - valid).setZero();
  }
}

Matrix AttentionForward(const Matrix& xq, const Matrix& xkv,
                        const CV::Attention& attn, int heads, bool causal,
                        AttentionCache* cache) {
  Matrix q = LinearForward(xq, attn.q);
  Matrix k = LinearForward(xkv, attn.k);
  Matrix v = LinearForward(xkv, attn.v);
  const Eigen::Index d = q.cols();
  const Eigen::Index dh = d / heads;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
  Matrix concat(xq.rows(), d);
  std::vector<Matrix> probs(heads);
  for (int h = 0; h < heads; ++h) {
    Matrix s = (q.middleCols(h * dh, dh) * k.middleCols(h * dh, dh).transpose()) *
               scale;
    SoftmaxRows(&s, causal, 0);
    concat.middleCols(h * dh, dh).noalias() = s * v.middleCols(h * dh, dh);
    probs[h] = std::move(s);
  }
  Matrix out = LinearForward(concat, attn.o);
  if (cache) {
    cache->xq = xq;
    cache->xkv = xkv;
    cache->q = std::move(q);
    cache->k = std::move(k);
    cache->v = std::move(v);
    cache->concat = std::move(concat);
    cache->probs = std::move(probs);
  }
  return out;
}

// Returns gradients with respect to the query input and the key/value input.
std::pair<Matrix, Matrix> AttentionBackward(const Matrix& dout,
                                            const CV::Attention& attn,
                                            int heads,
                                            const AttentionCache& cache,
                                            GV::Attention* grad) {
  const Matrix dconcat =
      LinearBackward(dout, cache.concat, attn.o, grad ? &grad->o : nullptr);
  const Eigen::Index d = cache.q.cols();
  const Eigen::Index dh = d / heads;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
  Matrix dq(cache.q.rows(), d);
  Matrix dk(cache.k.rows(), d);
  Matrix dv(cache.v.rows(), d);
  for (int h = 0; h < heads; ++h) {
    const Matrix& p = cache.probs[h];
    const auto d_out_h = dconcat.middleCols(h * dh, dh);
    const Matrix dp = d_out_h * cache.v.middleCols(h * dh, dh).transpose();
    dv.middleCols(h * dh, dh).noalias() = p.transpose() * d_out_h;
    const Eigen::VectorXd row_dot = (dp.array() * p.array()).rowwise().sum();
    const Matrix ds =
        (p.array() * (dp.array().colwise() - row_dot.array())).matrix() *
        scale;
    dq.middleCols(h * dh, dh).noalias() = ds * cache.k.middleCols(h * dh, dh);
    dk.middleCols(h * dh, dh).noalias() =
        ds.transpose() * cache.q.middleCols(h * dh, dh);
  }
  Matrix dxq =
      LinearBackward(dq, cache.xq, attn.q, grad ? &grad->q : nullptr);
  Matrix dxkv =
      LinearBackward(dk, cache.xkv, attn.k, grad ? &grad->k : nullptr);
  dxkv += LinearBackward(dv, cache.xkv, attn.v, grad ? &grad->v : nullptr);
  return {std::move(dxq), std::move(dxkv)};
}

Matrix FeedForwardForward(const Matrix& x, const CV::FeedForward& ffn,
                          FeedForwardCache* cache) {
  Matrix h = LinearForward(x, ffn.in).cwiseMax(0.0);
  Matrix y = LinearForward(h, ffn.out);
  if (cache) {
    cache->x = x;
    cache->h = std::move(h);
  }
  return y;
}

Matrix FeedForwardBackward(const Matrix& dy, const CV::FeedForward& ffn,
                           const FeedForwardCache& cache,
                           GV::FeedForward* grad) {
  Matrix dh = LinearBackward(dy, cache.h, ffn.out, grad ? &grad->out : nullptr);
  dh = (cache.h.array() > 0.0).select(dh, 0.0);
  return LinearBackward(dh, cache.x, ffn.in, grad ? &grad->in : nullptr);
}

Matrix EncoderLayerForward(const Matrix& x, const CV::EncoderLayer& layer,
                           int heads, EncoderLayerCache* c) {
  const Matrix a = LayerNormForward(x, layer.ln1, &c->ln1);
  Matrix x1 = x + AttentionForward(a, a, layer.attn, heads, false, &c->attn);
  const Matrix b = LayerNormForward(x1, layer.ln2, &c->ln2);
  x1 += FeedForwardForward(b, layer.ffn, &c->ffn);
  return x1;
}

Matrix EncoderLayerBackward(const Matrix& dy, const CV::EncoderLayer& layer,
                            int heads, const EncoderLayerCache& c,
                            GV::EncoderLayer* g) {
  Matrix dx1 = dy;
  dx1 += LayerNormBackward(
      FeedForwardBackward(dy, layer.ffn, c.ffn, g ? &g->ffn : nullptr),
      layer.ln2, c.ln2, g ? &g->ln2 : nullptr);
  auto [dq, dkv] =
      AttentionBackward(dx1, layer.attn, heads, c.attn, g ? &g->attn : nullptr);
  dq += dkv;
  Matrix dx = dx1;
  dx += LayerNormBackward(dq, layer.ln1, c.ln1, g ? &g->ln1 : nullptr);
  return dx;
}

Matrix DecoderLayerForward(const Matrix& y, const Matrix& memory,
                           const CV::DecoderLayer& layer, int heads,
                           DecoderLayerCache* c) {
  const Matrix a = LayerNormForward(y, layer.ln1, &c->ln1);
  Matrix y1 =
      y + AttentionForward(a, a, layer.self_attn, heads, true, &c->self_attn);
  const Matrix b = LayerNormForward(y1, layer.ln2, &c->ln2);
  y1 += AttentionForward(b, memory, layer.cross_attn, heads, false,
                         &c->cross_attn);
  const Matrix e = LayerNormForward(y1, layer.ln3, &c->ln3);
  y1 += FeedForwardForward(e, layer.ffn, &c->ffn);
  return y1;
}

Matrix DecoderLayerBackward(const Matrix& dy, const CV::DecoderLayer& layer,
                            int heads, const DecoderLayerCache& c,
                            GV::DecoderLayer* g, Matrix* dmemory) {
  Matrix dy2 = dy;
  dy2 += LayerNormBackward(
      FeedForwardBackward(dy, layer.ffn, c.ffn, g ? &g->ffn : nullptr),
      layer.ln3, c.ln3, g ? &g->ln3 : nullptr);
  auto [dq_cross, dmem] = AttentionBackward(
      dy2, layer.cross_attn, heads, c.cross_attn, g ? &g->cross_attn : nullptr);
  *dmemory += dmem;
  Matrix dy1 = dy2;
  dy1 += LayerNormBackward(dq_cross, layer.ln2, c.ln2, g ? &g->ln2 : nullptr);
  auto [dq, dkv] = AttentionBackward(dy1, layer.self_attn, heads, c.self_attn,
                                     g ? &g->self_attn : nullptr);
  dq += dkv;
  Matrix dx = dy1;
  dx += LayerNormBackward(dq, layer.ln1, c.ln1, g ? &g->ln1 : nullptr);
  return dx;
}

void LogSoftmaxInPlace(Eigen::Ref<RowVector> row) {
  const double max = row.maxCoeff();
  const double lse = max + std::log((row.array() - max).exp().sum());
  row.array() -= lse;
}

}  // namespace

std::vector<int> SourceIds(const std::vector<std::string>& tokens, int bin,
                           const ModelConfig& config) {
  std::vector<int> ids;
  ids.reserve(tokens.size() + 1);
  if (config.conditioning == Conditioning::kTaskToken) {
    ids.push_back(config.src_vocab.BinToken(bin));
  }
  for (const std::string& t : tokens) ids.push_back(config.src_vocab.Id(t));
  return ids;
}

int StartToken(int bin, const ModelConfig& config) {
  return config.conditioning == Conditioning::kTaskToken
             ? config.tgt_vocab.BinToken(bin)
             : Vocab::kBos;
}

Example MakeExample(const TrainingPair& pair, const ModelConfig& config) {
  if (pair.bin < 1 || pair.bin > config.bins.num_bins()) {
    throw ConfigMismatch("training pair bin " + std::to_string(pair.bin) +
                         " outside the model's bin range");
  }
  Example ex;
  ex.bin = pair.bin;
  ex.src = SourceIds(pair.source, pair.bin, config);
  const std::vector<int> tgt = config.tgt_vocab.Encode(pair.target);
  ex.tgt_in.reserve(tgt.size() + 1);
  ex.tgt_in.push_back(StartToken(pair.bin, config));
  ex.tgt_in.insert(ex.tgt_in.end(), tgt.begin(), tgt.end());
  ex.tgt_out = tgt;
  ex.tgt_out.push_back(Vocab::kEos);
  return ex;
}

Transformer::Transformer(const ModelParams& params)
    : params_(params),
      view_(params.view()),
      positional_(SinusoidalTable(params.config.max_len,
                                  params.config.d_model)) {}

void Transformer::CheckIds(std::span<const int> ids, int bin,
                           Side side) const {
  const ModelConfig& c = config();
  if (static_cast<int>(ids.size()) > c.max_len) {
    throw LengthError("sequence of length " + std::to_string(ids.size()) +
                      " exceeds max_len " + std::to_string(c.max_len));
  }
  const int vocab =
      side == Side::kEncoder ? c.src_vocab_size() : c.tgt_vocab_size();
  for (int id : ids) {
    if (id < 0 || id >= vocab) throw IndexError("token id out of range");
  }
  if (bin < 1 || bin > c.bins.num_bins()) {
    throw IndexError("bin " + std::to_string(bin) + " out of range");
  }
}

Matrix Transformer::Embed(std::span<const int> ids, int bin,
                          Side side) const {
  CheckIds(ids, bin, side);
  const ModelConfig& c = config();
  const auto& table = side == Side::kEncoder ? view_.src_emb : view_.tgt_emb;
  const double scale = std::sqrt(static_cast<double>(c.d_model));
  const auto n = static_cast<Eigen::Index>(ids.size());
  Matrix x = positional_.topRows(n);
  for (Eigen::Index t = 0; t < n; ++t) x.row(t) += scale * table.row(ids[t]);
  if (c.conditioning == Conditioning::kCrEmbedding) {
    x.rowwise() += view_.bin_emb.row(bin - 1);
  }
  return x;
}

Matrix Transformer::Encode(std::span<const int> src, int bin) const {
  const int heads = config().heads;
  Matrix x = Embed(src, bin, Side::kEncoder);
  EncoderLayerCache cache;
  for (const auto& layer : view_.encoder) {
    x = EncoderLayerForward(x, layer, heads, &cache);
  }
  return LayerNormForward(x, view_.encoder_ln, nullptr);
}

Matrix Transformer::Forward(std::span<const int> src,
                            std::span<const int> tgt_prefix, int bin) const {
  const int heads = config().heads;
  const Matrix memory = Encode(src, bin);
  Matrix y = Embed(tgt_prefix, bin, Side::kDecoder);
  DecoderLayerCache cache;
  for (const auto& layer : view_.decoder) {
    y = DecoderLayerForward(y, memory, layer, heads, &cache);
  }
  return LinearForward(LayerNormForward(y, view_.decoder_ln, nullptr),
                       view_.output);
}

double Transformer::ExampleLoss(const Example& ex, Gradients* grads,
                                double scale) const {
  const ModelConfig& c = config();
  const int heads = c.heads;
  if (ex.tgt_in.size() != ex.tgt_out.size() || ex.tgt_in.empty() ||
      ex.src.empty()) {
    throw InputError("malformed example");
  }

  // Encoder.
  const Matrix x0 = Embed(ex.src, ex.bin, Side::kEncoder);
  std::vector<EncoderLayerCache> enc_cache(view_.encoder.size());
  Matrix x = x0;
  for (std::size_t l = 0; l < view_.encoder.size(); ++l) {
    x = EncoderLayerForward(x, view_.encoder[l], heads, &enc_cache[l]);
  }
  LayerNormCache enc_ln_cache;
  const Matrix memory = LayerNormForward(x, view_.encoder_ln, &enc_ln_cache);

  // Decoder.
  CheckIds(ex.tgt_out, ex.bin, Side::kDecoder);
  Matrix y = Embed(ex.tgt_in, ex.bin, Side::kDecoder);
  std::vector<DecoderLayerCache> dec_cache(view_.decoder.size());
  for (std::size_t l = 0; l < view_.decoder.size(); ++l) {
    y = DecoderLayerForward(y, memory, view_.decoder[l], heads, &dec_cache[l]);
  }
  LayerNormCache dec_ln_cache;
  const Matrix z = LayerNormForward(y, view_.decoder_ln, &dec_ln_cache);
  Matrix logits = LinearForward(z, view_.output);

  // Cross-entropy with optional label smoothing; logits become d(loss).
  const double eps = c.label_smoothing;
  const double k = static_cast<double>(logits.cols());
  double loss = 0.0;
  for (Eigen::Index t = 0; t < logits.rows(); ++t) {
    auto row = logits.row(t);
    LogSoftmaxInPlace(row);
    const int gold = ex.tgt_out[t];
    loss -= (1.0 - eps) * row(gold);
    if (eps > 0.0) loss -= eps / k * row.sum();
    if (grads) {
      row = row.array().exp();
      row.array() -= eps / k;
      row(gold) -= 1.0 - eps;
      row *= scale;
    }
  }
  if (!grads) return loss;

  ModelView<double> g = MakeView(params_.layout, grads->values.data());
  const Matrix dz =
      LinearBackward(logits, z, view_.output, &g.output);
  Matrix dy = LayerNormBackward(dz, view_.decoder_ln, dec_ln_cache,
                                &g.decoder_ln);
  Matrix dmemory = Matrix::Zero(memory.rows(), memory.cols());
  for (std::size_t l = view_.decoder.size(); l-- > 0;) {
    dy = DecoderLayerBackward(dy, view_.decoder[l], heads, dec_cache[l],
                              &g.decoder[l], &dmemory);
  }
  const double emb_scale = std::sqrt(static_cast<double>(c.d_model));
  const bool cr = c.conditioning == Conditioning::kCrEmbedding;
  for (std::size_t t = 0; t < ex.tgt_in.size(); ++t) {
    g.tgt_emb.row(ex.tgt_in[t]) += emb_scale * dy.row(t);
  }
  if (cr) g.bin_emb.row(ex.bin - 1) += dy.colwise().sum();

  Matrix dx = LayerNormBackward(dmemory, view_.encoder_ln, enc_ln_cache,
                                &g.encoder_ln);
  for (std::size_t l = view_.encoder.size(); l-- > 0;) {
    dx = EncoderLayerBackward(dx, view_.encoder[l], heads, enc_cache[l],
                              &g.encoder[l]);
  }
  for (std::size_t t = 0; t < ex.src.size(); ++t) {
    g.src_emb.row(ex.src[t]) += emb_scale * dx.row(t);
  }
  if (cr) g.bin_emb.row(ex.bin - 1) += dx.colwise().sum();
  return loss;
}

namespace {

std::size_t CountTokens(std::span<const Example> batch) {
  std::size_t tokens = 0;
  for (const Example& ex : batch) tokens += ex.tgt_out.size();
  return tokens;
}

std::pair<std::size_t, std::size_t> ShardRange(std::size_t n, int shard) {
  return {n * shard / kGradShards, n * (shard + 1) / kGradShards};
}

}  // namespace

LossResult LossAndGrads(const Transformer& model,
                        std::span<const Example> batch, Gradients* grads,
                        int jobs) {
  if (batch.empty()) throw EmptyBatch("loss requested for an empty batch");
  const std::size_t tokens = CountTokens(batch);
  const double scale = 1.0 / static_cast<double>(tokens);
  std::vector<std::optional<Gradients>> shard_grads(kGradShards);
  std::vector<double> shard_loss(kGradShards, 0.0);
  ParallelFor(kGradShards, jobs, [&](std::size_t s) {
    auto [begin, end] = ShardRange(batch.size(), static_cast<int>(s));
    if (begin == end) return;
    shard_grads[s].emplace(model.params().layout);
    for (std::size_t i = begin; i < end; ++i) {
      shard_loss[s] += model.ExampleLoss(batch[i], &*shard_grads[s], scale);
    }
  });
  grads->Zero();
  double loss = 0.0;
  for (int s = 0; s < kGradShards; ++s) {
    loss += shard_loss[s];
    if (!shard_grads[s]) continue;
    const FlatVector& src = shard_grads[s]->values;
    for (std::size_t i = 0; i < src.size(); ++i) grads->values[i] += src[i];
  }
  return {loss * scale, tokens};
}

LossResult BatchLoss(const Transformer& model, std::span<const Example> batch,
                     int jobs) {
  if (batch.empty()) throw EmptyBatch("loss requested for an empty batch");
  const std::size_t tokens = CountTokens(batch);
  std::vector<double> shard_loss(kGradShards, 0.0);
  ParallelFor(kGradShards, jobs, [&](std::size_t s) {
    auto [begin, end] = ShardRange(batch.size(), static_cast<int>(s));
    for (std::size_t i = begin; i < end; ++i) {
      shard_loss[s] += model.ExampleLoss(batch[i], nullptr, 1.0);
    }
  });
  double loss = 0.0;
  for (double l : shard_loss) loss += l;
  return {loss / static_cast<double>(tokens), tokens};
}

// ---------------------------------------------------------------------------
// Incremental decoding

DecoderState::DecoderState(const Transformer& model, std::span<const int> src,
                           int bin)
    : model_(&model), bin_(bin) {
  const ModelConfig& c = model.config();
  const Matrix memory = model.Encode(src, bin);
  const ModelView<const double> view = model.params().view();
  for (const auto& layer : view.decoder) {
    self_k_.emplace_back(c.max_len, c.d_model);
    self_v_.emplace_back(c.max_len, c.d_model);
    cross_k_.push_back(LinearForward(memory, layer.cross_attn.k));
    cross_v_.push_back(LinearForward(memory, layer.cross_attn.v));
  }
}

namespace {

// Single-query attention over the first `n` rows of keys/values.
Matrix AttendOne(const Matrix& q, const Matrix& keys, const Matrix& values,
                 Eigen::Index n, int heads) {
  const Eigen::Index d = q.cols();
  const Eigen::Index dh = d / heads;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
  Matrix out(1, d);
  for (int h = 0; h < heads; ++h) {
    Matrix s = (q.middleCols(h * dh, dh) *
                keys.topRows(n).middleCols(h * dh, dh).transpose()) *
               scale;
    SoftmaxRows(&s, false, 0);
    out.middleCols(h * dh, dh).noalias() =
        s * values.topRows(n).middleCols(h * dh, dh);
  }
  return out;
}

}  // namespace

Eigen::VectorXd DecoderState::Advance(int token) {
  const ModelConfig& c = model_->config();
  if (length_ >= c.max_len) {
    throw LengthError("decoder state exceeded max_len");
  }
  const ModelView<const double> view = model_->params().view();
  const int heads = c.heads;
  const int ids[1] = {token};
  Matrix x = model_->Embed(ids, bin_, Side::kDecoder);
  // Embed places the token at position 0; shift it to the current position.
  x -= model_->positional().row(0);
  x += model_->positional().row(length_);
  for (std::size_t l = 0; l < view.decoder.size(); ++l) {
    const auto& layer = view.decoder[l];
    const Matrix a = LayerNormForward(x, layer.ln1, nullptr);
    const Matrix q = LinearForward(a, layer.self_attn.q);
    self_k_[l].row(length_) = LinearForward(a, layer.self_attn.k);
    self_v_[l].row(length_) = LinearForward(a, layer.self_attn.v);
    x += LinearForward(AttendOne(q, self_k_[l], self_v_[l], length_ + 1, heads),
                       layer.self_attn.o);
    const Matrix b = LayerNormForward(x, layer.ln2, nullptr);
    const Matrix cq = LinearForward(b, layer.cross_attn.q);
    x += LinearForward(
        AttendOne(cq, cross_k_[l], cross_v_[l], cross_k_[l].rows(), heads),
        layer.cross_attn.o);
    const Matrix e = LayerNormForward(x, layer.ln3, nullptr);
    x += FeedForwardForward(e, layer.ffn, nullptr);
  }
  Matrix logits =
      LinearForward(LayerNormForward(x, view.decoder_ln, nullptr), view.output);
  auto row = logits.row(0);
  LogSoftmaxInPlace(row);
  ++length_;
  return row.transpose();
}

}  // namespace csc::model
