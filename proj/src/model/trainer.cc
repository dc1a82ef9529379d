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

#include "csc/model/trainer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <utility>

#include "csc/error.h"
#include "csc/rng.h"

namespace csc::model {

double LearningRate(int step, double peak, int warmup) {
  if (step < 1) return 0.0;
  if (warmup < 1) return peak / std::sqrt(static_cast<double>(step));
  const double s = static_cast<double>(step);
  const double w = static_cast<double>(warmup);
  return peak * std::min(s / w, std::sqrt(w / s));
}

AdamState::AdamState(std::size_t size, const TrainOptions& options)
    : m_(size, 0.0),
      v_(size, 0.0),
      beta1_(options.beta1),
      beta2_(options.beta2),
      eps_(options.adam_eps) {}

void AdamState::Update(FlatVector* params,
                       const FlatVector& grads, double lr) {
  ++step_;
  const double c1 = 1.0 - std::pow(beta1_, step_);
  const double c2 = 1.0 - std::pow(beta2_, step_);
  double* p = params->data();
  for (std::size_t i = 0; i < m_.size(); ++i) {
    const double g = grads[i];
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * g;
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * g * g;
    p[i] -= lr * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + eps_);
  }
}

ModelConfig ConfigForCorpus(const std::vector<TrainingPair>& corpus,
                            ModelConfig base) {
  std::vector<std::string> src, tgt;
  std::size_t longest_src = 0, longest_tgt = 0;
  for (const TrainingPair& p : corpus) {
    src.insert(src.end(), p.source.begin(), p.source.end());
    tgt.insert(tgt.end(), p.target.begin(), p.target.end());
    longest_src = std::max(longest_src, p.source.size());
    longest_tgt = std::max(longest_tgt, p.target.size());
  }
  base.src_vocab = Vocab(base.bins.num_bins(), std::move(src));
  base.tgt_vocab = Vocab(base.bins.num_bins(), std::move(tgt));
  const std::size_t needed = std::max(longest_src + 1, longest_tgt + 1);
  if (static_cast<std::size_t>(base.max_len) < needed) {
    base.max_len = static_cast<int>(needed);
  }
  base.Validate();
  return base;
}

void CheckBins(const std::vector<TrainingPair>& corpus,
               const ModelConfig& config) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const TrainingPair& p = corpus[i];
    if (p.bin < 1 || p.bin > config.bins.num_bins() ||
        p.bin != QuantizeClipped(p.gamma, config.bins)) {
      throw ConfigMismatch("record " + std::to_string(i + 1) + " has bin " +
                           std::to_string(p.bin) +
                           " which disagrees with delta " +
                           FormatDelta(config.bins.delta()));
    }
  }
}

namespace {

std::vector<Example> MakeExamples(const std::vector<TrainingPair>& pairs,
                                  const ModelConfig& config) {
  std::vector<Example> out;
  out.reserve(pairs.size());
  for (const TrainingPair& p : pairs) out.push_back(MakeExample(p, config));
  return out;
}

double GlobalNorm(const FlatVector& g) {
  double sum = 0.0;
  for (double v : g) sum += v * v;
  return std::sqrt(sum);
}

}  // namespace

TrainResult Train(const std::vector<TrainingPair>& train,
                  const std::vector<TrainingPair>& valid,
                  const ModelConfig& config, const TrainOptions& options) {
  if (train.empty()) throw EmptyBatch("training corpus is empty");
  if (valid.empty()) throw EmptyBatch("validation set is empty");
  if (options.batch_size < 1 || options.max_steps < 1 ||
      options.eval_interval < 1) {
    throw InputError("batch size, step budget and eval interval must be >= 1");
  }
  CheckBins(train, config);
  CheckBins(valid, config);
  const std::vector<Example> train_ex = MakeExamples(train, config);
  const std::vector<Example> valid_ex = MakeExamples(valid, config);

  ModelParams params(config);
  InitializeParams(&params, DeriveSeed(options.seed, 0x1417));
  const Transformer model(params);
  Gradients grads(params.layout);
  AdamState adam(params.values.size(), options);
  Rng shuffle_rng(DeriveSeed(options.seed, 0x5a5a));

  TrainResult result{params, {}, 0.0, 0, 0, false};
  bool have_best = false;
  int bad_evals = 0;
  double train_loss_sum = 0.0;
  int train_loss_count = 0;

  std::vector<std::size_t> order(train_ex.size());
  std::iota(order.begin(), order.end(), 0);
  std::size_t cursor = order.size();
  std::vector<Example> batch;

  for (int step = 1; step <= options.max_steps; ++step) {
    batch.clear();
    while (static_cast<int>(batch.size()) < options.batch_size) {
      if (cursor == order.size()) {
        for (std::size_t i = order.size(); i > 1; --i) {
          std::swap(order[i - 1], order[shuffle_rng.UniformInt(i)]);
        }
        cursor = 0;
      }
      batch.push_back(train_ex[order[cursor++]]);
      if (static_cast<int>(batch.size()) == static_cast<int>(order.size())) {
        break;
      }
    }
    const LossResult loss = LossAndGrads(model, batch, &grads, options.jobs);
    if (options.clip_norm > 0.0) {
      const double norm = GlobalNorm(grads.values);
      if (norm > options.clip_norm) {
        for (double& g : grads.values) g *= options.clip_norm / norm;
      }
    }
    const double lr = LearningRate(step, options.lr, options.warmup);
    adam.Update(&params.values, grads.values, lr);
    train_loss_sum += loss.loss;
    ++train_loss_count;
    result.steps_run = step;

    if (step % options.eval_interval == 0 || step == options.max_steps) {
      result.log.push_back(
          {step, "train", train_loss_sum / train_loss_count, lr});
      train_loss_sum = 0.0;
      train_loss_count = 0;
      const double valid_loss = BatchLoss(model, valid_ex, options.jobs).loss;
      result.log.push_back({step, "valid", valid_loss, lr});
      if (!std::isfinite(valid_loss)) {
        throw Error("validation loss diverged at step " +
                    std::to_string(step));
      }
      if (!have_best || valid_loss < result.best_valid_loss) {
        have_best = true;
        result.best_valid_loss = valid_loss;
        result.best_step = step;
        result.params.values = params.values;
        bad_evals = 0;
      } else if (++bad_evals >= options.patience) {
        result.early_stopped = true;
        break;
      }
    }
  }
  return result;
}

TrainResult Train(const std::vector<TrainingPair>& corpus,
                  const ModelConfig& config, const TrainOptions& options) {
  if (corpus.size() < 2) throw EmptyBatch("need at least two training pairs");
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(DeriveSeed(options.seed, 0x7a11d));
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.UniformInt(i)]);
  }
  std::size_t n_valid = static_cast<std::size_t>(
      std::ceil(options.valid_fraction * static_cast<double>(corpus.size())));
  n_valid = std::clamp<std::size_t>(n_valid, 1, corpus.size() - 1);
  std::vector<std::size_t> valid_idx(order.begin(), order.begin() + n_valid);
  std::vector<std::size_t> train_idx(order.begin() + n_valid, order.end());
  std::sort(valid_idx.begin(), valid_idx.end());
  std::sort(train_idx.begin(), train_idx.end());
  std::vector<TrainingPair> train, valid;
  for (std::size_t i : train_idx) train.push_back(corpus[i]);
  for (std::size_t i : valid_idx) valid.push_back(corpus[i]);
  return Train(train, valid, config, options);
}

void WriteMetricsCsv(const std::string& path,
                     const std::vector<MetricsRow>& log) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.precision(17);
  out << "step,split,loss,lr\n";
  for (const MetricsRow& r : log) {
    out << r.step << ',' << r.split << ',' << r.loss << ',' << r.lr << '\n';
  }
  if (!out) throw IoError("write failure on " + path);
}

}  // namespace csc::model
