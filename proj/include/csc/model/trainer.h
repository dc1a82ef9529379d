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

#ifndef CSC_MODEL_TRAINER_H_
#define CSC_MODEL_TRAINER_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "csc/corpus.h"
#include "csc/model/params.h"
#include "csc/model/transformer.h"

namespace csc::model {

struct TrainOptions {
  double lr = 3e-3;  // peak learning rate
  int warmup = 200;
  int batch_size = 64;
  int max_steps = 3000;
  int eval_interval = 200;
  int patience = 2;  // evaluations without improvement before stopping
  double valid_fraction = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.98;
  double adam_eps = 1e-9;
  double clip_norm = 0.0;  // 0 disables global-norm clipping
  int jobs = 1;
  std::uint64_t seed = 0;
};

// peak * min(step / warmup, sqrt(warmup / step)) for step >= 1.
double LearningRate(int step, double peak, int warmup);

struct MetricsRow {
  int step;
  std::string split;  // "train" or "valid"
  double loss;
  double lr;
};

struct TrainResult {
  ModelParams params;  // parameters at the best validation loss
  std::vector<MetricsRow> log;
  double best_valid_loss = 0.0;
  int best_step = 0;
  int steps_run = 0;
  bool early_stopped = false;
};

// Adam moments and step counter.
class AdamState {
 public:
  AdamState(std::size_t size, const TrainOptions& options);

  // Applies one update with learning rate `lr` and returns it.
  void Update(FlatVector* params, const FlatVector& grads,
              double lr);
  int step() const { return step_; }

 private:
  std::vector<double> m_, v_;
  double beta1_, beta2_, eps_;
  int step_ = 0;
};

// Fills the vocabularies of `base` from the tokens of `corpus`.
ModelConfig ConfigForCorpus(const std::vector<TrainingPair>& corpus,
                            ModelConfig base);

// Throws ConfigMismatch when any pair's bin disagrees with config.bins.
void CheckBins(const std::vector<TrainingPair>& corpus,
               const ModelConfig& config);

// Adam with inverse-sqrt warmup; validation every eval_interval steps and
// early stopping after `patience` evaluations without improvement.
// Deterministic for a fixed seed, independent of options.jobs.
TrainResult Train(const std::vector<TrainingPair>& train,
                  const std::vector<TrainingPair>& valid,
                  const ModelConfig& config, const TrainOptions& options);

// Holds out options.valid_fraction of `corpus` (seeded) for validation.
TrainResult Train(const std::vector<TrainingPair>& corpus,
                  const ModelConfig& config, const TrainOptions& options);

void WriteMetricsCsv(const std::string& path,
                     const std::vector<MetricsRow>& log);

}  // namespace csc::model

#endif  // CSC_MODEL_TRAINER_H_
