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

#ifndef CSC_SYNTH_H_
#define CSC_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "csc/corpus.h"
#include "csc/crbin.h"
#include "csc/rng.h"

namespace csc {

// Salience-translation task: the target translates (a_i -> b_i) the
// ceil(gamma * n) source tokens with the highest ids, kept in source order.
// Equal ids prefer the earlier position.
struct SynthConfig {
  int vocab_size = 16;
  int len_min = 20;
  int len_max = 40;
  std::uint64_t seed = 0;

  void Validate() const;
};

struct SynthSample {
  std::vector<int> source_ids;  // 1-based ids
  std::vector<int> target_ids;
  double gamma = 1.0;
};

std::string SourceToken(int id);  // "a<id>"
std::string TargetToken(int id);  // "b<id>"

// Target ids for `source_ids` at rate gamma in (0, 1].
std::vector<int> SelectSalient(const std::vector<int>& source_ids,
                               double gamma);
std::size_t TargetLength(std::size_t source_len, double gamma);

SynthSample GenerateSample(Rng& rng, const SynthConfig& config);
// Sample number `index` of the corpus seeded by config.seed.
SynthSample GenerateIndexedSample(std::size_t index, const SynthConfig& config);

// Record carries the drawn gamma and its bin under `bins`.
TrainingPair ToTrainingPair(const SynthSample& sample, const BinConfig& bins);

// Full (gamma = 1) translation of a synthetic source: a_i -> b_i.
std::vector<std::string> TranslateSource(
    const std::vector<std::string>& source);

std::vector<TrainingPair> GenerateCorpus(const SynthConfig& config,
                                         std::size_t count,
                                         const BinConfig& bins, int jobs = 1);

// Throws InvalidCount for count == 0 and IoError on write failure.
void WriteSynthCorpus(const SynthConfig& config, std::size_t count,
                      const BinConfig& bins, const std::string& path,
                      int jobs = 1);

}  // namespace csc

#endif  // CSC_SYNTH_H_
