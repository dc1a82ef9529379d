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

#include "csc/synth.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "csc/error.h"
#include "csc/parallel.h"

namespace csc {

void SynthConfig::Validate() const {
  if (vocab_size < 4) throw InputError("synthetic vocab size must be >= 4");
  if (len_min < 1 || len_min > len_max) {
    throw InputError("synthetic lengths need 1 <= len_min <= len_max");
  }
}

std::string SourceToken(int id) { return "a" + std::to_string(id); }
std::string TargetToken(int id) { return "b" + std::to_string(id); }

std::size_t TargetLength(std::size_t source_len, double gamma) {
  const auto m = static_cast<std::size_t>(
      std::ceil(gamma * static_cast<double>(source_len)));
  return std::clamp<std::size_t>(m, 1, source_len);
}

std::vector<int> SelectSalient(const std::vector<int>& source_ids,
                               double gamma) {
  const std::size_t m = TargetLength(source_ids.size(), gamma);
  std::vector<std::size_t> order(source_ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return source_ids[a] > source_ids[b];
                   });
  order.resize(m);
  std::sort(order.begin(), order.end());
  std::vector<int> target;
  target.reserve(m);
  for (std::size_t pos : order) target.push_back(source_ids[pos]);
  return target;
}

SynthSample GenerateSample(Rng& rng, const SynthConfig& config) {
  const auto span = static_cast<std::uint64_t>(config.len_max -
                                               config.len_min + 1);
  const std::size_t n =
      config.len_min + static_cast<std::size_t>(rng.UniformInt(span));
  SynthSample sample;
  sample.source_ids.resize(n);
  for (int& id : sample.source_ids) {
    id = 1 + static_cast<int>(rng.UniformInt(config.vocab_size));
  }
  sample.gamma = 1.0 - rng.Uniform();  // (0, 1]
  sample.target_ids = SelectSalient(sample.source_ids, sample.gamma);
  return sample;
}

SynthSample GenerateIndexedSample(std::size_t index,
                                  const SynthConfig& config) {
  Rng rng(DeriveSeed(config.seed, static_cast<std::uint64_t>(index)));
  return GenerateSample(rng, config);
}

TrainingPair ToTrainingPair(const SynthSample& sample, const BinConfig& bins) {
  TrainingPair pair;
  pair.source.reserve(sample.source_ids.size());
  for (int id : sample.source_ids) pair.source.push_back(SourceToken(id));
  pair.target.reserve(sample.target_ids.size());
  for (int id : sample.target_ids) pair.target.push_back(TargetToken(id));
  pair.gamma = sample.gamma;
  pair.bin = Quantize(sample.gamma, bins);
  pair.origin = Origin::kSynthetic;
  return pair;
}

std::vector<std::string> TranslateSource(
    const std::vector<std::string>& source) {
  std::vector<std::string> out;
  out.reserve(source.size());
  for (const std::string& token : source) {
    if (token.size() < 2 || token[0] != 'a') {
      throw InputError("not a synthetic source token: " + token);
    }
    out.push_back("b" + token.substr(1));
  }
  return out;
}

std::vector<TrainingPair> GenerateCorpus(const SynthConfig& config,
                                         std::size_t count,
                                         const BinConfig& bins, int jobs) {
  config.Validate();
  if (count == 0) throw InvalidCount("sample count must be positive");
  std::vector<TrainingPair> pairs(count);
  ParallelFor(count, jobs, [&](std::size_t i) {
    pairs[i] = ToTrainingPair(GenerateIndexedSample(i, config), bins);
  });
  return pairs;
}

void WriteSynthCorpus(const SynthConfig& config, std::size_t count,
                      const BinConfig& bins, const std::string& path,
                      int jobs) {
  WriteTrainingPairs(path, GenerateCorpus(config, count, bins, jobs));
}

}  // namespace csc
