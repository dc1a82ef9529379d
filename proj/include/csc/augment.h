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

#ifndef CSC_AUGMENT_H_
#define CSC_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "csc/corpus.h"
#include "csc/crbin.h"
#include "csc/document.h"
#include "csc/rng.h"

namespace csc {

enum class SalienceVariant { kRouge1, kRouge2, kRougeL };

SalienceVariant ParseSalienceVariant(std::string_view name);
const char* SalienceVariantName(SalienceVariant variant);

struct SalienceEntry {
  std::size_t position;        // position in doc.sentences()
  std::size_t sentence_index;  // original sentence index
  double salience;
};

struct SalienceTable {
  std::vector<SalienceEntry> entries;  // in document order
  SalienceVariant variant = SalienceVariant::kRouge1;

  // Positions ordered from least to most salient. Among equal scores the
  // later sentence comes first, so earlier sentences are kept longer.
  std::vector<std::size_t> DeletionOrder() const;
  std::size_t LeastSalient() const { return DeletionOrder().front(); }
};

// ROUGE F1 of every sentence against the monolingual summary.
SalienceTable SentenceSalience(const Document& doc,
                               const Document& mono_summary,
                               SalienceVariant variant);

struct Schedule {
  double base_gamma = 0.0;
  std::vector<double> targets;  // strictly ascending, each <= 1
};

inline constexpr int kScheduleSteps = 10;
inline constexpr double kScheduleStride = 0.1;

// {gamma + (i + u_i) * 0.1 <= 1 : i = 1..10} with u_i ~ U(0, 1).
Schedule GammaSchedule(double gamma, Rng& rng);
// Same formula with caller-provided u_i values.
Schedule GammaScheduleFromDraws(double gamma, std::span<const double> draws);

// Prunes the source document until its compression rate against the
// cross-lingual summary reaches gamma_hat: whole least-salient sentences
// first, then random words of the least-salient survivor that do not occur
// in the monolingual summary. When that pool runs dry, the remaining words
// of the sentence are used, then the next-least-salient sentence. Every
// sentence keeps at least one token.
//
// Throws InvalidGamma unless CR(sample) < gamma_hat <= 1, and
// AugmentInfeasible when one token per surviving sentence is still too
// long.
AugmentedSample AugmentToRate(const ClsSample& sample, double gamma_hat,
                              Rng& rng, SalienceVariant variant);

struct AugmentConfig {
  std::uint64_t seed = 0;
  SalienceVariant variant = SalienceVariant::kRouge1;
  // When set, these targets replace the per-sample random schedule; only
  // values in (gamma, 1] are used for each sample.
  std::optional<std::vector<double>> fixed_targets;
  int jobs = 1;
  BinConfig histogram_bins{0.1};
  std::size_t chunk_size = 512;
};

struct AugmentStats {
  std::size_t samples = 0;
  std::size_t emitted = 0;
  std::size_t infeasible = 0;
  std::vector<std::size_t> histogram;  // over gamma_actual, clipped
};

using AugmentedSink = std::function<void(const AugmentedSample&)>;

// Augments every sample of `reader`. Sample s uses its own random stream
// seeded from (config.seed, s.id), so the output does not depend on the
// number of workers. Records reach `sink` in input order, and per sample
// in ascending target order.
AugmentStats AugmentCorpus(CorpusReader& reader, const AugmentConfig& config,
                           const AugmentedSink& sink);

// Schedule and augmentation results for one sample.
std::vector<AugmentedSample> AugmentSample(const ClsSample& sample,
                                           const AugmentConfig& config,
                                           std::size_t* infeasible);

}  // namespace csc

#endif  // CSC_AUGMENT_H_
