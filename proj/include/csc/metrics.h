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

#ifndef CSC_METRICS_H_
#define CSC_METRICS_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace csc {

using TokenSpan = std::span<const std::string>;

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct BleuScore {
  double score = 0.0;  // 0..100
  std::array<double, 4> ngram_precisions{};
  double brevity_penalty = 0.0;
  std::size_t candidate_len = 0;
  std::size_t reference_len = 0;
};

struct LengthVariance {
  double value = 0.0;
  std::size_t n_samples = 0;
};

// Plain F1 (beta = 1); 0 when precision + recall is 0.
double F1(double precision, double recall);

// Clipped n-gram overlap for n in {1, 2}. Throws EmptyReference.
RougeScore RougeN(TokenSpan candidate, TokenSpan reference, int n);

// Longest-common-subsequence ROUGE over whole sequences.
RougeScore RougeL(TokenSpan candidate, TokenSpan reference);

// Corpus BLEU-4 with clipped counts and brevity penalty. A zero match count
// over a positive n-gram total is smoothed to 1e-9 matches.
BleuScore BleuCorpus(const std::vector<std::vector<std::string>>& candidates,
                     const std::vector<std::vector<std::string>>& references);

inline constexpr double kBleuEpsilon = 1e-9;

// Mean squared difference of predicted and reference lengths.
LengthVariance ComputeLengthVariance(std::span<const std::size_t> pred_lens,
                                     std::span<const std::size_t> ref_lens);

}  // namespace csc

#endif  // CSC_METRICS_H_
