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

#include "csc/metrics.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "csc/error.h"

namespace csc {
namespace {

using NgramCounts = std::unordered_map<std::string, int>;

// N-grams keyed by their tokens joined with a unit separator.
NgramCounts CountNgrams(TokenSpan tokens, int n, std::size_t* total) {
  NgramCounts counts;
  *total = 0;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) {
      key.push_back('\x1f');
      key += tokens[i + j];
    }
    ++counts[key];
    ++*total;
  }
  return counts;
}

std::size_t ClippedOverlap(const NgramCounts& cand, const NgramCounts& ref) {
  std::size_t overlap = 0;
  for (const auto& [gram, count] : cand) {
    auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double F1(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

RougeScore RougeN(TokenSpan candidate, TokenSpan reference, int n) {
  if (reference.empty()) throw EmptyReference("ROUGE reference is empty");
  if (n < 1) throw InputError("ROUGE-N requires n >= 1");
  std::size_t cand_total = 0;
  std::size_t ref_total = 0;
  const NgramCounts cand = CountNgrams(candidate, n, &cand_total);
  const NgramCounts ref = CountNgrams(reference, n, &ref_total);
  const std::size_t overlap = ClippedOverlap(cand, ref);
  RougeScore s;
  s.precision = Ratio(overlap, cand_total);
  s.recall = Ratio(overlap, ref_total);
  s.f1 = F1(s.precision, s.recall);
  return s;
}

RougeScore RougeL(TokenSpan candidate, TokenSpan reference) {
  if (reference.empty()) throw EmptyReference("ROUGE reference is empty");
  const std::size_t m = reference.size();
  std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
  for (const std::string& c : candidate) {
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = c == reference[j - 1] ? prev[j - 1] + 1
                                     : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  const std::size_t lcs = prev[m];
  RougeScore s;
  s.precision = Ratio(lcs, candidate.size());
  s.recall = Ratio(lcs, m);
  s.f1 = F1(s.precision, s.recall);
  return s;
}

BleuScore BleuCorpus(const std::vector<std::vector<std::string>>& candidates,
                     const std::vector<std::vector<std::string>>& references) {
  if (candidates.size() != references.size() || candidates.empty()) {
    throw PairCountMismatch("BLEU needs equally many candidates and "
                            "references, and at least one pair");
  }
  std::array<std::size_t, 4> matches{};
  std::array<std::size_t, 4> totals{};
  BleuScore out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.candidate_len += candidates[i].size();
    out.reference_len += references[i].size();
    for (int n = 1; n <= 4; ++n) {
      std::size_t cand_total = 0;
      std::size_t ref_total = 0;
      const NgramCounts cand = CountNgrams(candidates[i], n, &cand_total);
      const NgramCounts ref = CountNgrams(references[i], n, &ref_total);
      matches[n - 1] += ClippedOverlap(cand, ref);
      totals[n - 1] += cand_total;
    }
  }
  double log_sum = 0.0;
  bool zero = false;
  for (int n = 0; n < 4; ++n) {
    double p = 0.0;
    if (totals[n] > 0) {
      const double num =
          matches[n] > 0 ? static_cast<double>(matches[n]) : kBleuEpsilon;
      p = num / static_cast<double>(totals[n]);
    }
    out.ngram_precisions[n] = p;
    if (p > 0.0) {
      log_sum += std::log(p);
    } else {
      zero = true;
    }
  }
  if (out.candidate_len == 0) {
    out.brevity_penalty = 0.0;
  } else if (out.candidate_len >= out.reference_len) {
    out.brevity_penalty = 1.0;
  } else {
    out.brevity_penalty =
        std::exp(1.0 - static_cast<double>(out.reference_len) /
                           static_cast<double>(out.candidate_len));
  }
  out.score = zero ? 0.0
                   : 100.0 * out.brevity_penalty * std::exp(0.25 * log_sum);
  return out;
}

LengthVariance ComputeLengthVariance(std::span<const std::size_t> pred_lens,
                                     std::span<const std::size_t> ref_lens) {
  if (pred_lens.size() != ref_lens.size() || pred_lens.empty()) {
    throw PairCountMismatch("length variance needs equal, non-zero counts");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < pred_lens.size(); ++i) {
    const double d = static_cast<double>(pred_lens[i]) -
                     static_cast<double>(ref_lens[i]);
    sum += d * d;
  }
  return {sum / static_cast<double>(pred_lens.size()), pred_lens.size()};
}

}  // namespace csc
