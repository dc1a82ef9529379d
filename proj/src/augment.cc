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

#include "csc/augment.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "csc/error.h"
#include "csc/metrics.h"
#include "csc/parallel.h"

namespace csc {

SalienceVariant ParseSalienceVariant(std::string_view name) {
  if (name == "rouge1") return SalienceVariant::kRouge1;
  if (name == "rouge2") return SalienceVariant::kRouge2;
  if (name == "rougeL" || name == "rougel") return SalienceVariant::kRougeL;
  throw InputError("unknown salience variant: " + std::string(name));
}

const char* SalienceVariantName(SalienceVariant variant) {
  switch (variant) {
    case SalienceVariant::kRouge1:
      return "rouge1";
    case SalienceVariant::kRouge2:
      return "rouge2";
    case SalienceVariant::kRougeL:
      return "rougeL";
  }
  return "?";
}

std::vector<std::size_t> SalienceTable::DeletionOrder() const {
  if (entries.empty()) throw EmptyDocument("no sentences to rank");
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (entries[a].salience != entries[b].salience) {
      return entries[a].salience < entries[b].salience;
    }
    return entries[a].sentence_index > entries[b].sentence_index;
  });
  for (std::size_t& i : order) i = entries[i].position;
  return order;
}

SalienceTable SentenceSalience(const Document& doc,
                               const Document& mono_summary,
                               SalienceVariant variant) {
  if (doc.sentence_count() == 0) throw EmptyDocument("document is empty");
  const std::vector<std::string> reference = mono_summary.Surfaces();
  SalienceTable table;
  table.variant = variant;
  table.entries.reserve(doc.sentence_count());
  for (std::size_t pos = 0; pos < doc.sentence_count(); ++pos) {
    const Sentence& s = doc.sentences()[pos];
    const std::vector<std::string> candidate = Surfaces(s.tokens);
    RougeScore score;
    switch (variant) {
      case SalienceVariant::kRouge1:
        score = RougeN(candidate, reference, 1);
        break;
      case SalienceVariant::kRouge2:
        score = RougeN(candidate, reference, 2);
        break;
      case SalienceVariant::kRougeL:
        score = RougeL(candidate, reference);
        break;
    }
    table.entries.push_back({pos, s.index, score.f1});
  }
  return table;
}

Schedule GammaScheduleFromDraws(double gamma, std::span<const double> draws) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidGamma("schedule base rate must lie in (0, 1), got " +
                       std::to_string(gamma));
  }
  if (draws.size() != kScheduleSteps) {
    throw InputError("schedule needs exactly 10 uniform draws");
  }
  Schedule schedule;
  schedule.base_gamma = gamma;
  for (int i = 1; i <= kScheduleSteps; ++i) {
    const double target = gamma + (i + draws[i - 1]) * kScheduleStride;
    if (target <= 1.0) schedule.targets.push_back(target);
  }
  return schedule;
}

Schedule GammaSchedule(double gamma, Rng& rng) {
  std::vector<double> draws(kScheduleSteps);
  for (double& u : draws) u = rng.UniformOpen();
  return GammaScheduleFromDraws(gamma, draws);
}

namespace {

bool Reaches(std::size_t summary_tokens, std::size_t doc_tokens,
             double target) {
  return CompressionRate(doc_tokens, summary_tokens) >= target;
}

// Largest document length whose compression rate still reaches `target`.
std::size_t MaxDocTokens(std::size_t summary_tokens, double target) {
  auto n = static_cast<std::size_t>(static_cast<double>(summary_tokens) /
                                    target);
  while (n > 0 && !Reaches(summary_tokens, n, target)) --n;
  while (Reaches(summary_tokens, n + 1, target)) ++n;
  return n;
}

}  // namespace

AugmentedSample AugmentToRate(const ClsSample& sample, double gamma_hat,
                              Rng& rng, SalienceVariant variant) {
  const std::size_t m = sample.cross_summary.token_count();
  const double gamma = CompressionRate(sample.doc_src, sample.cross_summary);
  if (!(gamma_hat > gamma) || gamma_hat > 1.0) {
    throw InvalidGamma("target rate " + std::to_string(gamma_hat) +
                       " must lie in (" + std::to_string(gamma) + ", 1]");
  }

  AugmentedSample out;
  out.base_id = sample.id;
  out.mono_summary = sample.mono_summary;
  out.cross_summary = sample.cross_summary;
  out.gamma_target = gamma_hat;
  Document doc = sample.doc_src;

  // Sentence phase: drop the least salient sentence while the result stays
  // below the target; the sentence whose removal would reach it is kept.
  SalienceTable table = SentenceSalience(doc, sample.mono_summary, variant);
  std::size_t k = table.LeastSalient();
  while (doc.sentence_count() > 1 &&
         !Reaches(m, doc.token_count() - doc.sentences()[k].tokens.size(),
                  gamma_hat)) {
    out.deleted_sentence_indices.push_back(doc.sentences()[k].index);
    doc.RemoveSentence(k);
    table = SentenceSalience(doc, sample.mono_summary, variant);
    k = table.LeastSalient();
  }

  if (doc.sentence_count() > MaxDocTokens(m, gamma_hat)) {
    throw AugmentInfeasible("sample " + sample.id + ": cannot reach rate " +
                            std::to_string(gamma_hat));
  }

  // Word phase.
  std::unordered_set<std::string> in_summary;
  for (const std::string& w : sample.mono_summary.Surfaces()) {
    in_summary.insert(w);
  }
  const std::vector<std::size_t> order = table.DeletionOrder();
  std::size_t cursor = 0;
  std::vector<std::size_t> pool;
  while (!Reaches(m, doc.token_count(), gamma_hat)) {
    const std::size_t pos = order[cursor];
    const std::vector<Token>& tokens = doc.sentences()[pos].tokens;
    pool.clear();
    if (tokens.size() > 1) {
      for (std::size_t t = 0; t < tokens.size(); ++t) {
        if (!in_summary.count(tokens[t].surface)) pool.push_back(t);
      }
      if (pool.empty()) {
        pool.resize(tokens.size());
        std::iota(pool.begin(), pool.end(), 0);
      }
    }
    if (pool.empty()) {
      ++cursor;  // sentence is down to one token; move on
      continue;
    }
    doc.RemoveToken(pos, pool[rng.UniformInt(pool.size())]);
    ++out.deleted_word_count;
  }

  out.gamma_actual = CompressionRate(doc, sample.cross_summary);
  out.doc = std::move(doc);
  return out;
}

std::vector<AugmentedSample> AugmentSample(const ClsSample& sample,
                                           const AugmentConfig& config,
                                           std::size_t* infeasible) {
  const std::uint64_t sample_seed = DeriveSeed(config.seed, sample.id);
  const double gamma = CompressionRate(sample.doc_src, sample.cross_summary);
  std::vector<double> targets;
  if (config.fixed_targets) {
    for (double t : *config.fixed_targets) {
      if (t > gamma && t <= 1.0) targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
  } else if (gamma < 1.0) {
    Rng rng(sample_seed);
    targets = GammaSchedule(gamma, rng).targets;
  }
  std::vector<AugmentedSample> out;
  out.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    Rng rng(DeriveSeed(sample_seed, i + 1));
    try {
      out.push_back(AugmentToRate(sample, targets[i], rng, config.variant));
    } catch (const AugmentInfeasible&) {
      ++*infeasible;
    }
  }
  return out;
}

AugmentStats AugmentCorpus(CorpusReader& reader, const AugmentConfig& config,
                           const AugmentedSink& sink) {
  AugmentStats stats;
  stats.histogram.assign(config.histogram_bins.num_bins(), 0);
  std::vector<ClsSample> chunk;
  std::vector<std::vector<AugmentedSample>> results;
  std::vector<std::size_t> infeasible;
  const std::size_t chunk_size = std::max<std::size_t>(1, config.chunk_size);

  auto flush = [&] {
    results.assign(chunk.size(), {});
    infeasible.assign(chunk.size(), 0);
    ParallelFor(chunk.size(), config.jobs, [&](std::size_t i) {
      try {
        results[i] = AugmentSample(chunk[i], config, &infeasible[i]);
      } catch (const std::exception& e) {
        throw InputError("sample " + chunk[i].id + ": " + e.what());
      }
    });
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      stats.infeasible += infeasible[i];
      for (const AugmentedSample& a : results[i]) {
        ++stats.histogram[QuantizeClipped(a.gamma_actual,
                                          config.histogram_bins) - 1];
        ++stats.emitted;
        sink(a);
      }
    }
    chunk.clear();
  };

  while (std::optional<ClsSample> sample = reader.Next()) {
    ++stats.samples;
    chunk.push_back(std::move(*sample));
    if (chunk.size() == chunk_size) flush();
  }
  flush();
  return stats;
}

}  // namespace csc
