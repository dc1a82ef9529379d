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

#include "csc/cli/sweep.h"

#include <fmt/format.h>

#include <cstdlib>
#include <sstream>

#include "csc/error.h"
#include "csc/metrics.h"
#include "csc/model/transformer.h"
#include "csc/parallel.h"
#include "csc/synth.h"

namespace csc::cli {

std::vector<EvalItem> MakeEvalItems(const std::vector<TrainingPair>& pairs) {
  std::vector<EvalItem> items;
  items.reserve(pairs.size());
  for (const TrainingPair& p : pairs) {
    EvalItem item{p.source, p.target, {}, p.bin};
    item.full_reference = p.origin == Origin::kSynthetic
                              ? TranslateSource(p.source)
                              : p.target;
    items.push_back(std::move(item));
  }
  return items;
}

namespace {

using Outputs = std::vector<std::vector<std::string>>;

// bin <= 0 decodes every item under its own bin.
Outputs DecodeAll(const model::Transformer& model,
                  const std::vector<EvalItem>& items, int bin,
                  const SweepOptions& options) {
  const model::ModelConfig& config = model.config();
  Outputs outputs(items.size());
  ParallelFor(items.size(), options.jobs, [&](std::size_t i) {
    const int b = bin > 0 ? bin : items[i].bin;
    std::vector<int> src = model::SourceIds(items[i].source, b, config);
    outputs[i] = config.tgt_vocab.Decode(
        model::Decode(model, src, b, options.decode));
  });
  return outputs;
}

SweepRow Score(const std::vector<EvalItem>& items, const Outputs& outputs) {
  SweepRow row;
  const double n = static_cast<double>(items.size());
  Outputs full_refs;
  std::vector<std::size_t> pred_lens, ref_lens;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const EvalItem& item = items[i];
    const double ratio = static_cast<double>(outputs[i].size()) /
                         static_cast<double>(item.source.size());
    row.ratios.push_back(ratio);
    row.len_ratio += ratio / n;
    RougeScore full = RougeN(outputs[i], item.full_reference, 1);
    row.recall += full.recall / n;
    row.precision += full.precision / n;
    RougeScore own = RougeN(outputs[i], item.target, 1);
    row.f1 += own.f1 / n;
    row.tgt_recall += own.recall / n;
    row.tgt_precision += own.precision / n;
    full_refs.push_back(item.full_reference);
    pred_lens.push_back(outputs[i].size());
    ref_lens.push_back(item.target.size());
  }
  row.bleu = BleuCorpus(outputs, full_refs).score;
  row.length_variance = ComputeLengthVariance(pred_lens, ref_lens).value;
  return row;
}

}  // namespace

SweepReport RunSweep(const model::ModelParams& params,
                     const std::vector<EvalItem>& items,
                     const SweepOptions& options) {
  if (items.empty()) throw InvalidCount("sweep needs at least one item");
  const BinConfig& bins = params.config.bins;
  for (const EvalItem& item : items) {
    if (item.bin < 1 || item.bin > bins.num_bins()) {
      throw ConfigMismatch(fmt::format(
          "eval bin {} outside the model's {} bins", item.bin,
          bins.num_bins()));
    }
  }
  std::vector<int> requested = options.bins;
  if (requested.empty()) requested = ParseBinList("all", bins.num_bins());

  model::Transformer model(params);
  SweepReport report;
  for (int b : requested) {
    GetBinInterval(b, bins);  // validates
    SweepRow row = Score(items, DecodeAll(model, items, b, options));
    row.bin = b;
    row.gamma_mid = GetBinInterval(b, bins).midpoint();
    report.fixed.push_back(std::move(row));
  }
  report.oracle = Score(items, DecodeAll(model, items, 0, options));
  double mid = 0.0;
  for (const EvalItem& item : items) {
    mid += GetBinInterval(item.bin, bins).midpoint();
  }
  report.oracle.gamma_mid = mid / static_cast<double>(items.size());
  return report;
}

void WriteSweepCsv(std::ostream& out, const SweepReport& report) {
  out << "bin,gamma_mid,len_ratio,recall,precision,bleu,f1,tgt_recall,"
         "tgt_precision,length_variance\n";
  auto write = [&](const std::string& label, const SweepRow& r) {
    out << fmt::format("{},{:.4f},{:.6f},{:.6f},{:.6f},{:.4f},{:.6f},{:.6f},"
                       "{:.6f},{:.6f}\n",
                       label, r.gamma_mid, r.len_ratio, r.recall, r.precision,
                       r.bleu, r.f1, r.tgt_recall, r.tgt_precision,
                       r.length_variance);
  };
  for (const SweepRow& r : report.fixed) write(std::to_string(*r.bin), r);
  write("oracle", report.oracle);
}

std::vector<int> ParseBinList(const std::string& spec, int num_bins) {
  std::vector<int> bins;
  if (spec == "all") {
    for (int b = 1; b <= num_bins; ++b) bins.push_back(b);
    return bins;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const long b = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0' || b < 1 || b > num_bins) {
      throw InvalidBin(fmt::format("bad bin '{}' (model has {} bins)", item,
                                   num_bins));
    }
    bins.push_back(static_cast<int>(b));
  }
  if (bins.empty()) throw InvalidBin("empty bin list");
  return bins;
}

}  // namespace csc::cli
