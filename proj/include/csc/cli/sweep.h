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

#ifndef CSC_CLI_SWEEP_H_
#define CSC_CLI_SWEEP_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "csc/corpus.h"
#include "csc/model/decoder.h"
#include "csc/model/params.h"

namespace csc::cli {

// One evaluation source with its own target and its full (gamma = 1)
// reference.
struct EvalItem {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<std::string> full_reference;
  int bin = 1;
};

// Full references come from TranslateSource for synthetic records and from
// the record's own target otherwise.
std::vector<EvalItem> MakeEvalItems(const std::vector<TrainingPair>& pairs);

struct SweepRow {
  std::optional<int> bin;  // nullopt for the oracle row
  double gamma_mid = 0.0;
  double len_ratio = 0.0;
  double recall = 0.0;     // unigram, against the full reference
  double precision = 0.0;  // unigram, against the full reference
  double bleu = 0.0;       // corpus BLEU against the full reference
  double f1 = 0.0;         // unigram, against each item's own target
  double tgt_recall = 0.0;
  double tgt_precision = 0.0;
  double length_variance = 0.0;  // against the own-target lengths
  std::vector<double> ratios;    // per item, |output| / |source|
};

struct SweepReport {
  std::vector<SweepRow> fixed;
  SweepRow oracle;
};

struct SweepOptions {
  std::vector<int> bins;  // empty means every bin
  model::DecodeOptions decode;
  int jobs = 1;
};

// Decodes every item once per requested bin, plus once under its own bin.
SweepReport RunSweep(const model::ModelParams& params,
                     const std::vector<EvalItem>& items,
                     const SweepOptions& options);

// Header `bin,gamma_mid,len_ratio,recall,precision,bleu,f1,tgt_recall,
// tgt_precision,length_variance`; the oracle row has bin "oracle".
void WriteSweepCsv(std::ostream& out, const SweepReport& report);

// "all" or a comma list of bin indices.
std::vector<int> ParseBinList(const std::string& spec, int num_bins);

}  // namespace csc::cli

#endif  // CSC_CLI_SWEEP_H_
