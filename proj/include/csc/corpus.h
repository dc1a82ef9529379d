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

#ifndef CSC_CORPUS_H_
#define CSC_CORPUS_H_

#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csc/crbin.h"
#include "csc/document.h"
#include "csc/tokenizer.h"
#include "json.hpp"

namespace csc {

enum class Origin { kCls, kAugmented, kMt, kSynthetic };

const char* OriginName(Origin origin);
Origin ParseOrigin(std::string_view name);

// Unified training record for CLS, augmented CLS, MT and synthetic pairs.
struct TrainingPair {
  std::vector<std::string> source;
  std::vector<std::string> target;
  double gamma = 1.0;
  int bin = 1;
  Origin origin = Origin::kCls;

  friend bool operator==(const TrainingPair&, const TrainingPair&) = default;
};

// Builds a pair whose gamma is the clipped token ratio and whose bin is
// its quantization under `bins`.
TrainingPair MakeTrainingPair(std::vector<std::string> source,
                              std::vector<std::string> target, Origin origin,
                              const BinConfig& bins);

struct AugmentedSample {
  std::string base_id;
  Document doc;
  Document mono_summary;
  Document cross_summary;
  double gamma_target = 0.0;
  double gamma_actual = 0.0;
  std::vector<std::size_t> deleted_sentence_indices;
  std::size_t deleted_word_count = 0;

  friend bool operator==(const AugmentedSample&,
                         const AugmentedSample&) = default;
};

// Line-delimited JSON input with line tracking. Blank lines are skipped.
class JsonlReader {
 public:
  explicit JsonlReader(const std::string& path);

  // Next parsed record, or nullopt at end of file. Throws SchemaError on
  // malformed JSON or a non-object line.
  std::optional<nlohmann::json> Next();
  std::size_t line() const { return line_; }

 private:
  std::ifstream in_;
  std::size_t line_ = 0;
};

class JsonlWriter {
 public:
  explicit JsonlWriter(const std::string& path);
  void Write(const nlohmann::ordered_json& record);
  void Flush();

 private:
  std::ofstream out_;
  std::string path_;
};

// Reads CLS records: `id`, `doc` (array of sentence strings, or one string
// that is segmented), `mono_summary`, `cross_summary`. Augmented records
// parse too; their extra fields are ignored.
class CorpusReader {
 public:
  CorpusReader(const std::string& path, Tokenizer tokenizer);
  std::optional<ClsSample> Next();
  std::size_t line() const { return reader_.line(); }

 private:
  JsonlReader reader_;
  Tokenizer tokenizer_;
};

class CorpusWriter {
 public:
  explicit CorpusWriter(const std::string& path) : writer_(path) {}
  void Write(const ClsSample& sample) { writer_.Write(ToJson(sample)); }
  void Flush() { writer_.Flush(); }

  static nlohmann::ordered_json ToJson(const ClsSample& sample);

 private:
  JsonlWriter writer_;
};

ClsSample ClsSampleFromJson(const nlohmann::json& record, std::size_t line,
                            const Tokenizer& tokenizer);

// Augmented record: the CLS fields plus gamma_target, gamma_actual,
// deleted_sentences, deleted_words and the bin of gamma_actual.
nlohmann::ordered_json AugmentedToJson(const AugmentedSample& sample,
                                       const BinConfig& bins);
AugmentedSample AugmentedFromJson(const nlohmann::json& record,
                                  std::size_t line,
                                  const Tokenizer& tokenizer);

nlohmann::ordered_json TrainingPairToJson(const TrainingPair& pair);

// Reads any supported record kind as a TrainingPair: TrainingPair records
// (`src`/`tgt` arrays), MT records (`src`/`tgt` strings) and CLS or
// augmented records. A stored `bin` that disagrees with `bins` raises
// ConfigMismatch.
class TrainingPairReader {
 public:
  TrainingPairReader(const std::string& path, Tokenizer tokenizer,
                     BinConfig bins);
  std::optional<TrainingPair> Next();
  std::size_t line() const { return reader_.line(); }

  // When false, stored bins are ignored and recomputed under `bins`.
  void set_check_bins(bool check) { check_bins_ = check; }

 private:
  JsonlReader reader_;
  Tokenizer tokenizer_;
  BinConfig bins_;
  bool check_bins_ = true;
};

std::vector<TrainingPair> ReadTrainingPairs(const std::string& path,
                                            const Tokenizer& tokenizer,
                                            const BinConfig& bins);
void WriteTrainingPairs(const std::string& path,
                        const std::vector<TrainingPair>& pairs);

}  // namespace csc

#endif  // CSC_CORPUS_H_
