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

#include "csc/corpus.h"

#include <utility>

#include "csc/error.h"

namespace csc {

using nlohmann::json;
using nlohmann::ordered_json;

const char* OriginName(Origin origin) {
  switch (origin) {
    case Origin::kCls:
      return "cls";
    case Origin::kAugmented:
      return "augmented";
    case Origin::kMt:
      return "mt";
    case Origin::kSynthetic:
      return "synthetic";
  }
  return "?";
}

Origin ParseOrigin(std::string_view name) {
  if (name == "cls") return Origin::kCls;
  if (name == "augmented") return Origin::kAugmented;
  if (name == "mt") return Origin::kMt;
  if (name == "synthetic") return Origin::kSynthetic;
  throw InputError("unknown origin: " + std::string(name));
}

TrainingPair MakeTrainingPair(std::vector<std::string> source,
                              std::vector<std::string> target, Origin origin,
                              const BinConfig& bins) {
  TrainingPair pair;
  pair.gamma = ClipGamma(CompressionRate(source.size(), target.size()));
  pair.bin = Quantize(pair.gamma, bins);
  pair.source = std::move(source);
  pair.target = std::move(target);
  pair.origin = origin;
  return pair;
}

JsonlReader::JsonlReader(const std::string& path) : in_(path) {
  if (!in_) throw IoError("cannot open " + path);
}

std::optional<json> JsonlReader::Next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    json record = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded()) throw SchemaError(line_, "malformed JSON");
    if (!record.is_object()) throw SchemaError(line_, "record is not an object");
    return record;
  }
  if (in_.bad()) throw IoError("read failure");
  return std::nullopt;
}

JsonlWriter::JsonlWriter(const std::string& path)
    : out_(path, std::ios::binary | std::ios::trunc), path_(path) {
  if (!out_) throw IoError("cannot open " + path + " for writing");
}

void JsonlWriter::Write(const ordered_json& record) {
  out_ << record.dump() << '\n';
  if (!out_) throw IoError("write failure on " + path_);
}

void JsonlWriter::Flush() {
  out_.flush();
  if (!out_) throw IoError("write failure on " + path_);
}

namespace {

const json& RequireField(const json& record, const char* name,
                         std::size_t line) {
  auto it = record.find(name);
  if (it == record.end()) {
    throw SchemaError(line, std::string("missing field \"") + name + "\"");
  }
  return *it;
}

std::string RequireString(const json& record, const char* name,
                          std::size_t line) {
  const json& value = RequireField(record, name, line);
  if (!value.is_string()) {
    throw SchemaError(line, std::string("field \"") + name +
                                "\" must be a string");
  }
  return value.get<std::string>();
}

double RequireNumber(const json& record, const char* name, std::size_t line) {
  const json& value = RequireField(record, name, line);
  if (!value.is_number()) {
    throw SchemaError(line, std::string("field \"") + name +
                                "\" must be a number");
  }
  return value.get<double>();
}

std::vector<std::string> RequireStringArray(const json& record,
                                            const char* name,
                                            std::size_t line) {
  const json& value = RequireField(record, name, line);
  if (!value.is_array()) {
    throw SchemaError(line, std::string("field \"") + name +
                                "\" must be an array");
  }
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_string()) {
      throw SchemaError(line, std::string("field \"") + name +
                                  "\" must hold strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Document ParseText(const std::string& text, const char* name,
                   std::size_t line, const Tokenizer& tokenizer) {
  try {
    Document doc = Document::FromText(text, tokenizer);
    if (doc.empty()) throw EmptyText("empty");
    return doc;
  } catch (const EmptyText&) {
    throw SchemaError(line, std::string("field \"") + name + "\" is empty");
  }
}

std::vector<std::string> Tokens(const std::string& text, const char* name,
                                std::size_t line, const Tokenizer& tokenizer) {
  try {
    return Surfaces(tokenizer.Tokenize(text));
  } catch (const EmptyText&) {
    throw SchemaError(line, std::string("field \"") + name + "\" is empty");
  }
}

ordered_json IndexArray(const std::vector<std::size_t>& values) {
  ordered_json out = ordered_json::array();
  for (std::size_t v : values) out.push_back(v);
  return out;
}

}  // namespace

ClsSample ClsSampleFromJson(const json& record, std::size_t line,
                            const Tokenizer& tokenizer) {
  ClsSample sample;
  sample.id = RequireString(record, "id", line);
  const json& doc = RequireField(record, "doc", line);
  if (doc.is_string()) {
    sample.doc_src = ParseText(doc.get<std::string>(), "doc", line, tokenizer);
  } else {
    const std::vector<std::string> sentences =
        RequireStringArray(record, "doc", line);
    if (sentences.empty()) throw SchemaError(line, "field \"doc\" is empty");
    try {
      sample.doc_src = Document::FromSentences(sentences, tokenizer);
    } catch (const EmptyText&) {
      throw SchemaError(line, "field \"doc\" holds an empty sentence");
    }
  }
  sample.mono_summary = ParseText(RequireString(record, "mono_summary", line),
                                  "mono_summary", line, tokenizer);
  sample.cross_summary =
      ParseText(RequireString(record, "cross_summary", line), "cross_summary",
                line, tokenizer);
  return sample;
}

CorpusReader::CorpusReader(const std::string& path, Tokenizer tokenizer)
    : reader_(path), tokenizer_(std::move(tokenizer)) {}

std::optional<ClsSample> CorpusReader::Next() {
  std::optional<json> record = reader_.Next();
  if (!record) return std::nullopt;
  return ClsSampleFromJson(*record, reader_.line(), tokenizer_);
}

ordered_json CorpusWriter::ToJson(const ClsSample& sample) {
  ordered_json record;
  record["id"] = sample.id;
  record["doc"] = sample.doc_src.SentenceTexts();
  record["mono_summary"] = sample.mono_summary.Text();
  record["cross_summary"] = sample.cross_summary.Text();
  return record;
}

ordered_json AugmentedToJson(const AugmentedSample& sample,
                             const BinConfig& bins) {
  ordered_json record;
  record["id"] = sample.base_id;
  record["doc"] = sample.doc.SentenceTexts();
  record["mono_summary"] = sample.mono_summary.Text();
  record["cross_summary"] = sample.cross_summary.Text();
  record["gamma_target"] = sample.gamma_target;
  record["gamma_actual"] = sample.gamma_actual;
  record["deleted_sentences"] = IndexArray(sample.deleted_sentence_indices);
  record["deleted_words"] = sample.deleted_word_count;
  record["bin"] = QuantizeClipped(sample.gamma_actual, bins);
  return record;
}

AugmentedSample AugmentedFromJson(const json& record, std::size_t line,
                                  const Tokenizer& tokenizer) {
  ClsSample base = ClsSampleFromJson(record, line, tokenizer);
  AugmentedSample sample;
  sample.base_id = std::move(base.id);
  sample.doc = std::move(base.doc_src);
  sample.mono_summary = std::move(base.mono_summary);
  sample.cross_summary = std::move(base.cross_summary);
  sample.gamma_target = RequireNumber(record, "gamma_target", line);
  sample.gamma_actual = RequireNumber(record, "gamma_actual", line);
  const json& deleted = RequireField(record, "deleted_sentences", line);
  if (!deleted.is_array()) {
    throw SchemaError(line, "field \"deleted_sentences\" must be an array");
  }
  for (const json& v : deleted) {
    if (!v.is_number_unsigned()) {
      throw SchemaError(line, "field \"deleted_sentences\" must hold integers");
    }
    sample.deleted_sentence_indices.push_back(v.get<std::size_t>());
  }
  const json& words = RequireField(record, "deleted_words", line);
  if (!words.is_number_unsigned()) {
    throw SchemaError(line, "field \"deleted_words\" must be an integer");
  }
  sample.deleted_word_count = words.get<std::size_t>();
  return sample;
}

ordered_json TrainingPairToJson(const TrainingPair& pair) {
  ordered_json record;
  record["src"] = pair.source;
  record["tgt"] = pair.target;
  record["gamma"] = pair.gamma;
  record["bin"] = pair.bin;
  record["origin"] = OriginName(pair.origin);
  return record;
}

TrainingPairReader::TrainingPairReader(const std::string& path,
                                       Tokenizer tokenizer, BinConfig bins)
    : reader_(path), tokenizer_(std::move(tokenizer)), bins_(bins) {}

std::optional<TrainingPair> TrainingPairReader::Next() {
  std::optional<json> maybe = reader_.Next();
  if (!maybe) return std::nullopt;
  const json& record = *maybe;
  const std::size_t line = reader_.line();

  if (record.contains("doc")) {
    ClsSample sample = ClsSampleFromJson(record, line, tokenizer_);
    const Origin origin =
        record.contains("gamma_actual") ? Origin::kAugmented : Origin::kCls;
    return MakeTrainingPair(sample.doc_src.Surfaces(),
                            sample.cross_summary.Surfaces(), origin, bins_);
  }
  const json& src = RequireField(record, "src", line);
  if (src.is_string()) {
    return MakeTrainingPair(
        Tokens(src.get<std::string>(), "src", line, tokenizer_),
        Tokens(RequireString(record, "tgt", line), "tgt", line, tokenizer_),
        Origin::kMt, bins_);
  }

  TrainingPair pair;
  pair.source = RequireStringArray(record, "src", line);
  pair.target = RequireStringArray(record, "tgt", line);
  if (pair.source.empty() || pair.target.empty()) {
    throw SchemaError(line, "empty src or tgt");
  }
  pair.origin = Origin::kCls;
  if (record.contains("origin")) {
    try {
      pair.origin = ParseOrigin(RequireString(record, "origin", line));
    } catch (const SchemaError&) {
      throw;
    } catch (const InputError& e) {
      throw SchemaError(line, e.what());
    }
  }
  if (record.contains("gamma")) {
    const double gamma = RequireNumber(record, "gamma", line);
    try {
      pair.gamma = ClipGamma(gamma);
    } catch (const InvalidGamma& e) {
      throw SchemaError(line, e.what());
    }
  } else {
    pair.gamma = ClipGamma(CompressionRate(pair.source.size(),
                                           pair.target.size()));
  }
  pair.bin = Quantize(pair.gamma, bins_);
  if (check_bins_ && record.contains("bin")) {
    const json& bin = record["bin"];
    if (!bin.is_number_integer()) {
      throw SchemaError(line, "field \"bin\" must be an integer");
    }
    if (bin.get<int>() != pair.bin) {
      throw ConfigMismatch("line " + std::to_string(line) + ": bin " +
                           std::to_string(bin.get<int>()) +
                           " disagrees with delta " +
                           FormatDelta(bins_.delta()) + " (expected " +
                           std::to_string(pair.bin) + ")");
    }
  }
  return pair;
}

std::vector<TrainingPair> ReadTrainingPairs(const std::string& path,
                                            const Tokenizer& tokenizer,
                                            const BinConfig& bins) {
  TrainingPairReader reader(path, tokenizer, bins);
  std::vector<TrainingPair> out;
  while (auto pair = reader.Next()) out.push_back(std::move(*pair));
  return out;
}

void WriteTrainingPairs(const std::string& path,
                        const std::vector<TrainingPair>& pairs) {
  JsonlWriter writer(path);
  for (const TrainingPair& pair : pairs) writer.Write(TrainingPairToJson(pair));
  writer.Flush();
}

}  // namespace csc
