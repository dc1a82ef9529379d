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

#include "csc/cli/commands.h"

#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csc/augment.h"
#include "csc/cli/config.h"
#include "csc/cli/sweep.h"
#include "csc/corpus.h"
#include "csc/error.h"
#include "csc/metrics.h"
#include "csc/model/checkpoint.h"
#include "csc/model/decoder.h"
#include "csc/model/trainer.h"
#include "csc/model/transformer.h"
#include "csc/parallel.h"
#include "csc/synth.h"

namespace csc::cli {
namespace {

struct AugmentArgs {
  std::string in, out, histogram;
  std::string salience = "rouge1";
  std::string targets;
  std::string schedule;
  double hist_delta = 0.1;
};

struct StatsArgs {
  std::string in, out;
};

struct ScoreArgs {
  std::string sys, ref, out;
  std::string metric = "rouge";
};

struct SynthArgs {
  std::string out;
  std::size_t count = 20000;
  SynthConfig synth;
};

struct TrainArgs {
  std::string train, valid, out, metrics;
  std::string conditioning = "cr_embedding";
  model::ModelConfig model;
  model::TrainOptions options;
};

struct GenerateArgs {
  std::string model, in, out;
  std::optional<int> bin;
  std::optional<double> gamma;
  bool oracle = false;
  int beam = 5;
  int block_ngram = 3;
};

struct SweepArgs {
  std::string model, eval, out;
  std::string bins = "all";
  int beam = 1;
  int block_ngram = 0;
};

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

// Writes to `path`, or to stdout when it is empty.
void Emit(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data << std::flush;
    return;
  }
  std::ofstream out = OpenOut(path);
  out << data;
  if (!out.flush()) throw IoError("write failed: " + path);
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<double> ParseDoubleList(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad number '" + item + "' in target list");
    }
  }
  if (values.empty()) throw InputError("empty target list");
  return values;
}

std::string HistogramCsv(const std::vector<std::size_t>& counts,
                         const BinConfig& bins) {
  std::string csv = "bin_lo,bin_hi,count\n";
  for (int b = 1; b <= bins.num_bins(); ++b) {
    const BinInterval iv = GetBinInterval(b, bins);
    csv += fmt::format("{:.4f},{:.4f},{}\n", iv.lo, std::min(iv.hi, 1.0),
                       counts[b - 1]);
  }
  return csv;
}

int RunAugment(const ToolConfig& tool, const AugmentArgs& args) {
  RequireReadable({args.in});
  AugmentConfig config;
  config.seed = tool.seed;
  config.variant = ParseSalienceVariant(args.salience);
  config.jobs = tool.jobs;
  config.histogram_bins = BinConfig(args.hist_delta);
  if (!args.targets.empty()) config.fixed_targets = ParseDoubleList(args.targets);
  if (!args.schedule.empty() && args.schedule != "eq5") {
    throw InputError("unknown schedule " + args.schedule);
  }
  const BinConfig bins = tool.bins();
  CorpusReader reader(args.in, tool.MakeTokenizer());
  JsonlWriter writer(args.out);
  AugmentStats stats =
      AugmentCorpus(reader, config, [&](const AugmentedSample& s) {
        writer.Write(AugmentedToJson(s, bins));
      });
  writer.Flush();
  spdlog::info("augment: {} samples, {} records, {} infeasible targets",
               stats.samples, stats.emitted, stats.infeasible);
  Emit(args.histogram, HistogramCsv(stats.histogram, config.histogram_bins));
  return kExitOk;
}

int RunStats(const ToolConfig& tool, const StatsArgs& args) {
  RequireReadable({args.in});
  const BinConfig bins = tool.bins();
  TrainingPairReader reader(args.in, tool.MakeTokenizer(), bins);
  reader.set_check_bins(false);
  std::vector<std::size_t> counts(bins.num_bins(), 0);
  std::size_t records = 0;
  while (std::optional<TrainingPair> pair = reader.Next()) {
    ++counts[pair->bin - 1];
    ++records;
  }
  spdlog::info("stats: {} records", records);
  Emit(args.out, HistogramCsv(counts, bins));
  return kExitOk;
}

std::vector<std::string> TokenizeLine(const Tokenizer& tokenizer,
                                      const std::string& line) {
  if (NormalizeText(line).empty()) return {};
  return Surfaces(tokenizer.Tokenize(line));
}

int RunScore(const ToolConfig& tool, const ScoreArgs& args) {
  RequireReadable({args.sys, args.ref});
  const Tokenizer tokenizer = tool.MakeTokenizer();
  const std::vector<std::string> sys_lines = ReadLines(args.sys);
  const std::vector<std::string> ref_lines = ReadLines(args.ref);
  if (sys_lines.size() != ref_lines.size() || sys_lines.empty()) {
    throw PairCountMismatch(fmt::format("{} system lines vs {} references",
                                        sys_lines.size(), ref_lines.size()));
  }
  std::vector<std::vector<std::string>> sys, ref;
  for (std::size_t i = 0; i < sys_lines.size(); ++i) {
    sys.push_back(TokenizeLine(tokenizer, sys_lines[i]));
    ref.push_back(TokenizeLine(tokenizer, ref_lines[i]));
  }
  std::string csv;
  if (args.metric == "rouge") {
    csv = "metric,precision,recall,f1\n";
    const double n = static_cast<double>(sys.size());
    for (int variant = 0; variant < 3; ++variant) {
      RougeScore mean;
      for (std::size_t i = 0; i < sys.size(); ++i) {
        const RougeScore s = variant == 2 ? RougeL(sys[i], ref[i])
                                          : RougeN(sys[i], ref[i], variant + 1);
        mean.precision += s.precision / n;
        mean.recall += s.recall / n;
        mean.f1 += s.f1 / n;
      }
      static constexpr const char* kNames[] = {"rouge1", "rouge2", "rougeL"};
      csv += fmt::format("{},{:.6f},{:.6f},{:.6f}\n", kNames[variant],
                         mean.precision, mean.recall, mean.f1);
    }
  } else if (args.metric == "bleu") {
    const BleuScore b = BleuCorpus(sys, ref);
    csv = "bleu,score,p1,p2,p3,p4,bp\n";
    csv += fmt::format("bleu,{:.4f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n",
                       b.score, b.ngram_precisions[0], b.ngram_precisions[1],
                       b.ngram_precisions[2], b.ngram_precisions[3],
                       b.brevity_penalty);
  } else {
    throw InputError("unknown metric " + args.metric);
  }
  Emit(args.out, csv);
  return kExitOk;
}

int RunSynth(const ToolConfig& tool, SynthArgs args) {
  args.synth.seed = tool.seed;
  WriteSynthCorpus(args.synth, args.count, tool.bins(), args.out, tool.jobs);
  spdlog::info("synth: wrote {} records to {}", args.count, args.out);
  return kExitOk;
}

int RunTrain(const ToolConfig& tool, TrainArgs args) {
  RequireReadable({args.train});
  if (!args.valid.empty()) RequireReadable({args.valid});
  const Tokenizer tokenizer = tool.MakeTokenizer();
  const BinConfig bins = tool.bins();
  args.model.bins = bins;
  args.model.conditioning = model::ParseConditioning(args.conditioning);
  args.options.seed = tool.seed;
  args.options.jobs = tool.jobs;

  std::vector<TrainingPair> train = ReadTrainingPairs(args.train, tokenizer, bins);
  std::vector<TrainingPair> valid;
  if (!args.valid.empty()) valid = ReadTrainingPairs(args.valid, tokenizer, bins);
  std::vector<TrainingPair> all = train;
  all.insert(all.end(), valid.begin(), valid.end());
  const model::ModelConfig config = model::ConfigForCorpus(all, args.model);
  spdlog::info("train: {} pairs, vocab {}/{}, {} bins", train.size(),
               config.src_vocab_size(), config.tgt_vocab_size(),
               bins.num_bins());

  model::TrainResult result =
      valid.empty() ? model::Train(train, config, args.options)
                    : model::Train(train, valid, config, args.options);
  model::SaveCheckpoint(result.params, args.out);
  if (!args.metrics.empty()) model::WriteMetricsCsv(args.metrics, result.log);
  spdlog::info("train: {} steps, best valid loss {:.4f} at step {}{}",
               result.steps_run, result.best_valid_loss, result.best_step,
               result.early_stopped ? " (early stop)" : "");
  return kExitOk;
}

// Loads a checkpoint, rejecting it when --delta was given and disagrees.
model::ModelParams LoadModel(const std::string& path, const ToolConfig& tool,
                             bool delta_given) {
  RequireReadable({path});
  return delta_given ? model::LoadCheckpoint(path, tool.bins())
                     : model::LoadCheckpoint(path);
}

int RunGenerate(const ToolConfig& tool, const GenerateArgs& args,
                bool delta_given) {
  const model::ModelParams params = LoadModel(args.model, tool, delta_given);
  RequireReadable({args.in});
  const BinConfig& bins = params.config.bins;
  const int modes = (args.bin ? 1 : 0) + (args.gamma ? 1 : 0) +
                    (args.oracle ? 1 : 0);
  if (modes != 1) throw InputError("give exactly one of --bin, --gamma, --oracle");
  std::optional<int> fixed;
  if (args.bin) {
    GetBinInterval(*args.bin, bins);
    fixed = *args.bin;
  } else if (args.gamma) {
    fixed = QuantizeClipped(*args.gamma, bins);
  }
  const std::vector<TrainingPair> pairs =
      ReadTrainingPairs(args.in, tool.MakeTokenizer(), bins);
  model::Transformer model(params);
  model::DecodeOptions decode{args.beam, args.block_ngram};
  std::vector<std::string> lines(pairs.size());
  ParallelFor(pairs.size(), tool.jobs, [&](std::size_t i) {
    const int b = fixed ? *fixed : pairs[i].bin;
    std::vector<int> src = model::SourceIds(pairs[i].source, b, params.config);
    std::vector<std::string> out =
        params.config.tgt_vocab.Decode(model::Decode(model, src, b, decode));
    std::string line;
    for (std::size_t t = 0; t < out.size(); ++t) {
      if (t) line += ' ';
      line += out[t];
    }
    lines[i] = std::move(line);
  });
  std::string data;
  for (const std::string& line : lines) data += line + '\n';
  Emit(args.out, data);
  spdlog::info("generate: decoded {} sources", pairs.size());
  return kExitOk;
}

int RunSweepCommand(const ToolConfig& tool, const SweepArgs& args,
                    bool delta_given) {
  const model::ModelParams params = LoadModel(args.model, tool, delta_given);
  RequireReadable({args.eval});
  const BinConfig& bins = params.config.bins;
  const std::vector<TrainingPair> pairs =
      ReadTrainingPairs(args.eval, tool.MakeTokenizer(), bins);
  SweepOptions options;
  options.bins = ParseBinList(args.bins, bins.num_bins());
  options.decode = {args.beam, args.block_ngram};
  options.jobs = tool.jobs;
  const SweepReport report = RunSweep(params, MakeEvalItems(pairs), options);
  std::ostringstream csv;
  WriteSweepCsv(csv, report);
  Emit(args.out, csv.str());
  return kExitOk;
}

// key=value lines for the root options and the selected subcommand.
std::string EffectiveConfig(const CLI::App& app) {
  std::string text;
  auto dump = [&](const CLI::App& a, const std::string& prefix) {
    for (const CLI::Option* opt : a.get_options()) {
      const std::string name = opt->get_single_name();
      if (name == "help" || name == "config") continue;
      std::string value;
      if (opt->count() > 0) {
        for (const std::string& r : opt->results()) {
          if (!value.empty()) value += ',';
          value += r;
        }
      } else {
        value = opt->get_default_str();
      }
      text += fmt::format("  {}{}={}\n", prefix, name, value);
    }
  };
  dump(app, "");
  for (const CLI::App* sub : app.get_subcommands()) {
    dump(*sub, sub->get_name() + ".");
  }
  return text;
}

void SetupLogging(const std::string& level) {
  auto logger = std::make_shared<spdlog::logger>(
      "csc", std::make_shared<spdlog::sinks::stderr_sink_st>());
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::from_str(level));
  spdlog::set_default_logger(logger);
}

int Dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Compression-rate controlled cross-lingual summarization "
               "toolkit",
               "csc"};
  app.set_config("--config", "", "TOML file of option values", false);
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);

  ToolConfig tool;
  std::string log_level = "info";
  CLI::Option* delta_opt =
      app.add_option("--delta", tool.delta, "Compression bin width")
          ->capture_default_str();
  app.add_option("--seed", tool.seed, "Random seed")
      ->envname("CSC_SEED")
      ->capture_default_str();
  app.add_option("--jobs", tool.jobs, "Worker threads")->capture_default_str();
  app.add_option("--tokenizer", tool.tokenizer,
                 "whitespace, whitespace+cjk-chars or subword")
      ->capture_default_str();
  app.add_option("--merges", tool.merges, "Subword piece table");
  app.add_option("--log-level", log_level, "trace..off")->capture_default_str();

  AugmentArgs augment;
  CLI::App* augment_cmd =
      app.add_subcommand("augment", "Augment a CLS corpus at new rates");
  augment_cmd->add_option("--in", augment.in, "CLS corpus")->required();
  augment_cmd->add_option("--out", augment.out, "Augmented corpus")->required();
  augment_cmd->add_option("--salience", augment.salience,
                          "rouge1, rouge2 or rougeL")
      ->capture_default_str();
  CLI::Option* targets_opt = augment_cmd->add_option(
      "--targets", augment.targets, "Comma list of target rates");
  augment_cmd->add_option("--schedule", augment.schedule, "eq5")
      ->excludes(targets_opt);
  augment_cmd->add_option("--histogram", augment.histogram,
                          "Histogram CSV path (default stdout)");
  augment_cmd->add_option("--hist-delta", augment.hist_delta,
                          "Histogram bin width")
      ->capture_default_str();

  StatsArgs stats;
  CLI::App* stats_cmd =
      app.add_subcommand("stats", "Histogram of compression rates per bin");
  stats_cmd->add_option("--in", stats.in, "Corpus")->required();
  stats_cmd->add_option("--out", stats.out, "CSV path (default stdout)");

  ScoreArgs score;
  CLI::App* score_cmd = app.add_subcommand("score", "ROUGE or BLEU scoring");
  score_cmd->add_option("--sys", score.sys, "System outputs")->required();
  score_cmd->add_option("--ref", score.ref, "References")->required();
  score_cmd->add_option("--metric", score.metric, "rouge or bleu")
      ->capture_default_str();
  score_cmd->add_option("--out", score.out, "CSV path (default stdout)");

  SynthArgs synth;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic training corpus");
  synth_cmd->add_option("--out", synth.out, "Output corpus")->required();
  synth_cmd->add_option("--count", synth.count)->capture_default_str();
  synth_cmd->add_option("--vocab", synth.synth.vocab_size)
      ->capture_default_str();
  synth_cmd->add_option("--len-min", synth.synth.len_min)->capture_default_str();
  synth_cmd->add_option("--len-max", synth.synth.len_max)->capture_default_str();

  TrainArgs train;
  CLI::App* train_cmd = app.add_subcommand("train", "Train a model");
  train_cmd->add_option("--train", train.train, "Training corpus")->required();
  train_cmd->add_option("--valid", train.valid,
                        "Validation corpus (default: held-out split)");
  train_cmd->add_option("--out", train.out, "Checkpoint path")->required();
  train_cmd->add_option("--metrics", train.metrics, "Metrics CSV path");
  train_cmd->add_option("--conditioning", train.conditioning,
                        "cr_embedding, task_token or none")
      ->capture_default_str();
  train_cmd->add_option("--layers", train.model.layers)->capture_default_str();
  train_cmd->add_option("--heads", train.model.heads)->capture_default_str();
  train_cmd->add_option("--d-model", train.model.d_model)->capture_default_str();
  train_cmd->add_option("--d-ff", train.model.d_ff)->capture_default_str();
  train_cmd->add_option("--max-len", train.model.max_len)->capture_default_str();
  train_cmd->add_option("--label-smoothing", train.model.label_smoothing)
      ->capture_default_str();
  train_cmd->add_option("--lr", train.options.lr)->capture_default_str();
  train_cmd->add_option("--warmup", train.options.warmup)->capture_default_str();
  train_cmd->add_option("--batch", train.options.batch_size)
      ->capture_default_str();
  train_cmd->add_option("--max-steps", train.options.max_steps)
      ->capture_default_str();
  train_cmd->add_option("--eval-interval", train.options.eval_interval)
      ->capture_default_str();
  train_cmd->add_option("--patience", train.options.patience)
      ->capture_default_str();
  train_cmd->add_option("--valid-fraction", train.options.valid_fraction)
      ->capture_default_str();
  train_cmd->add_option("--clip-norm", train.options.clip_norm)
      ->capture_default_str();

  GenerateArgs generate;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Decode sources at a compression rate");
  generate_cmd->add_option("--model", generate.model, "Checkpoint")->required();
  generate_cmd->add_option("--in", generate.in, "Source corpus")->required();
  generate_cmd->add_option("--out", generate.out, "Output (default stdout)");
  generate_cmd->add_option("--bin", generate.bin, "Fixed bin index");
  generate_cmd->add_option("--gamma", generate.gamma, "Fixed compression rate");
  generate_cmd->add_flag("--oracle", generate.oracle,
                         "Use each record's own bin");
  generate_cmd->add_option("--beam", generate.beam)->capture_default_str();
  generate_cmd->add_option("--block-ngram", generate.block_ngram)
      ->capture_default_str();

  SweepArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Decode an eval corpus under every bin");
  sweep_cmd->add_option("--model", sweep.model, "Checkpoint")->required();
  sweep_cmd->add_option("--eval", sweep.eval, "Eval corpus")->required();
  sweep_cmd->add_option("--bins", sweep.bins, "all or a comma list")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "CSV path (default stdout)");
  sweep_cmd->add_option("--beam", sweep.beam)->capture_default_str();
  sweep_cmd->add_option("--block-ngram", sweep.block_ngram)
      ->capture_default_str();

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1),
                                    args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  SetupLogging(log_level);
  spdlog::info("effective configuration:\n{}", EffectiveConfig(app));
  tool.Validate();
  const bool delta_given = delta_opt->count() > 0;

  if (augment_cmd->parsed()) return RunAugment(tool, augment);
  if (stats_cmd->parsed()) return RunStats(tool, stats);
  if (score_cmd->parsed()) return RunScore(tool, score);
  if (synth_cmd->parsed()) return RunSynth(tool, synth);
  if (train_cmd->parsed()) return RunTrain(tool, train);
  if (generate_cmd->parsed()) return RunGenerate(tool, generate, delta_given);
  if (sweep_cmd->parsed()) return RunSweepCommand(tool, sweep, delta_given);
  std::cerr << app.help();
  return kExitInputError;
}

}  // namespace

int Run(const std::vector<std::string>& args) {
  try {
    return Dispatch(args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace csc::cli
