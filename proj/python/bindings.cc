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

// Python bindings for the core operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csc/augment.h"
#include "csc/cli/commands.h"
#include "csc/crbin.h"
#include "csc/error.h"
#include "csc/metrics.h"
#include "csc/synth.h"
#include "csc/tokenizer.h"

namespace py = pybind11;

namespace {

using Tokens = std::vector<std::string>;

py::dict RougeDict(const csc::RougeScore& s) {
  py::dict d;
  d["precision"] = s.precision;
  d["recall"] = s.recall;
  d["f1"] = s.f1;
  return d;
}

std::vector<std::string> Tokenize(const std::string& text,
                                  const std::string& scheme,
                                  std::optional<std::string> merges) {
  csc::TokenizerConfig config;
  config.scheme = csc::ParseScheme(scheme);
  if (merges) {
    config.merges = std::make_shared<const csc::MergesTable>(
        csc::MergesTable::Load(*merges));
  }
  return csc::Surfaces(csc::Tokenizer(config).Tokenize(text));
}

py::dict Bleu(const std::vector<Tokens>& candidates,
              const std::vector<Tokens>& references) {
  const csc::BleuScore s = csc::BleuCorpus(candidates, references);
  py::dict d;
  d["score"] = s.score;
  d["precisions"] = std::vector<double>(s.ngram_precisions.begin(),
                                        s.ngram_precisions.end());
  d["brevity_penalty"] = s.brevity_penalty;
  d["candidate_len"] = s.candidate_len;
  d["reference_len"] = s.reference_len;
  return d;
}

py::list SynthCorpus(std::size_t count, std::uint64_t seed, int vocab,
                     int len_min, int len_max, double delta) {
  csc::SynthConfig config;
  config.seed = seed;
  config.vocab_size = vocab;
  config.len_min = len_min;
  config.len_max = len_max;
  py::list out;
  for (const csc::TrainingPair& p :
       csc::GenerateCorpus(config, count, csc::BinConfig(delta))) {
    py::dict d;
    d["src"] = p.source;
    d["tgt"] = p.target;
    d["gamma"] = p.gamma;
    d["bin"] = p.bin;
    out.append(std::move(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compression-rate controlled summarization toolkit";

  py::register_exception<csc::Error>(m, "CscError", PyExc_RuntimeError);
  py::register_exception<csc::InputError>(m, "InputError", PyExc_ValueError);

  m.def("tokenize", &Tokenize, py::arg("text"),
        py::arg("scheme") = "whitespace+cjk-chars",
        py::arg("merges") = py::none());
  m.def("normalize", &csc::NormalizeText, py::arg("text"));

  m.def(
      "rouge_n",
      [](const Tokens& cand, const Tokens& ref, int n) {
        return RougeDict(csc::RougeN(cand, ref, n));
      },
      py::arg("candidate"), py::arg("reference"), py::arg("n") = 1);
  m.def(
      "rouge_l",
      [](const Tokens& cand, const Tokens& ref) {
        return RougeDict(csc::RougeL(cand, ref));
      },
      py::arg("candidate"), py::arg("reference"));
  m.def("bleu", &Bleu, py::arg("candidates"), py::arg("references"));
  m.def(
      "length_variance",
      [](const std::vector<std::size_t>& pred, const std::vector<std::size_t>& ref) {
        return csc::ComputeLengthVariance(pred, ref).value;
      },
      py::arg("pred_lens"), py::arg("ref_lens"));

  m.def("num_bins", [](double delta) { return csc::BinConfig(delta).num_bins(); },
        py::arg("delta"));
  m.def(
      "quantize",
      [](double gamma, double delta, bool clip) {
        const csc::BinConfig bins(delta);
        return clip ? csc::QuantizeClipped(gamma, bins)
                    : csc::Quantize(gamma, bins);
      },
      py::arg("gamma"), py::arg("delta") = 0.2, py::arg("clip") = false);
  m.def(
      "bin_interval",
      [](int bin, double delta) {
        const csc::BinInterval iv = csc::GetBinInterval(bin, csc::BinConfig(delta));
        return py::make_tuple(iv.lo, iv.hi, iv.hi_inclusive);
      },
      py::arg("bin"), py::arg("delta") = 0.2);

  m.def(
      "gamma_schedule",
      [](double gamma, const std::vector<double>& draws) {
        return csc::GammaScheduleFromDraws(gamma, draws).targets;
      },
      py::arg("gamma"), py::arg("draws"));

  m.def("select_salient", &csc::SelectSalient, py::arg("source_ids"),
        py::arg("gamma"));
  m.def("synth_corpus", &SynthCorpus, py::arg("count"), py::arg("seed") = 0,
        py::arg("vocab") = 16, py::arg("len_min") = 20, py::arg("len_max") = 40,
        py::arg("delta") = 0.2);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "csc");
        py::gil_scoped_release release;
        return csc::cli::Run(args);
      },
      py::arg("args"));
}
