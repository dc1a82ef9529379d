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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "csc/model/decoder.h"
#include "csc/model/trainer.h"
#include "csc/synth.h"

namespace csc::model {
namespace {

TEST(RepeatsNgramTest, Basics) {
  std::vector<int> prefix = {1, 2, 3, 1, 2};
  EXPECT_TRUE(RepeatsNgram(prefix, 3, 3));
  EXPECT_FALSE(RepeatsNgram(prefix, 4, 3));
  EXPECT_TRUE(RepeatsNgram(prefix, 2, 1));
  EXPECT_FALSE(RepeatsNgram({}, 1, 1));
  std::vector<int> two = {5, 5};
  EXPECT_TRUE(RepeatsNgram(two, 5, 2));
}

// Deterministic toy scorer over tokens {0: eos, 1: x, 2: y, 3: z, 4: w} that
// prefers the cycle x -> y -> z -> x and stops after eight tokens.
struct LoopScorer {
  using State = std::vector<int>;

  Eigen::VectorXd Dist(const State& s) const {
    Eigen::VectorXd p = Eigen::VectorXd::Constant(5, 0.01);
    if (s.size() >= 8) {
      p(0) = 0.96;
    } else {
      const int last = s.empty() ? 3 : s.back();
      const int next = last == 1 ? 2 : last == 2 ? 3 : 1;
      p(next) = 0.9;
      p(4) = 0.07;
    }
    return (p / p.sum()).array().log();
  }
  std::pair<State, Eigen::VectorXd> Start() { return {{}, Dist({})}; }
  Eigen::VectorXd Advance(State& s, int token) {
    s.push_back(token);
    return Dist(s);
  }
};

TEST(BeamSearchTest, TrigramBlockingBreaksLoop) {
  LoopScorer scorer;
  SearchOptions options;
  options.eos = 0;
  options.max_steps = 20;
  std::vector<int> free_run = BeamSearch(scorer, options);
  EXPECT_EQ(free_run, (std::vector<int>{1, 2, 3, 1, 2, 3, 1, 2}));
  options.block_ngram = 3;
  std::vector<int> blocked = BeamSearch(scorer, options);
  ASSERT_GE(blocked.size(), 6u);
  EXPECT_EQ(std::vector<int>(blocked.begin(), blocked.begin() + 5),
            (std::vector<int>{1, 2, 3, 1, 2}));
  EXPECT_NE(blocked[5], 3);  // the repeated "x y z" is pruned
  for (std::size_t i = 0; i + 2 < blocked.size(); ++i) {
    for (std::size_t j = i + 1; j + 2 < blocked.size(); ++j) {
      EXPECT_FALSE(blocked[i] == blocked[j] && blocked[i + 1] == blocked[j + 1] &&
                   blocked[i + 2] == blocked[j + 2]);
    }
  }
}

TEST(BeamSearchTest, TiesGoToLowerToken) {
  struct Flat {
    using State = int;
    std::pair<State, Eigen::VectorXd> Start() {
      Eigen::VectorXd v(4);
      v << std::log(0.1), std::log(0.3), std::log(0.3), std::log(0.3);
      return {0, v};
    }
    Eigen::VectorXd Advance(State& s, int) {
      ++s;
      Eigen::VectorXd v = Eigen::VectorXd::Constant(4, std::log(0.01));
      v(0) = std::log(0.97);
      return v;
    }
  } scorer;
  SearchOptions options;
  options.eos = 0;
  options.max_steps = 5;
  EXPECT_EQ(BeamSearch(scorer, options), (std::vector<int>{1}));
  options.beam_width = 3;
  EXPECT_EQ(BeamSearch(scorer, options), (std::vector<int>{1}));
}

TEST(BeamSearchTest, HardStopAtMaxSteps) {
  LoopScorer scorer;
  SearchOptions options;
  options.eos = 0;
  options.max_steps = 4;
  options.beam_width = 3;
  EXPECT_EQ(BeamSearch(scorer, options).size(), 4u);
}

ModelParams SmallModel() {
  SynthConfig sc;
  sc.vocab_size = 6;
  sc.len_min = 4;
  sc.len_max = 8;
  ModelConfig base;
  base.layers = 1;
  base.heads = 2;
  base.d_model = 16;
  base.d_ff = 32;
  ModelParams params(ConfigForCorpus(GenerateCorpus(sc, 100, base.bins), base));
  InitializeParams(&params, 2);
  return params;
}

TEST(DecodeTest, WidthOneIsGreedy) {
  ModelParams params = SmallModel();
  Transformer model(params);
  const ModelConfig& c = params.config;
  for (int bin = 1; bin <= 5; ++bin) {
    std::vector<int> src = SourceIds({"a1", "a4", "a2", "a6", "a3"}, bin, c);
    std::vector<int> out = Decode(model, src, bin, {1, 0});
    // Reference greedy loop through full forward passes.
    std::vector<int> prefix = {StartToken(bin, c)};
    std::vector<int> greedy;
    for (int step = 0; step < c.max_len - 1; ++step) {
      Matrix logits = model.Forward(src, prefix, bin);
      int best = -1;
      for (int k = 0; k < logits.cols(); ++k) {
        if (k == Vocab::kBos || k == Vocab::kUnk ||
            (k >= Vocab::kFirstBin && k < Vocab::kFirstBin + c.bins.num_bins())) {
          continue;
        }
        if (best < 0 || logits(logits.rows() - 1, k) > logits(logits.rows() - 1, best)) {
          best = k;
        }
      }
      if (best == Vocab::kEos) break;
      greedy.push_back(best);
      prefix.push_back(best);
    }
    EXPECT_EQ(out, greedy) << "bin " << bin;
  }
}

TEST(DecodeTest, DeterministicAndNoSpecialTokens) {
  ModelParams params = SmallModel();
  Transformer model(params);
  std::vector<int> src = SourceIds({"a2", "a5", "a1"}, 2, params.config);
  std::vector<int> a = Decode(model, src, 2, {5, 3});
  EXPECT_EQ(a, Decode(model, src, 2, {5, 3}));
  for (int id : a) {
    EXPECT_GE(id, Vocab::kFirstBin + params.config.bins.num_bins());
  }
  EXPECT_LE(a.size(), static_cast<std::size_t>(params.config.max_len - 1));
}

}  // namespace
}  // namespace csc::model
