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
#include <string>
#include <vector>

#include "csc/error.h"
#include "csc/synth.h"
#include "fixtures.h"
#include "oracles.h"

namespace csc {
namespace {

TEST(SynthTest, FullRateIsTranslation) {
  EXPECT_EQ(SelectSalient({3, 1, 2}, 1.0), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(TranslateSource({"a3", "a1", "a2"}),
            (std::vector<std::string>{"b3", "b1", "b2"}));
}

TEST(SynthTest, HandDerivedSelection) {
  EXPECT_EQ(SelectSalient({7, 2, 9, 2}, 0.5), (std::vector<int>{7, 9}));
}

TEST(SynthTest, TieBreakPrefersEarlier) {
  EXPECT_EQ(SelectSalient({5, 5, 5, 5}, 0.5), (std::vector<int>{5, 5}));
  // Positions 1 and 3 carry the tied top id; the earlier one wins.
  EXPECT_EQ(SelectSalient({4, 1, 4, 2}, 0.25), (std::vector<int>{4}));
  EXPECT_EQ(SelectSalient({1, 4, 2, 4, 3}, 0.6), (std::vector<int>{4, 4, 3}));
}

TEST(SynthTest, TargetLength) {
  EXPECT_EQ(TargetLength(4, 0.5), 2u);
  EXPECT_EQ(TargetLength(30, 0.01), 1u);
  EXPECT_EQ(TargetLength(30, 1.0), 30u);
  EXPECT_EQ(TargetLength(7, 0.3), 3u);
}

TEST(SynthTest, MatchesArgmaxOracle) {
  SynthConfig config;
  config.vocab_size = 8;
  config.len_min = 1;
  config.len_max = 30;
  config.seed = 5;
  for (std::size_t i = 0; i < 10000; ++i) {
    SynthSample s = GenerateIndexedSample(i, config);
    ASSERT_EQ(s.target_ids, oracle::SalientByArgmax(s.source_ids, s.gamma))
        << "sample " << i;
    ASSERT_EQ(s.target_ids.size(),
              static_cast<std::size_t>(std::ceil(s.gamma * s.source_ids.size())));
    ASSERT_GT(s.gamma, 0.0);
    ASSERT_LE(s.gamma, 1.0);
  }
}

TEST(SynthTest, PairRecordIsBijection) {
  SynthConfig config;
  config.seed = 3;
  BinConfig bins(0.2);
  for (std::size_t i = 0; i < 200; ++i) {
    SynthSample s = GenerateIndexedSample(i, config);
    TrainingPair p = ToTrainingPair(s, bins);
    EXPECT_EQ(p.origin, Origin::kSynthetic);
    EXPECT_EQ(p.gamma, s.gamma);
    EXPECT_EQ(p.bin, Quantize(s.gamma, bins));
    ASSERT_EQ(p.target.size(), s.target_ids.size());
    for (std::size_t t = 0; t < p.target.size(); ++t) {
      EXPECT_EQ(p.target[t], TargetToken(s.target_ids[t]));
    }
    for (std::size_t t = 0; t < p.source.size(); ++t) {
      EXPECT_EQ(p.source[t], SourceToken(s.source_ids[t]));
    }
  }
}

TEST(SynthTest, GammaIsUniform) {
  SynthConfig config;
  config.seed = 2024;
  std::vector<TrainingPair> corpus = GenerateCorpus(config, 100000, BinConfig(0.1));
  std::vector<double> counts(10, 0.0);
  for (const TrainingPair& p : corpus) {
    int k = static_cast<int>(p.gamma * 10.0);
    if (k == 10) k = 9;
    counts[k] += 1.0;
  }
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - 10000.0) * (c - 10000.0) / 10000.0;
  // Upper 0.001 quantile of chi-squared with 9 degrees of freedom.
  EXPECT_LT(chi2, 27.877);
}

TEST(SynthTest, CorpusFileDeterministic) {
  auto dir = fixtures::ScratchDir("synth_det");
  SynthConfig config;
  config.seed = 11;
  WriteSynthCorpus(config, 1000, BinConfig(0.2), (dir / "a.jsonl").string());
  WriteSynthCorpus(config, 1000, BinConfig(0.2), (dir / "b.jsonl").string(), 4);
  const std::string a = fixtures::ReadFile(dir / "a.jsonl");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, fixtures::ReadFile(dir / "b.jsonl"));
  std::vector<TrainingPair> back = ReadTrainingPairs(
      (dir / "a.jsonl").string(), Tokenizer(), BinConfig(0.2));
  EXPECT_EQ(back, GenerateCorpus(config, 1000, BinConfig(0.2)));
}

TEST(SynthTest, Errors) {
  SynthConfig config;
  EXPECT_THROW(GenerateCorpus(config, 0, BinConfig(0.2)), InvalidCount);
  config.vocab_size = 3;
  EXPECT_THROW(config.Validate(), InputError);
  config.vocab_size = 8;
  config.len_min = 5;
  config.len_max = 4;
  EXPECT_THROW(config.Validate(), InputError);
  EXPECT_THROW(WriteSynthCorpus(SynthConfig{}, 3, BinConfig(0.2),
                                "/nonexistent/dir/x.jsonl"),
               IoError);
}

}  // namespace
}  // namespace csc
