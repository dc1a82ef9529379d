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

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "csc/augment.h"
#include "csc/error.h"
#include "fixtures.h"
#include "oracles.h"

namespace csc {
namespace {

Tokenizer Ws() { return fixtures::WhitespaceTokenizer(); }

ClsSample Sample(std::vector<std::string> doc, const std::string& mono,
                 const std::string& cross) {
  return {"s", Document::FromSentences(doc, Ws()),
          Document::FromSentences({mono}, Ws()),
          Document::FromSentences({cross}, Ws())};
}

TEST(SalienceTest, IdentitySentence) {
  ClsSample s = Sample({"a1 a2", "b1 b2 b3", "c1 c2"}, "b1 b2 b3", "x");
  SalienceTable t = SentenceSalience(s.doc_src, s.mono_summary,
                                     SalienceVariant::kRouge1);
  ASSERT_EQ(t.entries.size(), 3u);
  EXPECT_EQ(t.entries[1].salience, 1.0);
  EXPECT_NE(t.LeastSalient(), 1u);
  // A and C tie at 0; the later sentence goes first.
  EXPECT_EQ(t.LeastSalient(), 2u);
  EXPECT_EQ(t.DeletionOrder(), (std::vector<std::size_t>{2, 0, 1}));
}

TEST(SalienceTest, SingleSentence) {
  ClsSample s = Sample({"a b c"}, "a", "x");
  SalienceTable t = SentenceSalience(s.doc_src, s.mono_summary,
                                     SalienceVariant::kRouge1);
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.LeastSalient(), 0u);
}

TEST(SalienceTest, HandRougeOne) {
  // A shares 1 of the summary's 3 unigrams, C shares none.
  ClsSample s = Sample({"p q r", "z z", "u v w"}, "p y z", "x");
  SalienceTable t = SentenceSalience(s.doc_src, s.mono_summary,
                                     SalienceVariant::kRouge1);
  EXPECT_DOUBLE_EQ(t.entries[0].salience, 1.0 / 3.0);
  EXPECT_EQ(t.entries[2].salience, 0.0);
  EXPECT_EQ(t.LeastSalient(), 2u);
}

TEST(SalienceTest, Variants) {
  ClsSample s = Sample({"a b c", "c b a"}, "a b c", "x");
  SalienceTable r2 = SentenceSalience(s.doc_src, s.mono_summary,
                                      SalienceVariant::kRouge2);
  EXPECT_EQ(r2.entries[0].salience, 1.0);
  EXPECT_EQ(r2.entries[1].salience, 0.0);
  SalienceTable rl = SentenceSalience(s.doc_src, s.mono_summary,
                                      SalienceVariant::kRougeL);
  EXPECT_DOUBLE_EQ(rl.entries[1].salience, 1.0 / 3.0);
  EXPECT_EQ(ParseSalienceVariant("rougeL"), SalienceVariant::kRougeL);
  EXPECT_THROW(ParseSalienceVariant("rouge3"), InputError);
}

TEST(ScheduleTest, ZeroDraws) {
  std::array<double, 10> zeros{};
  Schedule s = GammaScheduleFromDraws(0.25, zeros);
  const std::vector<double> want = {0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95};
  ASSERT_EQ(s.targets.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(s.targets[i], want[i], 1e-12);
  }
}

TEST(ScheduleTest, HighGammaIsEmpty) {
  Rng rng(1);
  EXPECT_TRUE(GammaSchedule(0.95, rng).targets.empty());
}

TEST(ScheduleTest, DeterministicAndBounded) {
  Rng a(42), b(42);
  EXPECT_EQ(GammaSchedule(0.25, a).targets, GammaSchedule(0.25, b).targets);
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const double g = 0.01 + 0.98 * rng.Uniform();
    Schedule s = GammaSchedule(g, rng);
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
      EXPECT_GT(s.targets[i], g + 0.1);
      EXPECT_LE(s.targets[i], std::min(1.0, g + 1.1));
      if (i > 0) EXPECT_GT(s.targets[i], s.targets[i - 1]);
    }
  }
}

TEST(ScheduleTest, InvalidGamma) {
  Rng rng(1);
  EXPECT_THROW(GammaSchedule(0.0, rng), InvalidGamma);
  EXPECT_THROW(GammaSchedule(1.0, rng), InvalidGamma);
  EXPECT_THROW(GammaSchedule(1.3, rng), InvalidGamma);
}

TEST(AugmentToRateTest, HandTrace) {
  // B is the mono summary; A shares b1 with it so it outranks C.
  ClsSample s = Sample({"a1 b1 a3 a4", "b1 b2 b3 b4", "c1 c2 c3 c4"},
                       "b1 b2 b3 b4", "x y z");
  Rng rng(3);
  AugmentedSample out = AugmentToRate(s, 0.5, rng, SalienceVariant::kRouge1);
  EXPECT_EQ(out.deleted_sentence_indices, (std::vector<std::size_t>{2}));
  EXPECT_EQ(out.deleted_word_count, 2u);
  ASSERT_EQ(out.doc.sentence_count(), 2u);
  EXPECT_EQ(out.doc.sentences()[0].tokens.size(), 2u);
  EXPECT_EQ(out.doc.sentences()[1].tokens.size(), 4u);
  // b1 is in the mono summary and must survive.
  EXPECT_EQ(out.doc.sentences()[0].tokens[0].surface == "b1" ||
                out.doc.sentences()[0].tokens[1].surface == "b1",
            true);
  EXPECT_DOUBLE_EQ(out.gamma_actual, 0.5);
  EXPECT_EQ(out.cross_summary, s.cross_summary);
}

TEST(AugmentToRateTest, SingleSentenceOnlyWords) {
  ClsSample s = Sample({"a b c d e f g h i j"}, "a", "x y");
  Rng rng(5);
  AugmentedSample out = AugmentToRate(s, 0.21, rng, SalienceVariant::kRouge1);
  EXPECT_TRUE(out.deleted_sentence_indices.empty());
  EXPECT_EQ(out.deleted_word_count, 1u);
  EXPECT_EQ(out.doc.token_count(), 9u);
}

TEST(AugmentToRateTest, FullRateForcedLength) {
  ClsSample s = Sample({"a b c d", "e f g", "h i j k l"}, "zz", "v w x y z");
  Rng rng(8);
  AugmentedSample out = AugmentToRate(s, 1.0, rng, SalienceVariant::kRouge1);
  EXPECT_EQ(out.doc.token_count(), 5u);
  EXPECT_EQ(out.gamma_actual, 1.0);
}

TEST(AugmentToRateTest, Preconditions) {
  ClsSample s = Sample({"a b c d"}, "a", "x");
  Rng rng(1);
  EXPECT_THROW(AugmentToRate(s, 0.25, rng, SalienceVariant::kRouge1),
               InvalidGamma);
  EXPECT_THROW(AugmentToRate(s, 0.1, rng, SalienceVariant::kRouge1),
               InvalidGamma);
  EXPECT_THROW(AugmentToRate(s, 1.01, rng, SalienceVariant::kRouge1),
               InvalidGamma);
}

TEST(AugmentToRateTest, Infeasible) {
  ClsSample s = Sample({"a", "b", "c"}, "q", "x");
  Rng rng(1);
  EXPECT_THROW(AugmentToRate(s, 0.9, rng, SalienceVariant::kRouge1),
               AugmentInfeasible);
}

TEST(AugmentToRateTest, FallbackUsesSummaryWordsThenNextSentence) {
  // Every word of the least salient sentence is in the mono summary.
  ClsSample s = Sample({"k1 k2 k3", "m1 m2 m3 m4 m5"}, "m1 m2 m3 m4 m5 k9",
                       "x y z w");
  Rng rng(2);
  AugmentedSample out = AugmentToRate(s, 0.8, rng, SalienceVariant::kRouge1);
  EXPECT_EQ(out.doc.token_count(), 5u);
  EXPECT_GE(out.gamma_actual, 0.8);
}

TEST(AugmentToRateTest, PropertiesAgainstOracle) {
  Rng rng(99);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    ClsSample s = fixtures::RandomClsSample(rng, "p" + std::to_string(trial), 5);
    const double base = CompressionRate(s.doc_src, s.cross_summary);
    Schedule sched = GammaSchedule(base, rng);
    for (double target : sched.targets) {
      Rng local(trial * 31 + 7);
      AugmentedSample out;
      try {
        out = AugmentToRate(s, target, local, SalienceVariant::kRouge1);
      } catch (const AugmentInfeasible&) {
        continue;
      }
      const std::size_t m = s.cross_summary.token_count();
      const std::size_t n = out.doc.token_count();
      EXPECT_GE(out.gamma_actual, target);
      EXPECT_EQ(out.gamma_actual, CompressionRate(n, m));
      EXPECT_LT(CompressionRate(n + 1, m), target);
      EXPECT_EQ(out.cross_summary, s.cross_summary);
      EXPECT_EQ(out.doc.token_count() + out.deleted_word_count +
                    [&] {
                      std::size_t removed = 0;
                      for (std::size_t idx : out.deleted_sentence_indices) {
                        removed += s.doc_src.sentences()[idx].tokens.size();
                      }
                      return removed;
                    }(),
                s.doc_src.token_count());
      std::vector<std::size_t> got = out.deleted_sentence_indices;
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, oracle::PrunedSentences(s.doc_src, s.mono_summary, m,
                                             target));
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(AugmentCorpusTest, FixedTargetsCardinality) {
  ClsSample s = Sample({"a b c d e f g h i j k l m n o p q r s t"}, "a",
                       "x");  // rate 0.05
  AugmentConfig config;
  config.fixed_targets = std::vector<double>{0.04, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6,
                                             0.7, 1.5};
  std::size_t infeasible = 0;
  std::vector<AugmentedSample> out = AugmentSample(s, config, &infeasible);
  EXPECT_EQ(out.size(), 7u);
  EXPECT_EQ(infeasible, 0u);
}

TEST(AugmentCorpusTest, EmptyInput) {
  auto dir = fixtures::ScratchDir("augment_empty");
  fixtures::WriteFile(dir / "in.jsonl", "");
  CorpusReader reader((dir / "in.jsonl").string(), Ws());
  std::size_t records = 0;
  AugmentStats stats = AugmentCorpus(reader, AugmentConfig{},
                                     [&](const AugmentedSample&) { ++records; });
  EXPECT_EQ(records, 0u);
  EXPECT_EQ(stats.samples, 0u);
  ASSERT_EQ(stats.histogram.size(), 10u);
  for (std::size_t c : stats.histogram) EXPECT_EQ(c, 0u);
}

TEST(AugmentCorpusTest, WorkerCountDoesNotChangeOutput) {
  auto dir = fixtures::ScratchDir("augment_jobs");
  const std::string in = (dir / "in.jsonl").string();
  {
    CorpusWriter writer(in);
    Rng rng(12);
    for (int i = 0; i < 120; ++i) {
      writer.Write(fixtures::RandomClsSample(rng, "d" + std::to_string(i), 8));
    }
  }
  auto run = [&](int jobs) {
    AugmentConfig config;
    config.seed = 77;
    config.jobs = jobs;
    config.chunk_size = 16;
    CorpusReader reader(in, Ws());
    std::string out;
    AugmentStats stats = AugmentCorpus(reader, config, [&](const AugmentedSample& s) {
      out += AugmentedToJson(s, BinConfig(0.2)).dump() + "\n";
    });
    std::size_t total = 0;
    for (std::size_t c : stats.histogram) total += c;
    EXPECT_EQ(total, stats.emitted);
    return out;
  };
  const std::string one = run(1);
  EXPECT_FALSE(one.empty());
  EXPECT_EQ(one, run(8));
}

}  // namespace
}  // namespace csc
