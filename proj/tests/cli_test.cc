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

#include <sstream>
#include <string>
#include <vector>

#include "csc/cli/commands.h"
#include "csc/cli/sweep.h"
#include "csc/error.h"
#include "fixtures.h"

namespace csc::cli {
namespace {

int Csc(std::vector<std::string> args) {
  args.insert(args.begin(), "csc");
  args.insert(args.begin() + 1, {"--log-level", "off"});
  return Run(args);
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fixtures::ScratchDir(
        ::testing::UnitTest::GetInstance()->current_test_info()->name());
  }
  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Csc({}), kExitInputError);
  EXPECT_EQ(Csc({"frobnicate"}), kExitInputError);
  EXPECT_EQ(Csc({"stats"}), kExitInputError);  // missing --in
  EXPECT_EQ(Csc({"stats", "--in", P("missing.jsonl")}), kExitInputError);
  EXPECT_EQ(Csc({"--delta", "1.5", "synth", "--out", P("s.jsonl")}),
            kExitInputError);
  EXPECT_EQ(Csc({"--jobs", "0", "synth", "--out", P("s.jsonl")}),
            kExitInputError);
  EXPECT_EQ(Csc({"--help"}), kExitOk);
}

TEST_F(CliTest, ScoreRougeAndBleu) {
  fixtures::WriteFile(dir_ / "sys.txt", "the cat sat\na b c d\n");
  fixtures::WriteFile(dir_ / "ref.txt", "the cat\na b c d e\n");
  ASSERT_EQ(Csc({"score", "--sys", P("sys.txt"), "--ref", P("ref.txt"),
                 "--metric", "rouge", "--out", P("r.csv")}),
            kExitOk);
  std::vector<std::string> rouge = Lines(fixtures::ReadFile(dir_ / "r.csv"));
  ASSERT_EQ(rouge.size(), 4u);
  EXPECT_EQ(rouge[0], "metric,precision,recall,f1");
  EXPECT_EQ(rouge[1].substr(0, 7), "rouge1,");
  EXPECT_EQ(rouge[3].substr(0, 7), "rougeL,");
  ASSERT_EQ(Csc({"score", "--sys", P("sys.txt"), "--ref", P("ref.txt"),
                 "--metric", "bleu", "--out", P("b.csv")}),
            kExitOk);
  std::vector<std::string> bleu = Lines(fixtures::ReadFile(dir_ / "b.csv"));
  ASSERT_EQ(bleu.size(), 2u);
  EXPECT_EQ(bleu[0], "bleu,score,p1,p2,p3,p4,bp");
  fixtures::WriteFile(dir_ / "short.txt", "x\n");
  EXPECT_EQ(Csc({"score", "--sys", P("short.txt"), "--ref", P("ref.txt")}),
            kExitInputError);
  EXPECT_EQ(Csc({"score", "--sys", P("sys.txt"), "--ref", P("ref.txt"),
                 "--metric", "meteor"}),
            kExitInputError);
}

TEST_F(CliTest, SynthAndStats) {
  ASSERT_EQ(Csc({"--seed", "4", "synth", "--out", P("s.jsonl"), "--count", "500"}),
            kExitOk);
  const std::string corpus = fixtures::ReadFile(dir_ / "s.jsonl");
  ASSERT_EQ(Csc({"--delta", "0.1", "stats", "--in", P("s.jsonl"), "--out",
                 P("h.csv")}),
            kExitOk);
  std::vector<std::string> rows = Lines(fixtures::ReadFile(dir_ / "h.csv"));
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], "bin_lo,bin_hi,count");
  std::size_t total = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    total += std::stoul(rows[i].substr(rows[i].rfind(',') + 1));
  }
  EXPECT_EQ(total, 500u);
  EXPECT_EQ(fixtures::ReadFile(dir_ / "s.jsonl"), corpus);  // input untouched
}

TEST_F(CliTest, ConfigFilePrecedence) {
  fixtures::WriteFile(dir_ / "c.toml", "seed = 5\n[synth]\ncount = 7\n");
  ASSERT_EQ(Csc({"--config", P("c.toml"), "synth", "--out", P("a.jsonl")}), kExitOk);
  EXPECT_EQ(Lines(fixtures::ReadFile(dir_ / "a.jsonl")).size(), 7u);
  ASSERT_EQ(Csc({"--seed", "5", "synth", "--out", P("b.jsonl"), "--count", "7"}),
            kExitOk);
  EXPECT_EQ(fixtures::ReadFile(dir_ / "a.jsonl"), fixtures::ReadFile(dir_ / "b.jsonl"));
  // A flag beats the file.
  ASSERT_EQ(Csc({"--config", P("c.toml"), "--seed", "6", "synth", "--out",
                 P("c.jsonl")}),
            kExitOk);
  EXPECT_NE(fixtures::ReadFile(dir_ / "a.jsonl"), fixtures::ReadFile(dir_ / "c.jsonl"));
  EXPECT_EQ(Csc({"--config", P("nope.toml"), "synth", "--out", P("d.jsonl")}),
            kExitInputError);
  fixtures::WriteFile(dir_ / "typo.toml", "[synth]\nlen_min = 4\n");
  EXPECT_EQ(Csc({"--config", P("typo.toml"), "synth", "--out", P("e.jsonl")}),
            kExitInputError);
}

TEST_F(CliTest, AugmentWritesRecordsAndHistogram) {
  fixtures::WriteFile(
      dir_ / "cls.jsonl",
      R"({"id":"a","doc":["w1 w2 w3 w4 w5.","w6 w7 w8 w9.","w1 w9 w3."],"mono_summary":"w1 w3","cross_summary":"x y"})" "\n"
      R"({"id":"b","doc":"Alpha beta gamma. Delta epsilon! Zeta eta theta iota.","mono_summary":"beta","cross_summary":"z"})" "\n");
  ASSERT_EQ(Csc({"--seed", "3", "--tokenizer", "whitespace", "augment", "--in",
                 P("cls.jsonl"), "--out", P("aug.jsonl"), "--histogram",
                 P("hist.csv")}),
            kExitOk);
  std::vector<std::string> records = Lines(fixtures::ReadFile(dir_ / "aug.jsonl"));
  EXPECT_FALSE(records.empty());
  EXPECT_NE(records[0].find("\"gamma_target\""), std::string::npos);
  EXPECT_NE(records[0].find("\"bin\""), std::string::npos);
  std::vector<std::string> hist = Lines(fixtures::ReadFile(dir_ / "hist.csv"));
  ASSERT_EQ(hist.size(), 11u);
  EXPECT_EQ(hist[0], "bin_lo,bin_hi,count");
  ASSERT_EQ(Csc({"--seed", "3", "--tokenizer", "whitespace", "augment", "--in",
                 P("cls.jsonl"), "--out", P("fixed.jsonl"), "--targets",
                 "0.5,0.9", "--histogram", P("h2.csv")}),
            kExitOk);
  EXPECT_EQ(Lines(fixtures::ReadFile(dir_ / "fixed.jsonl")).size(), 4u);
  EXPECT_EQ(Csc({"augment", "--in", P("cls.jsonl"), "--out", P("x.jsonl"),
                 "--targets", "0.5", "--schedule", "eq5"}),
            kExitInputError);
}

TEST_F(CliTest, TrainGenerateSweep) {
  ASSERT_EQ(Csc({"--seed", "1", "synth", "--out", P("train.jsonl"), "--count",
                 "300", "--len-min", "4", "--len-max", "8", "--vocab", "6"}),
            kExitOk);
  ASSERT_EQ(Csc({"--seed", "2", "synth", "--out", P("eval.jsonl"), "--count",
                 "20", "--len-min", "4", "--len-max", "8", "--vocab", "6"}),
            kExitOk);
  ASSERT_EQ(Csc({"--seed", "1", "train", "--train", P("train.jsonl"), "--out",
                 P("m.ckpt"), "--metrics", P("m.csv"), "--layers", "1",
                 "--d-model", "16", "--heads", "2", "--d-ff", "32",
                 "--max-steps", "20", "--eval-interval", "10", "--batch",
                 "16"}),
            kExitOk);
  EXPECT_EQ(Lines(fixtures::ReadFile(dir_ / "m.csv"))[0], "step,split,loss,lr");
  ASSERT_EQ(Csc({"generate", "--model", P("m.ckpt"), "--in", P("eval.jsonl"),
                 "--out", P("gen.txt"), "--bin", "3"}),
            kExitOk);
  EXPECT_EQ(Lines(fixtures::ReadFile(dir_ / "gen.txt")).size(), 20u);
  ASSERT_EQ(Csc({"generate", "--model", P("m.ckpt"), "--in", P("eval.jsonl"),
                 "--out", P("gen2.txt"), "--gamma", "0.5"}),
            kExitOk);
  EXPECT_EQ(fixtures::ReadFile(dir_ / "gen.txt"), fixtures::ReadFile(dir_ / "gen2.txt"));
  EXPECT_EQ(Csc({"generate", "--model", P("m.ckpt"), "--in", P("eval.jsonl"),
                 "--bin", "3", "--oracle"}),
            kExitInputError);
  ASSERT_EQ(Csc({"--jobs", "2", "sweep", "--model", P("m.ckpt"), "--eval",
                 P("eval.jsonl"), "--out", P("sweep.csv")}),
            kExitOk);
  std::vector<std::string> rows = Lines(fixtures::ReadFile(dir_ / "sweep.csv"));
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0].substr(0, 40), "bin,gamma_mid,len_ratio,recall,precision");
  EXPECT_EQ(rows[6].substr(0, 7), "oracle,");
  ASSERT_EQ(Csc({"sweep", "--model", P("m.ckpt"), "--eval", P("eval.jsonl"),
                 "--bins", "1,5", "--out", P("sweep2.csv")}),
            kExitOk);
  EXPECT_EQ(Lines(fixtures::ReadFile(dir_ / "sweep2.csv")).size(), 4u);
  EXPECT_EQ(Csc({"--delta", "0.05", "sweep", "--model", P("m.ckpt"), "--eval",
                 P("eval.jsonl")}),
            kExitInputError);
  EXPECT_EQ(Csc({"sweep", "--model", P("m.ckpt"), "--eval", P("eval.jsonl"),
                 "--bins", "0"}),
            kExitInputError);
}

TEST(SweepTest, BinList) {
  EXPECT_EQ(ParseBinList("all", 3), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(ParseBinList("2,3", 3), (std::vector<int>{2, 3}));
  EXPECT_THROW(ParseBinList("4", 3), InvalidBin);
  EXPECT_THROW(ParseBinList("x", 3), InvalidBin);
}

TEST(SweepTest, EvalItemsUseFullTranslation) {
  std::vector<TrainingPair> pairs = {
      {{"a3", "a1"}, {"b3"}, 0.5, 3, Origin::kSynthetic},
      {{"x", "y"}, {"z"}, 0.5, 3, Origin::kMt}};
  std::vector<EvalItem> items = MakeEvalItems(pairs);
  EXPECT_EQ(items[0].full_reference, (std::vector<std::string>{"b3", "b1"}));
  EXPECT_EQ(items[1].full_reference, (std::vector<std::string>{"z"}));
}

}  // namespace
}  // namespace csc::cli
