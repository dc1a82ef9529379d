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

#ifndef CSC_MODEL_DECODER_H_
#define CSC_MODEL_DECODER_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "csc/model/transformer.h"

namespace csc::model {

struct SearchOptions {
  int beam_width = 1;     // 1 = greedy
  int block_ngram = 0;    // 0 disables n-gram blocking
  int max_steps = 63;     // generated tokens including <eos>
  int eos = Vocab::kEos;
  std::vector<bool> banned;  // token ids never generated
};

// True when appending `next` to `prefix` would repeat an n-gram of size n
// already present in `prefix`.
bool RepeatsNgram(std::span<const int> prefix, int next, int n);

// Beam search over any scorer exposing
//   State;  std::pair<State, Eigen::VectorXd> Start();
//   Eigen::VectorXd Advance(State&, int token);
// where the vectors hold next-token log-probabilities. Hypotheses are ranked
// by summed log-probability divided by length; ties go to the lower token id,
// then to the earlier parent. Extensions that repeat an n-gram are pruned;
// <eos> is never pruned. Returns the best token sequence without <eos>.
template <typename Scorer>
std::vector<int> BeamSearch(Scorer& scorer, const SearchOptions& options) {
  using State = typename Scorer::State;
  struct Hyp {
    std::vector<int> tokens;
    double logp = 0.0;
    State state;
    Eigen::VectorXd next;
  };
  struct Candidate {
    double score;
    int token;
    std::size_t parent;
  };
  struct Finished {
    std::vector<int> tokens;  // without <eos>
    double score;
  };
  const int width = std::max(1, options.beam_width);

  std::vector<Hyp> live;
  {
    auto [state, next] = scorer.Start();
    live.push_back({{}, 0.0, std::move(state), std::move(next)});
  }
  std::vector<Finished> finished;
  std::vector<Candidate> candidates;
  for (int step = 0; step < options.max_steps && !live.empty(); ++step) {
    candidates.clear();
    for (std::size_t p = 0; p < live.size(); ++p) {
      const Hyp& h = live[p];
      const double len = static_cast<double>(h.tokens.size() + 1);
      for (int w = 0; w < static_cast<int>(h.next.size()); ++w) {
        if (w < static_cast<int>(options.banned.size()) && options.banned[w]) {
          continue;
        }
        if (w != options.eos && options.block_ngram > 0 &&
            RepeatsNgram(h.tokens, w, options.block_ngram)) {
          continue;
        }
        candidates.push_back({(h.logp + h.next(w)) / len, w, p});
      }
    }
    if (candidates.empty()) break;
    const std::size_t keep = std::min<std::size_t>(width, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + keep,
                      candidates.end(),
                      [](const Candidate& a, const Candidate& b) {
                        if (a.score != b.score) return a.score > b.score;
                        if (a.token != b.token) return a.token < b.token;
                        return a.parent < b.parent;
                      });
    const bool last_step = step + 1 == options.max_steps;
    std::vector<Hyp> next_live;
    for (std::size_t i = 0; i < keep; ++i) {
      const Candidate& c = candidates[i];
      const Hyp& parent = live[c.parent];
      std::vector<int> tokens = parent.tokens;
      if (c.token == options.eos) {
        finished.push_back({std::move(tokens), c.score});
        continue;
      }
      tokens.push_back(c.token);
      if (last_step) {
        finished.push_back({std::move(tokens), c.score});
        continue;
      }
      State state = parent.state;
      Eigen::VectorXd next = scorer.Advance(state, c.token);
      next_live.push_back({std::move(tokens), parent.logp + parent.next(c.token),
                           std::move(state), std::move(next)});
    }
    live = std::move(next_live);
    if (static_cast<int>(finished.size()) >= width) break;
  }
  if (finished.empty()) return {};
  // Stable: among equal scores the earliest finished hypothesis wins.
  auto best = std::max_element(finished.begin(), finished.end(),
                               [](const Finished& a, const Finished& b) {
                                 return a.score < b.score;
                               });
  return best->tokens;
}

struct DecodeOptions {
  int beam_width = 1;
  int block_ngram = 0;
};

// Decodes one source (model-ready ids) under `bin`. Special tokens other
// than <eos> are never generated. Output excludes the start token and <eos>.
std::vector<int> Decode(const Transformer& model, std::span<const int> src,
                        int bin, const DecodeOptions& options);

}  // namespace csc::model

#endif  // CSC_MODEL_DECODER_H_
