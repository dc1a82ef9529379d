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

// Random inputs shared by the unit and acceptance tests.

#ifndef CSC_TESTS_FIXTURES_H_
#define CSC_TESTS_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "csc/document.h"
#include "csc/rng.h"
#include "csc/tokenizer.h"

namespace csc::fixtures {

inline Tokenizer WhitespaceTokenizer() {
  TokenizerConfig config;
  config.scheme = TokenizerScheme::kWhitespace;
  return Tokenizer(config);
}

inline std::vector<std::string> RandomSeq(Rng& rng, std::size_t max_len,
                                          int vocab) {
  std::vector<std::string> s(rng.UniformInt(max_len + 1));
  for (auto& t : s) t = "t" + std::to_string(rng.UniformInt(vocab));
  return s;
}

// A CLS sample of 1..max_sentences sentences of 2..9 words over a 30-word
// vocabulary, a mono summary drawn from the document's words and a cross
// summary sized for a rate between 0.05 and 0.6.
inline ClsSample RandomClsSample(Rng& rng, const std::string& id,
                                 int max_sentences) {
  const Tokenizer tok = WhitespaceTokenizer();
  std::vector<std::string> sentences;
  std::vector<std::string> words;
  const int l = 1 + static_cast<int>(rng.UniformInt(max_sentences));
  std::size_t n = 0;
  for (int i = 0; i < l; ++i) {
    const int len = 2 + static_cast<int>(rng.UniformInt(8));
    std::string s;
    for (int j = 0; j < len; ++j) {
      std::string w = "w" + std::to_string(rng.UniformInt(30));
      words.push_back(w);
      s += (j ? " " : "") + w;
    }
    n += len;
    sentences.push_back(s);
  }
  std::string mono;
  const int mono_len = 1 + static_cast<int>(rng.UniformInt(6));
  for (int j = 0; j < mono_len; ++j) {
    mono += (j ? " " : "") + words[rng.UniformInt(words.size())];
  }
  const double gamma = 0.05 + 0.55 * rng.Uniform();
  std::size_t m = static_cast<std::size_t>(gamma * static_cast<double>(n));
  if (m == 0) m = 1;
  if (m >= n) m = n - 1 > 0 ? n - 1 : 1;
  std::string cross;
  for (std::size_t j = 0; j < m; ++j) {
    cross += (j ? " " : "") + std::string("x") + std::to_string(j % 7);
  }
  ClsSample sample;
  sample.id = id;
  sample.doc_src = Document::FromSentences(sentences, tok);
  sample.mono_summary = Document::FromSentences({mono}, tok);
  sample.cross_summary = Document::FromSentences({cross}, tok);
  return sample;
}

// Fresh per-test scratch directory under the system temp dir.
inline std::filesystem::path ScratchDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("csc_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteFile(const std::filesystem::path& path,
                      const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
}

}  // namespace csc::fixtures

#endif  // CSC_TESTS_FIXTURES_H_
