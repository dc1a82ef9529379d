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

#include "csc/tokenizer.h"

#include <algorithm>
#include <fstream>
#include <utility>

#include "csc/error.h"
#include "csc/unicode.h"

namespace csc {

const char* SchemeName(TokenizerScheme scheme) {
  switch (scheme) {
    case TokenizerScheme::kWhitespace:
      return "whitespace";
    case TokenizerScheme::kWhitespaceCjk:
      return "whitespace+cjk-chars";
    case TokenizerScheme::kSubword:
      return "subword";
  }
  return "?";
}

TokenizerScheme ParseScheme(std::string_view name) {
  if (name == "whitespace") return TokenizerScheme::kWhitespace;
  if (name == "whitespace+cjk-chars" || name == "whitespace+cjk" ||
      name == "whitespace_cjk" || name == "cjk") {
    return TokenizerScheme::kWhitespaceCjk;
  }
  if (name == "subword") return TokenizerScheme::kSubword;
  throw InputError("unknown tokenizer scheme: " + std::string(name));
}

MergesTable::MergesTable(std::vector<std::string> pieces) {
  for (auto& piece : pieces) {
    if (piece.empty()) continue;
    max_piece_chars_ =
        std::max(max_piece_chars_, unicode::Decode(piece).size());
    pieces_.insert(std::move(piece));
  }
}

MergesTable MergesTable::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open merges table: " + path);
  std::vector<std::string> pieces;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::string piece;
    for (char c : line) {
      if (c != ' ' && c != '\t') piece.push_back(c);
    }
    pieces.push_back(unicode::NormalizeNfc(piece));
  }
  return MergesTable(std::move(pieces));
}

bool MergesTable::Contains(std::string_view piece) const {
  return pieces_.count(std::string(piece)) > 0;
}

std::string NormalizeText(std::string_view text) {
  const std::vector<char32_t> cps =
      unicode::Decode(unicode::NormalizeNfc(text));
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (unicode::IsWhitespace(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    unicode::AppendUtf8(cp, &out);
  }
  return out;
}

Tokenizer::Tokenizer(TokenizerConfig config) : config_(std::move(config)) {
  if (config_.scheme == TokenizerScheme::kSubword && !config_.merges) {
    throw InputError("subword scheme requires a merges table");
  }
}

std::vector<Token> Tokenizer::Tokenize(std::string_view text) const {
  const std::string normalized = NormalizeText(text);
  if (normalized.empty()) throw EmptyText("text is empty after normalization");
  const std::vector<char32_t> cps = unicode::Decode(normalized);
  std::vector<Token> tokens;
  std::vector<char32_t> word;
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    if (i == cps.size() || cps[i] == U' ') {
      if (!word.empty()) SplitWord(word, &tokens);
      word.clear();
    } else {
      word.push_back(cps[i]);
    }
  }
  return tokens;
}

void Tokenizer::SplitWord(const std::vector<char32_t>& word,
                          std::vector<Token>* out) const {
  const std::size_t first = out->size();
  switch (config_.scheme) {
    case TokenizerScheme::kWhitespace:
      out->push_back({unicode::Encode(word), false});
      break;
    case TokenizerScheme::kWhitespaceCjk: {
      std::string run;
      for (char32_t cp : word) {
        if (unicode::IsCjk(cp)) {
          if (!run.empty()) out->push_back({std::move(run), true});
          run.clear();
          std::string single;
          unicode::AppendUtf8(cp, &single);
          out->push_back({std::move(single), true});
        } else {
          unicode::AppendUtf8(cp, &run);
        }
      }
      if (!run.empty()) out->push_back({std::move(run), true});
      break;
    }
    case TokenizerScheme::kSubword: {
      const MergesTable& table = *config_.merges;
      std::size_t pos = 0;
      while (pos < word.size()) {
        std::size_t take = 1;
        const std::size_t longest =
            std::min(table.max_piece_chars(), word.size() - pos);
        for (std::size_t len = longest; len >= 2; --len) {
          std::vector<char32_t> piece(word.begin() + pos,
                                      word.begin() + pos + len);
          if (table.Contains(unicode::Encode(piece))) {
            take = len;
            break;
          }
        }
        std::vector<char32_t> piece(word.begin() + pos,
                                    word.begin() + pos + take);
        out->push_back({unicode::Encode(piece), true});
        pos += take;
      }
      break;
    }
  }
  (*out)[first].attached = false;
}

std::string Tokenizer::Detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !tokens[i].attached) out.push_back(' ');
    out += tokens[i].surface;
  }
  return out;
}

std::vector<std::string> Surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

}  // namespace csc
