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

#include "csc/document.h"

#include <utility>

#include "csc/error.h"
#include "csc/unicode.h"

namespace csc {

Document::Document(std::vector<Sentence> sentences)
    : sentences_(std::move(sentences)) {
  for (const Sentence& s : sentences_) {
    if (s.tokens.empty()) throw InputError("sentence without tokens");
    token_count_ += s.tokens.size();
  }
}

Document Document::FromText(std::string_view text,
                            const Tokenizer& tokenizer) {
  return FromSentences(SegmentSentences(text), tokenizer);
}

Document Document::FromSentences(const std::vector<std::string>& sentences,
                                 const Tokenizer& tokenizer) {
  std::vector<Sentence> out;
  out.reserve(sentences.size());
  for (const std::string& text : sentences) {
    out.push_back({tokenizer.Tokenize(text), out.size()});
  }
  return Document(std::move(out));
}

void Document::RemoveSentence(std::size_t pos) {
  if (pos >= sentences_.size()) throw IndexError("sentence out of range");
  token_count_ -= sentences_[pos].tokens.size();
  sentences_.erase(sentences_.begin() + static_cast<std::ptrdiff_t>(pos));
  CheckCount();
}

void Document::RemoveToken(std::size_t sentence_pos, std::size_t token_pos) {
  if (sentence_pos >= sentences_.size()) {
    throw IndexError("sentence out of range");
  }
  std::vector<Token>& tokens = sentences_[sentence_pos].tokens;
  if (token_pos >= tokens.size()) throw IndexError("token out of range");
  if (tokens.size() == 1) {
    throw InputError("cannot remove the last token of a sentence");
  }
  const bool attached = tokens[token_pos].attached;
  tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(token_pos));
  // Keep word boundaries: a piece that followed a removed word start now
  // starts the word itself.
  if (token_pos < tokens.size() && !attached) {
    tokens[token_pos].attached = false;
  }
  tokens.front().attached = false;
  --token_count_;
  CheckCount();
}

void Document::CheckCount() const {
  std::size_t total = 0;
  for (const Sentence& s : sentences_) total += s.tokens.size();
  if (total != token_count_) throw Error("document token count out of sync");
}

std::vector<std::string> Document::Surfaces() const {
  std::vector<std::string> out;
  out.reserve(token_count_);
  for (const Sentence& s : sentences_) {
    for (const Token& t : s.tokens) out.push_back(t.surface);
  }
  return out;
}

std::vector<std::string> Document::SentenceTexts() const {
  std::vector<std::string> out;
  out.reserve(sentences_.size());
  for (const Sentence& s : sentences_) {
    out.push_back(Tokenizer::Detokenize(s.tokens));
  }
  return out;
}

std::string Document::Text() const {
  std::string out;
  for (const std::string& s : SentenceTexts()) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

namespace {

bool IsAsciiTerminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?';
}

bool IsFullwidthTerminator(char32_t cp) {
  return cp == U'。' || cp == U'！' || cp == U'？';
}

void FlushSegment(std::vector<char32_t>* current,
                  std::vector<std::string>* out) {
  std::size_t begin = 0;
  std::size_t end = current->size();
  while (begin < end && unicode::IsWhitespace((*current)[begin])) ++begin;
  while (end > begin && unicode::IsWhitespace((*current)[end - 1])) --end;
  if (end > begin) {
    out->push_back(unicode::Encode(std::vector<char32_t>(
        current->begin() + static_cast<std::ptrdiff_t>(begin),
        current->begin() + static_cast<std::ptrdiff_t>(end))));
  }
  current->clear();
}

}  // namespace

std::vector<std::string> SegmentSentences(std::string_view text) {
  const std::vector<char32_t> cps = unicode::Decode(text);
  std::vector<std::string> out;
  std::vector<char32_t> current;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    current.push_back(cp);
    const bool at_end = i + 1 == cps.size();
    bool boundary = IsFullwidthTerminator(cp);
    if (IsAsciiTerminator(cp)) {
      boundary = at_end || unicode::IsWhitespace(cps[i + 1]);
    }
    if (boundary) FlushSegment(&current, &out);
  }
  FlushSegment(&current, &out);
  return out;
}

double CompressionRate(std::size_t doc_tokens, std::size_t summary_tokens) {
  if (doc_tokens == 0) throw EmptyDocument("document has no tokens");
  return static_cast<double>(summary_tokens) /
         static_cast<double>(doc_tokens);
}

double CompressionRate(const Document& doc, const Document& summary) {
  return CompressionRate(doc.token_count(), summary.token_count());
}

}  // namespace csc
