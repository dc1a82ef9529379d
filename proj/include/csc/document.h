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

#ifndef CSC_DOCUMENT_H_
#define CSC_DOCUMENT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "csc/tokenizer.h"

namespace csc {

// `index` is the sentence's position in the original document. Pruned
// documents keep the original indices, so they stay unique and ascending
// but may have gaps.
struct Sentence {
  std::vector<Token> tokens;
  std::size_t index = 0;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

class Document {
 public:
  Document() = default;
  explicit Document(std::vector<Sentence> sentences);

  // Segments `text` into sentences and tokenizes each.
  static Document FromText(std::string_view text, const Tokenizer& tokenizer);
  // Tokenizes pre-segmented sentences (one Sentence per string).
  static Document FromSentences(const std::vector<std::string>& sentences,
                                const Tokenizer& tokenizer);

  const std::vector<Sentence>& sentences() const { return sentences_; }
  std::size_t sentence_count() const { return sentences_.size(); }
  std::size_t token_count() const { return token_count_; }
  bool empty() const { return token_count_ == 0; }

  // Removes the sentence at position `pos` of sentences().
  void RemoveSentence(std::size_t pos);
  // Removes one token; a sentence may not become empty.
  void RemoveToken(std::size_t sentence_pos, std::size_t token_pos);

  // All token surfaces in document order.
  std::vector<std::string> Surfaces() const;
  std::vector<std::string> SentenceTexts() const;
  std::string Text() const;

  friend bool operator==(const Document& a, const Document& b) {
    return a.sentences_ == b.sentences_;
  }

 private:
  void CheckCount() const;

  std::vector<Sentence> sentences_;
  std::size_t token_count_ = 0;
};

// Splits at '.', '!', '?' followed by whitespace or end of text, and after
// every fullwidth '。', '！', '？'. Segments are trimmed; trailing text without
// a terminator forms a final segment. No abbreviation handling.
std::vector<std::string> SegmentSentences(std::string_view text);

// |summary| / |doc| in tokens, unclipped. Throws EmptyDocument.
double CompressionRate(const Document& doc, const Document& summary);
double CompressionRate(std::size_t doc_tokens, std::size_t summary_tokens);

struct ClsSample {
  std::string id;
  Document doc_src;
  Document mono_summary;
  Document cross_summary;

  friend bool operator==(const ClsSample&, const ClsSample&) = default;
};

}  // namespace csc

#endif  // CSC_DOCUMENT_H_
