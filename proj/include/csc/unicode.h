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

#ifndef CSC_UNICODE_H_
#define CSC_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace csc::unicode {

// NFC-normalizes UTF-8 text. Invalid sequences are replaced by U+FFFD.
std::string NormalizeNfc(std::string_view text);

std::vector<char32_t> Decode(std::string_view text);
void AppendUtf8(char32_t cp, std::string* out);
std::string Encode(const std::vector<char32_t>& cps);

bool IsWhitespace(char32_t cp);

// Han ideographs, kana, hangul, and CJK/fullwidth punctuation. Under the
// whitespace+cjk scheme every such codepoint is a token on its own.
bool IsCjk(char32_t cp);

}  // namespace csc::unicode

#endif  // CSC_UNICODE_H_
