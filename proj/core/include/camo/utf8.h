//
// Copyright 2026 The Camo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef CAMO_UTF8_H_
#define CAMO_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace camo {

struct CodePoint {
  char32_t value = 0;
  std::size_t offset = 0;  // byte offset in the source
  std::size_t length = 0;  // encoded length in bytes
};

// Strict decoder: rejects overlong forms, surrogates and values above
// U+10FFFF. Throws DecodeError with the offending byte offset.
std::vector<CodePoint> DecodeUtf8(std::string_view text);

// Throws DecodeError if `text` is not valid UTF-8.
void ValidateUtf8(std::string_view text);

std::size_t CodePointCount(std::string_view text);

// One string per code point, in order.
std::vector<std::string> SplitCodePoints(std::string_view text);

void AppendUtf8(char32_t value, std::string* out);

// Letters, digits and apostrophes (ASCII ' and U+2019). Letter coverage is
// block-based: Latin, Greek, Cyrillic, Armenian, Hebrew, Arabic, Indic,
// CJK, kana and Hangul ranges. Symbols and punctuation are never word
// characters.
bool IsWordCodePoint(char32_t c);

inline char32_t AsciiLower(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + (U'a' - U'A') : c;
}

std::string AsciiLowerString(std::string_view text);

// Strips ASCII whitespace from both ends.
std::string_view TrimAscii(std::string_view text);

}  // namespace camo

#endif  // CAMO_UTF8_H_
