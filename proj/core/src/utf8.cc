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

#include "camo/utf8.h"

#include <algorithm>
#include <array>
#include <utility>

#include "camo/errors.h"

namespace camo {
namespace {

bool IsContinuation(unsigned char b) { return (b & 0xC0) == 0x80; }

// Decodes one code point starting at `pos`. Returns {value, length}.
std::pair<char32_t, std::size_t> DecodeOne(std::string_view text,
                                           std::size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) return {lead, 1};

  std::size_t length = 0;
  char32_t value = 0;
  char32_t min_value = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    value = lead & 0x1F;
    min_value = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    value = lead & 0x0F;
    min_value = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    value = lead & 0x07;
    min_value = 0x10000;
  } else {
    throw DecodeError("invalid UTF-8 lead byte", pos);
  }
  if (pos + length > text.size()) {
    throw DecodeError("truncated UTF-8 sequence", pos);
  }
  for (std::size_t i = 1; i < length; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if (!IsContinuation(b)) {
      throw DecodeError("invalid UTF-8 continuation byte", pos + i);
    }
    value = (value << 6) | (b & 0x3F);
  }
  if (value < min_value) throw DecodeError("overlong UTF-8 sequence", pos);
  if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
    throw DecodeError("invalid Unicode scalar value", pos);
  }
  return {value, length};
}

struct Range {
  char32_t lo;
  char32_t hi;
};

// Sorted, non-overlapping letter blocks. Coarse on purpose: the tokenizer
// only needs to keep words from non-Latin scripts together.
constexpr std::array<Range, 40> kLetterRanges = {{
    {0x00AA, 0x00AA}, {0x00B5, 0x00B5}, {0x00BA, 0x00BA},
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02AF},
    {0x0370, 0x0373}, {0x0376, 0x0377}, {0x037B, 0x037D},
    {0x0386, 0x0386}, {0x0388, 0x03FF}, {0x0400, 0x0481},
    {0x048A, 0x052F}, {0x0531, 0x0556}, {0x0561, 0x0587},
    {0x05D0, 0x05EA}, {0x0620, 0x064A}, {0x0660, 0x0669},
    {0x0671, 0x06D3}, {0x0900, 0x0DFF}, {0x0E01, 0x0E30},
    {0x10A0, 0x10FF}, {0x1100, 0x11FF}, {0x1E00, 0x1FFF},
    {0x3041, 0x3096}, {0x30A1, 0x30FA}, {0x3400, 0x4DBF},
    {0x4E00, 0x9FFF}, {0xAC00, 0xD7A3}, {0xF900, 0xFAFF},
    {0xFF10, 0xFF19}, {0xFF21, 0xFF3A}, {0xFF41, 0xFF5A},
    {0xFF66, 0xFFDC}, {0x10400, 0x1044F}, {0x1D400, 0x1D6A5},
    {0x1D6A8, 0x1D7C9}, {0x1D7CE, 0x1D7FF}, {0x20000, 0x2A6DF},
    {0x2A700, 0x2EBEF},
}};

}  // namespace

std::vector<CodePoint> DecodeUtf8(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto [value, length] = DecodeOne(text, pos);
    out.push_back({value, pos, length});
    pos += length;
  }
  return out;
}

void ValidateUtf8(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) pos += DecodeOne(text, pos).second;
}

std::size_t CodePointCount(std::string_view text) {
  std::size_t n = 0;
  for (const char c : text) {
    if (!IsContinuation(static_cast<unsigned char>(c))) ++n;
  }
  return n;
}

std::vector<std::string> SplitCodePoints(std::string_view text) {
  std::vector<std::string> out;
  for (const CodePoint& cp : DecodeUtf8(text)) {
    out.emplace_back(text.substr(cp.offset, cp.length));
  }
  return out;
}

void AppendUtf8(char32_t value, std::string* out) {
  if (value < 0x80) {
    out->push_back(static_cast<char>(value));
  } else if (value < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (value >> 6)));
    out->push_back(static_cast<char>(0x80 | (value & 0x3F)));
  } else if (value < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (value >> 12)));
    out->push_back(static_cast<char>(0x80 | ((value >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (value & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (value >> 18)));
    out->push_back(static_cast<char>(0x80 | ((value >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((value >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (value & 0x3F)));
  }
}

bool IsWordCodePoint(char32_t c) {
  if (c < 0x80) {
    return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
           (c >= U'0' && c <= U'9') || c == U'\'';
  }
  if (c == 0x2019) return true;
  const auto it = std::upper_bound(
      kLetterRanges.begin(), kLetterRanges.end(), c,
      [](char32_t v, const Range& r) { return v < r.lo; });
  if (it == kLetterRanges.begin()) return false;
  return c <= std::prev(it)->hi;
}

std::string AsciiLowerString(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view TrimAscii(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = text.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(kSpace);
  return text.substr(first, last - first + 1);
}

}  // namespace camo
