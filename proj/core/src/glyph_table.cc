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

#include "camo/glyph_table.h"

#include <algorithm>
#include <optional>

#include "camo/checksum.h"
#include "camo/embedded_data.h"
#include "camo/errors.h"
#include "camo/utf8.h"

namespace camo {
namespace {

constexpr int kPunctuationSection = 3;

std::vector<std::string_view> SplitWhitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    out.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

struct ParsedFile {
  std::array<std::optional<GlyphEntries>, 3> layers;
  std::optional<std::vector<std::string>> punctuation;
};

ParsedFile ParseSections(std::string_view content, std::string_view source) {
  ParsedFile parsed;
  const std::string src(source);
  int section = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    ++line_no;
    const std::string_view line = TrimAscii(content.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;

    try {
      ValidateUtf8(line);
    } catch (const DecodeError& e) {
      throw ParseError(src, line_no, e.what());
    }

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(src, line_no, "bad section");
      const std::string_view name = TrimAscii(line.substr(1, line.size() - 2));
      if (name == "punctuation") {
        section = kPunctuationSection;
        parsed.punctuation.emplace();
      } else {
        try {
          section = static_cast<int>(ParseTier(name));
        } catch (const ValidationError&) {
          throw ParseError(src, line_no,
                           "unknown section '" + std::string(name) + "'");
        }
        parsed.layers[section].emplace();
      }
      continue;
    }
    if (section < 0) {
      throw ParseError(src, line_no, "entry outside of a section");
    }

    if (section == kPunctuationSection) {
      for (const std::string_view symbol : SplitWhitespace(line)) {
        const auto cps = DecodeUtf8(symbol);
        const bool apostrophe =
            cps.size() == 1 && (cps[0].value == U'\'' || cps[0].value == 0x2019);
        if (cps.size() != 1 || (IsWordCodePoint(cps[0].value) && !apostrophe)) {
          throw ParseError(src, line_no,
                           "punctuation symbols must be single non-alphanumeric "
                           "characters: '" + std::string(symbol) + "'");
        }
        parsed.punctuation->emplace_back(symbol);
      }
      continue;
    }

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos || colon == 0) {
      throw ParseError(src, line_no, "expected 'source: replacements'");
    }
    const std::string_view key = TrimAscii(line.substr(0, colon));
    const auto key_cps = DecodeUtf8(key);
    if (key_cps.size() != 1) {
      throw ParseError(src, line_no, "source must be a single character");
    }
    const char32_t source_cp = AsciiLower(key_cps[0].value);
    const auto replacements = SplitWhitespace(line.substr(colon + 1));
    if (replacements.empty()) {
      throw ParseError(src, line_no, "entry has no replacements");
    }
    std::vector<std::string>& slot = (*parsed.layers[section])[source_cp];
    for (const std::string_view repl : replacements) {
      const auto repl_cps = DecodeUtf8(repl);
      if (repl_cps.empty() || repl_cps.size() > 4) {
        throw ParseError(src, line_no,
                         "replacement must be 1-4 characters: '" +
                             std::string(repl) + "'");
      }
      if (repl_cps.size() == 1 &&
          AsciiLower(repl_cps[0].value) == source_cp) {
        throw ParseError(src, line_no, "replacement equals its source");
      }
      if (std::find(slot.begin(), slot.end(), repl) == slot.end()) {
        slot.emplace_back(repl);
      }
    }
  }
  return parsed;
}

}  // namespace

std::string_view TierName(GlyphTier tier) {
  switch (tier) {
    case GlyphTier::kBasic:
      return "basic";
    case GlyphTier::kIntermediate:
      return "intermediate";
    case GlyphTier::kAdvanced:
      return "advanced";
  }
  return "basic";
}

GlyphTier ParseTier(std::string_view name) {
  if (name == "basic") return GlyphTier::kBasic;
  if (name == "intermediate") return GlyphTier::kIntermediate;
  if (name == "advanced") return GlyphTier::kAdvanced;
  throw ValidationError("unknown glyph tier '" + std::string(name) + "'");
}

const std::vector<std::string>* GlyphTable::Find(char32_t source) const {
  const auto it = entries_.find(AsciiLower(source));
  return it == entries_.end() ? nullptr : &it->second;
}

GlyphBook::GlyphBook(std::array<GlyphEntries, 3> layers,
                     std::vector<std::string> punctuation)
    : layers_(std::move(layers)), punctuation_(std::move(punctuation)) {
  GlyphEntries cumulative;
  for (int t = 0; t < 3; ++t) {
    for (const auto& [source, glyphs] : layers_[t]) {
      std::vector<std::string>& slot = cumulative[source];
      for (const std::string& g : glyphs) {
        if (std::find(slot.begin(), slot.end(), g) == slot.end()) {
          slot.push_back(g);
        }
      }
    }
    tables_.emplace_back(static_cast<GlyphTier>(t), cumulative);
  }
  if (punctuation_.empty()) {
    throw ConfigError("punctuation symbol set must not be empty");
  }
}

const GlyphBook& GlyphBook::Default() {
  static const GlyphBook book = [] {
    ParsedFile parsed =
        ParseSections(embedded::kDefaultGlyphs, "<builtin glyphs>");
    std::array<GlyphEntries, 3> layers;
    for (int t = 0; t < 3; ++t) layers[t] = parsed.layers[t].value_or(GlyphEntries{});
    return GlyphBook(std::move(layers), parsed.punctuation.value_or(
                                            std::vector<std::string>{}));
  }();
  return book;
}

GlyphBook GlyphBook::Parse(std::string_view content,
                           std::string_view source_name,
                           const GlyphBook& base) {
  ParsedFile parsed = ParseSections(content, source_name);
  std::array<GlyphEntries, 3> layers = base.layers_;
  for (int t = 0; t < 3; ++t) {
    if (parsed.layers[t]) layers[t] = std::move(*parsed.layers[t]);
  }
  std::vector<std::string> punctuation =
      parsed.punctuation ? std::move(*parsed.punctuation) : base.punctuation_;
  return GlyphBook(std::move(layers), std::move(punctuation));
}

GlyphBook GlyphBook::Load(const std::filesystem::path& path,
                          const GlyphBook& base) {
  return Parse(ReadFileBytes(path), path.string(), base);
}

}  // namespace camo
