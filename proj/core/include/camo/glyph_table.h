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

#ifndef CAMO_GLYPH_TABLE_H_
#define CAMO_GLYPH_TABLE_H_

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace camo {

enum class GlyphTier { kBasic = 0, kIntermediate = 1, kAdvanced = 2 };

std::string_view TierName(GlyphTier tier);
// Accepts "basic", "intermediate", "advanced". Throws ValidationError.
GlyphTier ParseTier(std::string_view name);

// Lowercase source code point -> candidate replacements, in file order.
using GlyphEntries = std::map<char32_t, std::vector<std::string>>;

class GlyphTable {
 public:
  GlyphTable(GlyphTier tier, GlyphEntries entries)
      : tier_(tier), entries_(std::move(entries)) {}

  GlyphTier tier() const { return tier_; }
  const GlyphEntries& entries() const { return entries_; }

  // Lookup is by lowercase source; nullptr when the character has no glyph.
  const std::vector<std::string>* Find(char32_t source) const;

 private:
  GlyphTier tier_;
  GlyphEntries entries_;
};

// The three cumulative tier tables plus the punctuation symbol set.
//
// Override files use the same syntax as the bundled defaults:
//
//   [basic]            entries this tier adds
//   a: 4 @
//   [intermediate]
//   w: VV
//   [advanced]
//   n: ∩
//   [punctuation]      whitespace-separated single-character symbols
//   - . _
//
// A section present in an override replaces that section of the base;
// absent sections are inherited. Replacements are 1-4 code points and never
// equal their source.
class GlyphBook {
 public:
  static const GlyphBook& Default();

  static GlyphBook Parse(std::string_view content,
                         std::string_view source_name = "<glyphs>",
                         const GlyphBook& base = Default());
  static GlyphBook Load(const std::filesystem::path& path,
                        const GlyphBook& base = Default());

  const GlyphTable& table(GlyphTier tier) const {
    return tables_[static_cast<int>(tier)];
  }
  const std::vector<std::string>& punctuation() const { return punctuation_; }

 private:
  GlyphBook(std::array<GlyphEntries, 3> layers,
            std::vector<std::string> punctuation);

  std::array<GlyphEntries, 3> layers_;
  std::vector<GlyphTable> tables_;
  std::vector<std::string> punctuation_;
};

}  // namespace camo

#endif  // CAMO_GLYPH_TABLE_H_
