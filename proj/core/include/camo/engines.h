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

// The three word camouflage transforms.
//
// Every engine takes the caller's Rng and consumes draws in a fixed,
// documented order, so (word, spec, rng state) determines the output. Per
// word the stream is: SelectMethod, then the draws of the engine that runs,
// then those of any fallback engine.
//
// Engines return std::nullopt as the "no-op" signal when they cannot change
// the word (no substitutable character, a single character, one syllable).

#ifndef CAMO_ENGINES_H_
#define CAMO_ENGINES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "camo/glyph_table.h"
#include "camo/level_spec.h"
#include "camo/rng.h"
#include "camo/text_analysis.h"

namespace camo {

struct ModificationRecord {
  std::string instance_id;
  std::size_t token_index = 0;
  std::size_t start = 0;  // byte span in the original text
  std::size_t end = 0;
  std::string original;
  std::string replacement;
  MethodKind method = MethodKind::kLeetspeak;
  int level = 1;
  Version version = Version::kV1;

  bool operator==(const ModificationRecord&) const = default;
};

// One Uniform01 draw: leetspeak when it falls below leet_punt_prb, else one
// of the remaining methods (an extra UniformInt draw when there are two or
// more). Throws ConfigError on an empty method list.
MethodKind SelectMethod(const LevelSpec& spec, Rng& rng);

// Stochastic leetspeak without the forced-change rule. Draw order: for each
// substitutable class (lowercase character with a glyph entry) in order of
// first appearance, Bernoulli(change_prb); if active, Bernoulli(uniform_change)
// and, when shared, one glyph index; then per occurrence Bernoulli(change_frq)
// and, when replaced and not shared, a glyph index.
std::string LeetTransform(std::string_view word, const GlyphTable& table,
                          const LevelSpec& spec, Rng& rng);

// LeetTransform plus the forced-change rule: an unchanged result gets one
// substitution at a uniformly chosen substitutable position. nullopt when
// the word has no substitutable character.
std::optional<std::string> LeetCamouflage(std::string_view word,
                                          const GlyphTable& table,
                                          const LevelSpec& spec, Rng& rng);

// Punctuation insertion. Draw order: Bernoulli(hyphenate_prb),
// Bernoulli(uniform_change_prb), the shared symbol index if uniform,
// Bernoulli(word_splitting_prb), then one symbol index per point if not
// uniform. Hyphenation uses syllable boundaries and falls back to every
// gap for one-syllable words. nullopt for words shorter than two
// characters or specs without punct parameters.
std::optional<std::string> PunctTransform(
    std::string_view word, const LevelSpec& spec,
    const std::vector<std::string>& symbols, Rng& rng);

// Code point indices at which `separators[k]` is inserted before
// character k of `word`. Exposed for the strip round-trip tests.
struct PunctPlan {
  std::vector<std::size_t> points;
  std::vector<std::string> separators;
};
std::string ApplyPunctPlan(std::string_view word, const PunctPlan& plan);

// Swaps syllables `i` and `j` (0-based) of Syllabify(word).
std::string SwapSyllables(std::string_view word, std::size_t i, std::size_t j);

// Syllable inversion. Draw order: Bernoulli(only_max_dist_prb), a distance
// index unless the maximum was taken, then the start index. If the chosen
// swap leaves the word unchanged, one of the changing (start, distance)
// pairs is drawn uniformly instead. nullopt when no swap changes the word.
std::optional<std::string> InvertSyllables(std::string_view word,
                                           const LevelSpec& spec, Rng& rng);

struct WordCamouflage {
  std::string text;
  MethodKind method = MethodKind::kLeetspeak;
};

// SelectMethod, then the chosen engine; on a no-op the other configured
// methods are tried in MethodKind order. The result always differs from
// `word`; nullopt when no configured method can change it.
std::optional<WordCamouflage> CamouflageWord(std::string_view word,
                                             const LevelSpec& spec,
                                             const GlyphBook& glyphs,
                                             Rng& rng);

// CamouflageWord on a token, with its modification record.
std::optional<ModificationRecord> CamouflageToken(
    const Token& token, std::size_t token_index, std::string_view instance_id,
    const LevelSpec& spec, const GlyphBook& glyphs, Rng& rng);

}  // namespace camo

#endif  // CAMO_ENGINES_H_
