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

#include "camo/engines.h"

#include <algorithm>
#include <utility>

#include "camo/errors.h"
#include "camo/utf8.h"

namespace camo {
namespace {

const std::string& Pick(const std::vector<std::string>& options, Rng& rng) {
  return options[rng.UniformInt(options.size())];
}

std::optional<std::string> RunEngine(MethodKind method, std::string_view word,
                                     const LevelSpec& spec,
                                     const GlyphBook& glyphs, Rng& rng) {
  switch (method) {
    case MethodKind::kLeetspeak:
      return LeetCamouflage(word, glyphs.table(spec.glyph_tier), spec, rng);
    case MethodKind::kPunctCamo:
      return PunctTransform(word, spec, glyphs.punctuation(), rng);
    case MethodKind::kInvCamo:
      return InvertSyllables(word, spec, rng);
  }
  return std::nullopt;
}

}  // namespace

MethodKind SelectMethod(const LevelSpec& spec, Rng& rng) {
  if (spec.methods.empty()) throw ConfigError("method list is empty");
  const double u = rng.Uniform01();
  const bool has_leet = spec.HasMethod(MethodKind::kLeetspeak);
  if (has_leet && (u < spec.leet_punt_prb || spec.methods.size() == 1)) {
    return MethodKind::kLeetspeak;
  }
  std::vector<MethodKind> rest;
  for (const MethodKind m : spec.methods) {
    if (m != MethodKind::kLeetspeak) rest.push_back(m);
  }
  if (rest.size() == 1) return rest.front();
  return rest[rng.UniformInt(rest.size())];
}

std::string LeetTransform(std::string_view word, const GlyphTable& table,
                          const LevelSpec& spec, Rng& rng) {
  const std::vector<CodePoint> cps = DecodeUtf8(word);
  std::vector<std::string> out;
  out.reserve(cps.size());
  for (const CodePoint& cp : cps) {
    out.emplace_back(word.substr(cp.offset, cp.length));
  }

  std::vector<char32_t> classes;
  for (const CodePoint& cp : cps) {
    const char32_t lower = AsciiLower(cp.value);
    if (table.Find(lower) != nullptr &&
        std::find(classes.begin(), classes.end(), lower) == classes.end()) {
      classes.push_back(lower);
    }
  }

  for (const char32_t cls : classes) {
    if (!rng.Bernoulli(spec.leet.change_prb)) continue;
    const std::vector<std::string>& options = *table.Find(cls);
    const bool shared = rng.Bernoulli(spec.leet.uniform_change);
    const std::string* shared_glyph = shared ? &Pick(options, rng) : nullptr;
    for (std::size_t k = 0; k < cps.size(); ++k) {
      if (AsciiLower(cps[k].value) != cls) continue;
      if (!rng.Bernoulli(spec.leet.change_frq)) continue;
      out[k] = shared ? *shared_glyph : Pick(options, rng);
    }
  }

  std::string result;
  for (const std::string& piece : out) result += piece;
  return result;
}

std::optional<std::string> LeetCamouflage(std::string_view word,
                                          const GlyphTable& table,
                                          const LevelSpec& spec, Rng& rng) {
  const std::vector<CodePoint> cps = DecodeUtf8(word);
  std::vector<std::size_t> eligible;
  for (std::size_t k = 0; k < cps.size(); ++k) {
    if (table.Find(AsciiLower(cps[k].value)) != nullptr) eligible.push_back(k);
  }
  if (eligible.empty()) return std::nullopt;

  std::string result = LeetTransform(word, table, spec, rng);
  if (result != word) return result;

  const std::size_t k = eligible[rng.UniformInt(eligible.size())];
  const std::string& glyph = Pick(*table.Find(AsciiLower(cps[k].value)), rng);
  result = std::string(word.substr(0, cps[k].offset));
  result += glyph;
  result += word.substr(cps[k].offset + cps[k].length);
  return result;
}

std::string ApplyPunctPlan(std::string_view word, const PunctPlan& plan) {
  const std::vector<CodePoint> cps = DecodeUtf8(word);
  std::string out;
  std::size_t next = 0;
  for (std::size_t k = 0; k < cps.size(); ++k) {
    while (next < plan.points.size() && plan.points[next] == k) {
      out += plan.separators[next];
      ++next;
    }
    out += word.substr(cps[k].offset, cps[k].length);
  }
  return out;
}

std::optional<std::string> PunctTransform(
    std::string_view word, const LevelSpec& spec,
    const std::vector<std::string>& symbols, Rng& rng) {
  if (!spec.punct || symbols.empty()) return std::nullopt;
  const std::size_t length = CodePointCount(word);
  if (length < 2) return std::nullopt;
  const PunctParams& p = *spec.punct;

  PunctPlan plan;
  if (rng.Bernoulli(p.hyphenate_prb)) {
    std::size_t at = 0;
    const std::vector<std::string> syllables = Syllabify(word);
    for (std::size_t s = 0; s + 1 < syllables.size(); ++s) {
      at += CodePointCount(syllables[s]);
      plan.points.push_back(at);
    }
  }
  if (plan.points.empty()) {
    for (std::size_t k = 1; k < length; ++k) plan.points.push_back(k);
  }
  // Unreachable for length >= 2, kept so a plan is never empty.
  if (plan.points.empty()) plan.points.push_back(length / 2);

  const bool uniform = rng.Bernoulli(p.uniform_change_prb);
  const std::string shared = uniform ? Pick(symbols, rng) : std::string();
  const bool splitting = rng.Bernoulli(p.word_splitting_prb);
  for (std::size_t m = 0; m < plan.points.size(); ++m) {
    const std::string symbol = uniform ? shared : Pick(symbols, rng);
    plan.separators.push_back(splitting ? " " + symbol + " " : symbol);
  }
  return ApplyPunctPlan(word, plan);
}

std::string SwapSyllables(std::string_view word, std::size_t i,
                          std::size_t j) {
  std::vector<std::string> syllables = Syllabify(word);
  if (i >= syllables.size() || j >= syllables.size()) {
    throw ValidationError("syllable index out of range for '" +
                          std::string(word) + "'");
  }
  std::swap(syllables[i], syllables[j]);
  std::string out;
  for (const std::string& s : syllables) out += s;
  return out;
}

std::optional<std::string> InvertSyllables(std::string_view word,
                                           const LevelSpec& spec, Rng& rng) {
  if (!spec.inversion) return std::nullopt;
  const std::vector<std::string> syllables = Syllabify(word);
  const std::size_t n = syllables.size();
  if (n < 2) return std::nullopt;
  const std::size_t max_dist = std::min<std::size_t>(
      static_cast<std::size_t>(spec.inversion->max_dist), n - 1);

  std::size_t dist = max_dist;
  if (!rng.Bernoulli(spec.inversion->only_max_dist_prb)) {
    dist = 1 + rng.UniformInt(max_dist);
  }
  const std::size_t i = rng.UniformInt(n - dist);
  std::string out = SwapSyllables(word, i, i + dist);
  if (out != word) return out;

  std::vector<std::string> changing;
  for (std::size_t d = 1; d <= max_dist; ++d) {
    for (std::size_t s = 0; s + d < n; ++s) {
      std::string candidate = SwapSyllables(word, s, s + d);
      if (candidate != word) changing.push_back(std::move(candidate));
    }
  }
  if (changing.empty()) return std::nullopt;
  return changing[rng.UniformInt(changing.size())];
}

std::optional<WordCamouflage> CamouflageWord(std::string_view word,
                                             const LevelSpec& spec,
                                             const GlyphBook& glyphs,
                                             Rng& rng) {
  const MethodKind first = SelectMethod(spec, rng);
  if (auto out = RunEngine(first, word, spec, glyphs, rng)) {
    return WordCamouflage{std::move(*out), first};
  }
  for (const MethodKind m : spec.methods) {
    if (m == first) continue;
    if (auto out = RunEngine(m, word, spec, glyphs, rng)) {
      return WordCamouflage{std::move(*out), m};
    }
  }
  return std::nullopt;
}

std::optional<ModificationRecord> CamouflageToken(
    const Token& token, std::size_t token_index, std::string_view instance_id,
    const LevelSpec& spec, const GlyphBook& glyphs, Rng& rng) {
  auto camo = CamouflageWord(token.text, spec, glyphs, rng);
  if (!camo) return std::nullopt;
  ModificationRecord record;
  record.instance_id = std::string(instance_id);
  record.token_index = token_index;
  record.start = token.start;
  record.end = token.end;
  record.original = token.text;
  record.replacement = std::move(camo->text);
  record.method = camo->method;
  record.level = spec.level;
  record.version = spec.version;
  return record;
}

}  // namespace camo
