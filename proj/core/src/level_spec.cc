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

#include "camo/level_spec.h"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "camo/checksum.h"
#include "camo/errors.h"
#include "camo/utf8.h"

namespace camo {
namespace {

enum class KeyKind { kProbability, kPositiveInt, kRatio, kMethods, kTier };

struct KeyInfo {
  std::string_view name;
  KeyKind kind;
};

constexpr std::array<KeyInfo, 13> kKeys = {{
    {"max_top_n", KeyKind::kPositiveInt},
    {"word_ratio", KeyKind::kRatio},
    {"leet_punt_prb", KeyKind::kProbability},
    {"leet_change_prb", KeyKind::kProbability},
    {"leet_change_frq", KeyKind::kProbability},
    {"leet_uniform_change", KeyKind::kProbability},
    {"punt_hyphenate_prb", KeyKind::kProbability},
    {"punt_uniform_change_prb", KeyKind::kProbability},
    {"punt_word_splitting_prb", KeyKind::kProbability},
    {"inv_max_dist", KeyKind::kPositiveInt},
    {"inv_only_max_dist_prb", KeyKind::kProbability},
    {"methods", KeyKind::kMethods},
    {"glyph_tier", KeyKind::kTier},
}};

const KeyInfo* FindKey(std::string_view name) {
  for (const KeyInfo& k : kKeys) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

std::optional<double> ParseDouble(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<long long> ParseInt(std::string_view text) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<MethodKind> ParseMethodList(std::string_view text) {
  std::vector<MethodKind> methods;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find_first_of(", \t", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    // Quoted list items are tolerated: ["basic_leetspeak", "punct_camo"].
    while (!item.empty() && (item.front() == '"' || item.front() == '[')) {
      item.remove_prefix(1);
    }
    while (!item.empty() && (item.back() == '"' || item.back() == ']')) {
      item.remove_suffix(1);
    }
    if (!item.empty()) {
      const MethodKind m = ParseMethod(item);
      if (std::find(methods.begin(), methods.end(), m) == methods.end()) {
        methods.push_back(m);
      }
    }
    pos = end + 1;
  }
  std::sort(methods.begin(), methods.end());
  return methods;
}

void CheckProbability(const std::string& what, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError(what + " must lie in [0, 1], got " + std::to_string(p));
  }
}

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

bool ScopeMatches(const Overlay::Entry& e, const LevelSpec& spec) {
  return (!e.level || *e.level == spec.level) &&
         (!e.version || *e.version == spec.version);
}

void ApplyEntry(const Overlay& overlay, const Overlay::Entry& e,
                LevelSpec* spec) {
  const std::string where = overlay.source + ":" + std::to_string(e.line);
  const bool scoped = e.level.has_value() || e.version.has_value();
  const auto require = [&](bool present, std::string_view method) {
    if (present) return true;
    if (scoped) {
      throw ConfigError(where + ": " + e.key + " requires method " +
                        std::string(method) + " at level " +
                        std::to_string(spec->level));
    }
    return false;
  };

  if (e.key == "methods") {
    spec->methods = ParseMethodList(e.value);
    if (spec->HasMethod(MethodKind::kPunctCamo)) {
      if (!spec->punct) spec->punct = CanonicalSpec(2, spec->version).punct;
    } else {
      spec->punct.reset();
    }
    if (spec->HasMethod(MethodKind::kInvCamo)) {
      if (!spec->inversion) {
        spec->inversion = CanonicalSpec(3, spec->version).inversion;
      }
    } else {
      spec->inversion.reset();
    }
  } else if (e.key == "glyph_tier") {
    spec->glyph_tier = ParseTier(e.value);
  } else if (e.key == "max_top_n") {
    spec->max_top_n = static_cast<std::size_t>(*ParseInt(e.value));
  } else if (e.key == "word_ratio") {
    spec->word_ratio = *ParseDouble(e.value);
  } else if (e.key == "leet_punt_prb") {
    spec->leet_punt_prb = *ParseDouble(e.value);
  } else if (e.key == "leet_change_prb") {
    spec->leet.change_prb = *ParseDouble(e.value);
  } else if (e.key == "leet_change_frq") {
    spec->leet.change_frq = *ParseDouble(e.value);
  } else if (e.key == "leet_uniform_change") {
    spec->leet.uniform_change = *ParseDouble(e.value);
  } else if (e.key == "punt_hyphenate_prb") {
    if (require(spec->punct.has_value(), "punct_camo")) {
      spec->punct->hyphenate_prb = *ParseDouble(e.value);
    }
  } else if (e.key == "punt_uniform_change_prb") {
    if (require(spec->punct.has_value(), "punct_camo")) {
      spec->punct->uniform_change_prb = *ParseDouble(e.value);
    }
  } else if (e.key == "punt_word_splitting_prb") {
    if (require(spec->punct.has_value(), "punct_camo")) {
      spec->punct->word_splitting_prb = *ParseDouble(e.value);
    }
  } else if (e.key == "inv_max_dist") {
    if (require(spec->inversion.has_value(), "inv_camo")) {
      spec->inversion->max_dist = static_cast<int>(*ParseInt(e.value));
    }
  } else if (e.key == "inv_only_max_dist_prb") {
    if (require(spec->inversion.has_value(), "inv_camo")) {
      spec->inversion->only_max_dist_prb = *ParseDouble(e.value);
    }
  }
}

}  // namespace

std::string_view MethodName(MethodKind method) {
  switch (method) {
    case MethodKind::kLeetspeak:
      return "leetspeak";
    case MethodKind::kPunctCamo:
      return "punct_camo";
    case MethodKind::kInvCamo:
      return "inv_camo";
  }
  return "leetspeak";
}

MethodKind ParseMethod(std::string_view name) {
  if (name == "leetspeak" || name == "basic_leetspeak" ||
      name == "intermediate_leetspeak" || name == "advanced_leetspeak") {
    return MethodKind::kLeetspeak;
  }
  if (name == "punct_camo") return MethodKind::kPunctCamo;
  if (name == "inv_camo") return MethodKind::kInvCamo;
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

std::string_view VersionName(Version version) {
  return version == Version::kV1 ? "v1" : "v2";
}

Version ParseVersion(std::string_view name) {
  if (name == "v1" || name == "1") return Version::kV1;
  if (name == "v2" || name == "2") return Version::kV2;
  throw ValidationError("unknown version '" + std::string(name) +
                        "' (expected v1 or v2)");
}

bool LevelSpec::HasMethod(MethodKind method) const {
  return std::find(methods.begin(), methods.end(), method) != methods.end();
}

LevelSpec CanonicalSpec(int level, Version version) {
  if (level < 1 || level > 3) {
    throw ConfigError("level must be 1, 2 or 3, got " + std::to_string(level));
  }
  LevelSpec spec;
  spec.level = level;
  spec.version = version;
  spec.max_top_n = version == Version::kV1 ? 5 : 20;
  spec.word_ratio = version == Version::kV1 ? 0.15 : 0.65;
  switch (level) {
    case 1:
      spec.leet_punt_prb = 0.9;
      spec.leet = {0.8, 0.8, 0.5};
      spec.methods = {MethodKind::kLeetspeak};
      spec.glyph_tier = GlyphTier::kBasic;
      break;
    case 2:
      spec.leet_punt_prb = 0.9;
      spec.leet = {0.5, 0.8, 0.6};
      spec.punct = PunctParams{0.7, 0.95, 0.8};
      spec.methods = {MethodKind::kLeetspeak, MethodKind::kPunctCamo};
      spec.glyph_tier = GlyphTier::kIntermediate;
      break;
    default:
      spec.leet_punt_prb = 0.4;
      spec.leet = {0.5, 0.8, 0.6};
      spec.punct = PunctParams{0.7, 0.95, 0.8};
      spec.inversion = InversionParams{4, 0.5};
      spec.methods = {MethodKind::kLeetspeak, MethodKind::kPunctCamo,
                      MethodKind::kInvCamo};
      spec.glyph_tier = GlyphTier::kAdvanced;
      break;
  }
  return spec;
}

bool IsCanonical(const LevelSpec& spec) {
  if (spec.level < 1 || spec.level > 3) return false;
  return spec == CanonicalSpec(spec.level, spec.version);
}

void Validate(const LevelSpec& spec) {
  const std::string at = "level " + std::to_string(spec.level) + " " +
                         std::string(VersionName(spec.version)) + ": ";
  if (spec.level < 1 || spec.level > 3) {
    throw ConfigError(at + "level must be 1, 2 or 3");
  }
  if (spec.methods.empty()) throw ConfigError(at + "method list is empty");
  if (spec.max_top_n < 1) throw ConfigError(at + "max_top_n must be >= 1");
  if (!(spec.word_ratio > 0.0 && spec.word_ratio <= 1.0)) {
    throw ConfigError(at + "word_ratio must lie in (0, 1]");
  }
  CheckProbability(at + "leet_punt_prb", spec.leet_punt_prb);
  CheckProbability(at + "leet_change_prb", spec.leet.change_prb);
  CheckProbability(at + "leet_change_frq", spec.leet.change_frq);
  CheckProbability(at + "leet_uniform_change", spec.leet.uniform_change);
  if (spec.punct.has_value() != spec.HasMethod(MethodKind::kPunctCamo)) {
    throw ConfigError(at + "punt_* parameters present iff punct_camo is");
  }
  if (spec.inversion.has_value() != spec.HasMethod(MethodKind::kInvCamo)) {
    throw ConfigError(at + "inv_* parameters present iff inv_camo is");
  }
  if (spec.punct) {
    CheckProbability(at + "punt_hyphenate_prb", spec.punct->hyphenate_prb);
    CheckProbability(at + "punt_uniform_change_prb",
                     spec.punct->uniform_change_prb);
    CheckProbability(at + "punt_word_splitting_prb",
                     spec.punct->word_splitting_prb);
  }
  if (spec.inversion) {
    if (spec.inversion->max_dist < 1) {
      throw ConfigError(at + "inv_max_dist must be >= 1");
    }
    CheckProbability(at + "inv_only_max_dist_prb",
                     spec.inversion->only_max_dist_prb);
  }
}

Overlay ParseOverrides(std::string_view content, std::string_view source_name) {
  Overlay overlay;
  overlay.source = std::string(source_name);
  const std::string& src = overlay.source;
  std::optional<int> level;
  std::optional<Version> version;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    ++line_no;
    std::string_view line = content.substr(pos, eol - pos);
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = TrimAscii(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(src, line_no, "bad section");
      std::string_view body = TrimAscii(line.substr(1, line.size() - 2));
      level.reset();
      version.reset();
      if (body == "all") continue;
      if (body.substr(0, 5) == "level") {
        body = TrimAscii(body.substr(5));
        const auto lvl = ParseInt(body.substr(0, 1));
        if (!lvl || *lvl < 1 || *lvl > 3) {
          throw ParseError(src, line_no, "level must be 1, 2 or 3");
        }
        level = static_cast<int>(*lvl);
        body = TrimAscii(body.substr(1));
      }
      if (!body.empty()) {
        if (body != "v1" && body != "v2") {
          throw ParseError(src, line_no,
                           "bad section header '" + std::string(line) + "'");
        }
        version = ParseVersion(body);
      }
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(src, line_no, "expected key = value");
    }
    const std::string key(TrimAscii(line.substr(0, eq)));
    const std::string value(TrimAscii(line.substr(eq + 1)));
    const KeyInfo* info = FindKey(key == "method" ? "methods" : key);
    if (info == nullptr) {
      throw ParseError(src, line_no, "unknown key '" + key + "'");
    }
    switch (info->kind) {
      case KeyKind::kProbability: {
        const auto v = ParseDouble(value);
        if (!v) throw ParseError(src, line_no, key + ": not a number");
        if (!(*v >= 0.0 && *v <= 1.0)) {
          throw ParseError(src, line_no,
                           key + " must lie in [0, 1], got " + value);
        }
        break;
      }
      case KeyKind::kRatio: {
        const auto v = ParseDouble(value);
        if (!v || !(*v > 0.0 && *v <= 1.0)) {
          throw ParseError(src, line_no, key + " must lie in (0, 1]");
        }
        break;
      }
      case KeyKind::kPositiveInt: {
        const auto v = ParseInt(value);
        if (!v || *v < 1 || *v > 1000000) {
          throw ParseError(src, line_no, key + " must be a positive integer");
        }
        break;
      }
      case KeyKind::kMethods:
        try {
          if (ParseMethodList(value).empty()) {
            throw ParseError(src, line_no, "method list is empty");
          }
        } catch (const ConfigError& e) {
          throw ParseError(src, line_no, e.what());
        }
        break;
      case KeyKind::kTier:
        try {
          ParseTier(value);
        } catch (const ValidationError& e) {
          throw ParseError(src, line_no, e.what());
        }
        break;
    }
    overlay.entries.push_back(
        {level, version, std::string(info->name), value, line_no});
  }
  return overlay;
}

Overlay LoadOverrides(const std::filesystem::path& path) {
  return ParseOverrides(ReadFileBytes(path), path.string());
}

LevelSpec ApplyOverlay(const Overlay& overlay, LevelSpec spec) {
  for (const auto& e : overlay.entries) {
    if (e.key == "methods" && ScopeMatches(e, spec)) {
      ApplyEntry(overlay, e, &spec);
    }
  }
  for (const auto& e : overlay.entries) {
    if (e.key != "methods" && ScopeMatches(e, spec)) {
      ApplyEntry(overlay, e, &spec);
    }
  }
  Validate(spec);
  return spec;
}

SpecSet SpecSet::Canonical() {
  SpecSet set;
  for (int level = 1; level <= 3; ++level) {
    for (const Version v : {Version::kV1, Version::kV2}) {
      set.specs_[(level - 1) * 2 + static_cast<int>(v)] =
          CanonicalSpec(level, v);
    }
  }
  return set;
}

SpecSet SpecSet::WithOverlay(const Overlay& overlay) const {
  SpecSet out = *this;
  for (LevelSpec& spec : out.specs_) spec = ApplyOverlay(overlay, spec);
  return out;
}

const LevelSpec& SpecSet::Get(int level, Version version) const {
  if (level < 1 || level > 3) {
    throw ConfigError("level must be 1, 2 or 3, got " + std::to_string(level));
  }
  return specs_[(level - 1) * 2 + static_cast<int>(version)];
}

bool SpecSet::AllCanonical() const {
  return std::all_of(specs_.begin(), specs_.end(), IsCanonical);
}

std::vector<std::pair<std::string, std::string>> OverrideKeyDefaults() {
  std::vector<std::pair<std::string, std::string>> out;
  const LevelSpec l1 = CanonicalSpec(1, Version::kV1);
  const LevelSpec l2 = CanonicalSpec(2, Version::kV1);
  const LevelSpec l3 = CanonicalSpec(3, Version::kV1);
  const auto per_level = [&](auto get) {
    std::string s;
    for (const LevelSpec* spec : {&l1, &l2, &l3}) {
      const std::optional<double> v = get(*spec);
      if (!s.empty()) s += ", ";
      s += "L" + std::to_string(spec->level) + " " +
           (v ? FormatNumber(*v) : std::string("n/a"));
    }
    return s;
  };
  using Opt = std::optional<double>;
  out.emplace_back("max_top_n", "v1 5, v2 20");
  out.emplace_back("word_ratio", "v1 0.15, v2 0.65");
  out.emplace_back("leet_punt_prb", per_level([](const LevelSpec& s) -> Opt {
                     return s.leet_punt_prb;
                   }));
  out.emplace_back("leet_change_prb", per_level([](const LevelSpec& s) -> Opt {
                     return s.leet.change_prb;
                   }));
  out.emplace_back("leet_change_frq", per_level([](const LevelSpec& s) -> Opt {
                     return s.leet.change_frq;
                   }));
  out.emplace_back("leet_uniform_change",
                   per_level([](const LevelSpec& s) -> Opt {
                     return s.leet.uniform_change;
                   }));
  out.emplace_back("punt_hyphenate_prb",
                   per_level([](const LevelSpec& s) -> Opt {
                     if (!s.punct) return std::nullopt;
                     return s.punct->hyphenate_prb;
                   }));
  out.emplace_back("punt_uniform_change_prb",
                   per_level([](const LevelSpec& s) -> Opt {
                     if (!s.punct) return std::nullopt;
                     return s.punct->uniform_change_prb;
                   }));
  out.emplace_back("punt_word_splitting_prb",
                   per_level([](const LevelSpec& s) -> Opt {
                     if (!s.punct) return std::nullopt;
                     return s.punct->word_splitting_prb;
                   }));
  out.emplace_back("inv_max_dist", per_level([](const LevelSpec& s) -> Opt {
                     if (!s.inversion) return std::nullopt;
                     return s.inversion->max_dist;
                   }));
  out.emplace_back("inv_only_max_dist_prb",
                   per_level([](const LevelSpec& s) -> Opt {
                     if (!s.inversion) return std::nullopt;
                     return s.inversion->only_max_dist_prb;
                   }));
  return out;
}

}  // namespace camo
