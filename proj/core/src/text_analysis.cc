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

#include "camo/text_analysis.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "camo/checksum.h"
#include "camo/embedded_data.h"
#include "camo/errors.h"
#include "camo/utf8.h"

namespace camo {
namespace {

bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v' || c == 0x00A0 || c == 0x3000 ||
         (c >= 0x2000 && c <= 0x200A);
}

// Lowercases ASCII and folds U+2019 to an ASCII apostrophe.
std::string NormalizeWord(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (const CodePoint& cp : DecodeUtf8(word)) {
    if (cp.value == 0x2019) {
      out.push_back('\'');
    } else {
      AppendUtf8(AsciiLower(cp.value), &out);
    }
  }
  return out;
}

bool IsBaseVowel(char32_t lower) {
  return lower == U'a' || lower == U'e' || lower == U'i' || lower == U'o' ||
         lower == U'u';
}

bool IsDigraph(char32_t first, char32_t second) {
  if (second == U'h') {
    return first == U't' || first == U's' || first == U'c' || first == U'p' ||
           first == U'w' || first == U'g';
  }
  return first == U'q' && second == U'u';
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  const std::vector<CodePoint> cps = DecodeUtf8(text);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    const std::size_t start = cps[i].offset;
    std::size_t j = i + 1;
    bool is_word = false;
    if (IsWordCodePoint(cps[i].value)) {
      is_word = true;
      while (j < cps.size() && IsWordCodePoint(cps[j].value)) ++j;
    } else if (IsSpace(cps[i].value)) {
      while (j < cps.size() && IsSpace(cps[j].value)) ++j;
    }
    const std::size_t end =
        j < cps.size() ? cps[j].offset : text.size();
    tokens.push_back(
        {std::string(text.substr(start, end - start)), start, end, is_word});
    i = j;
  }
  return tokens;
}

const StopwordList& StopwordList::Default() {
  static const StopwordList list =
      Parse(embedded::kDefaultStopwords, "<builtin stopwords>");
  return list;
}

StopwordList StopwordList::Parse(std::string_view content,
                                 std::string_view source_name) {
  StopwordList list;
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
      list.words_.insert(NormalizeWord(line));
    } catch (const DecodeError& e) {
      throw ParseError(std::string(source_name), line_no, e.what());
    }
  }
  return list;
}

StopwordList StopwordList::Load(const std::filesystem::path& path) {
  return Parse(ReadFileBytes(path), path.string());
}

bool StopwordList::Contains(std::string_view word) const {
  return words_.count(NormalizeWord(word)) > 0;
}

bool IsContentWord(const Token& token, const StopwordList& stopwords) {
  return token.is_word && CodePointCount(token.text) >= 3 &&
         !stopwords.Contains(token.text);
}

std::size_t ContentWordCount(const std::vector<Token>& tokens,
                             const StopwordList& stopwords) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [&](const Token& t) {
        return IsContentWord(t, stopwords);
      }));
}

std::vector<Keyword> RankKeywords(const std::vector<Token>& tokens,
                                  const StopwordList& stopwords) {
  struct Stats {
    std::size_t frequency = 0;
    std::size_t degree = 0;
  };
  std::unordered_map<std::string, Stats> stats;
  std::vector<std::size_t> occurrences;
  std::vector<std::string> keys(tokens.size());

  std::vector<std::size_t> phrase;
  auto close_phrase = [&]() {
    for (const std::size_t idx : phrase) {
      Stats& s = stats[keys[idx]];
      ++s.frequency;
      s.degree += phrase.size();
    }
    phrase.clear();
  };

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& token = tokens[i];
    if (IsContentWord(token, stopwords)) {
      keys[i] = NormalizeWord(token.text);
      phrase.push_back(i);
      occurrences.push_back(i);
    } else if (token.is_word ||
               !IsSpace(DecodeUtf8(token.text).front().value)) {
      // Stopwords, short words and punctuation end a phrase; whitespace
      // runs do not.
      close_phrase();
    }
  }
  close_phrase();

  std::vector<Keyword> ranked;
  ranked.reserve(occurrences.size());
  for (const std::size_t idx : occurrences) {
    const Stats& s = stats.at(keys[idx]);
    ranked.push_back({idx,
                      static_cast<double>(s.degree) /
                          static_cast<double>(s.frequency),
                      0});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Keyword& a, const Keyword& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.token_index < b.token_index;
                   });
  for (std::size_t r = 0; r < ranked.size(); ++r) ranked[r].rank = r + 1;
  return ranked;
}

std::vector<Keyword> ExtractKeywords(std::string_view text,
                                     std::size_t max_top_n,
                                     const StopwordList& stopwords) {
  std::vector<Keyword> ranked = RankKeywords(Tokenize(text), stopwords);
  if (ranked.size() > max_top_n) ranked.resize(max_top_n);
  return ranked;
}

std::vector<std::string> Syllabify(std::string_view word) {
  const std::vector<CodePoint> cps = DecodeUtf8(word);
  const std::size_t n = cps.size();
  std::vector<char32_t> lower(n);
  for (std::size_t i = 0; i < n; ++i) lower[i] = AsciiLower(cps[i].value);

  std::vector<bool> vowel(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (IsBaseVowel(lower[i])) {
      vowel[i] = !(lower[i] == U'u' && i > 0 && lower[i - 1] == U'q');
    } else if (lower[i] == U'y') {
      const bool left = i > 0 && IsBaseVowel(lower[i - 1]);
      const bool right = i + 1 < n && IsBaseVowel(lower[i + 1]);
      vowel[i] = !left && !right;
    }
  }

  // Nuclei as [begin, end) code point ranges.
  std::vector<std::pair<std::size_t, std::size_t>> nuclei;
  for (std::size_t i = 0; i < n;) {
    if (!vowel[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && vowel[j]) ++j;
    nuclei.emplace_back(i, j);
    i = j;
  }
  if (nuclei.size() < 2) return {std::string(word)};

  std::vector<std::size_t> cuts;  // code point index where a syllable starts
  for (std::size_t k = 0; k + 1 < nuclei.size(); ++k) {
    const std::size_t begin = nuclei[k].second;
    const std::size_t end = nuclei[k + 1].first;
    const std::size_t length = end - begin;
    if (length <= 1) {
      cuts.push_back(begin);
    } else if (IsDigraph(lower[begin], lower[begin + 1])) {
      cuts.push_back(length == 2 ? begin : begin + 2);
    } else {
      cuts.push_back(begin + 1);
    }
  }

  std::vector<std::string> syllables;
  std::size_t from = 0;
  for (const std::size_t cut : cuts) {
    const std::size_t a = cps[from].offset;
    const std::size_t b = cps[cut].offset;
    syllables.emplace_back(word.substr(a, b - a));
    from = cut;
  }
  syllables.emplace_back(word.substr(cps[from].offset));
  return syllables;
}

std::size_t TargetKeywordCount(std::size_t content_words, double word_ratio,
                               std::size_t max_top_n) {
  if (content_words == 0) return 0;
  // The epsilon keeps exact halves such as 0.15 * 10 on the upper side.
  const double scaled = word_ratio * static_cast<double>(content_words);
  const auto rounded =
      static_cast<std::size_t>(std::floor(scaled + 0.5 + 1e-9));
  return std::min(max_top_n, std::max<std::size_t>(1, rounded));
}

std::size_t TargetKeywordCount(std::string_view text, double word_ratio,
                               std::size_t max_top_n,
                               const StopwordList& stopwords) {
  return TargetKeywordCount(ContentWordCount(Tokenize(text), stopwords),
                            word_ratio, max_top_n);
}

}  // namespace camo
