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

// Tokenization, keyword ranking and syllabification. These decide which
// words of a text get camouflaged and where syllable boundaries fall.

#ifndef CAMO_TEXT_ANALYSIS_H_
#define CAMO_TEXT_ANALYSIS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace camo {

struct Token {
  std::string text;
  std::size_t start = 0;  // byte offset
  std::size_t end = 0;    // exclusive
  bool is_word = false;

  bool operator==(const Token&) const = default;
};

// Splits UTF-8 text into word tokens (maximal runs of letters, digits and
// apostrophes) and non-word tokens. Each non-word token is a maximal run of
// whitespace or a single other code point, so the token texts concatenate
// back to the input. Throws DecodeError on invalid UTF-8.
std::vector<Token> Tokenize(std::string_view text);

class StopwordList {
 public:
  // The bundled English list.
  static const StopwordList& Default();

  // One lowercase word per line; '#' starts a comment line.
  static StopwordList Parse(std::string_view content,
                            std::string_view source_name = "<stopwords>");
  static StopwordList Load(const std::filesystem::path& path);

  // `word` is matched case-insensitively; U+2019 counts as an apostrophe.
  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// A word token of at least three code points that is not a stopword.
bool IsContentWord(const Token& token, const StopwordList& stopwords);
std::size_t ContentWordCount(const std::vector<Token>& tokens,
                             const StopwordList& stopwords);

struct Keyword {
  std::size_t token_index = 0;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based
};

// RAKE-style ranking over content-word occurrences. Candidate phrases are
// maximal runs of content words separated only by whitespace; stopwords,
// short words and punctuation delimit them. For each distinct word
// (case-insensitive) degree is the summed length of the phrases it occurs
// in, counted per occurrence, and the score is degree / frequency. Every
// occurrence of a word carries that word's score; ties go to the earlier
// occurrence. Returns the full ranking.
std::vector<Keyword> RankKeywords(const std::vector<Token>& tokens,
                                  const StopwordList& stopwords);

// The top `max_top_n` entries of RankKeywords over Tokenize(text).
std::vector<Keyword> ExtractKeywords(
    std::string_view text, std::size_t max_top_n,
    const StopwordList& stopwords = StopwordList::Default());

// Heuristic English syllabifier. Nuclei are maximal runs of a/e/i/o/u, plus
// y when neither neighbour is one of those vowels; u after q belongs to the
// onset. A single consonant between nuclei starts the next syllable; longer
// clusters split after their first consonant, where th/sh/ch/ph/wh/gh count
// as one consonant. A word without a nucleus is one syllable. The syllables
// always concatenate back to `word`.
std::vector<std::string> Syllabify(std::string_view word);

// min(max_top_n, max(1, round_half_up(word_ratio * content_words))), or 0
// when there are no content words.
std::size_t TargetKeywordCount(std::size_t content_words, double word_ratio,
                               std::size_t max_top_n);
std::size_t TargetKeywordCount(
    std::string_view text, double word_ratio, std::size_t max_top_n,
    const StopwordList& stopwords = StopwordList::Default());

}  // namespace camo

#endif  // CAMO_TEXT_ANALYSIS_H_
