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

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "camo/dataset.h"
#include "camo/errors.h"
#include "test_util.h"

namespace camo {
namespace {

std::vector<std::string> Texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

TEST(TokenizeTest, SplitsWordsSpacesAndSymbols) {
  const auto tokens = Tokenize("Don't  panic, it's 42!");
  EXPECT_EQ(Texts(tokens),
            (std::vector<std::string>{"Don't", "  ", "panic", ",", " ", "it's",
                                      " ", "42", "!"}));
  EXPECT_TRUE(tokens[0].is_word);
  EXPECT_FALSE(tokens[1].is_word);
  EXPECT_FALSE(tokens[3].is_word);
  EXPECT_EQ(tokens[2].start, 7u);
  EXPECT_EQ(tokens[2].end, 12u);
}

TEST(TokenizeTest, OffsetsCoverTextExactly) {
  const std::string text = "Caf\xC3\xA9 \xE2\x82\xAC" "5 -- ok\n\tnext";
  std::string rebuilt;
  std::size_t pos = 0;
  for (const Token& t : Tokenize(text)) {
    EXPECT_EQ(t.start, pos);
    EXPECT_EQ(text.substr(t.start, t.end - t.start), t.text);
    rebuilt += t.text;
    pos = t.end;
  }
  EXPECT_EQ(rebuilt, text);
}

TEST(StopwordTest, DefaultList) {
  const StopwordList& sw = StopwordList::Default();
  EXPECT_EQ(sw.size(), 179u);
  EXPECT_TRUE(sw.Contains("the"));
  EXPECT_TRUE(sw.Contains("The"));
  EXPECT_TRUE(sw.Contains("you're"));
  EXPECT_TRUE(sw.Contains("you\xE2\x80\x99re"));
  EXPECT_FALSE(sw.Contains("news"));
}

TEST(StopwordTest, ParseCustom) {
  const StopwordList sw = StopwordList::Parse("# comment\nFoo\n\n  bar  \n");
  EXPECT_EQ(sw.size(), 2u);
  EXPECT_TRUE(sw.Contains("foo"));
  EXPECT_TRUE(sw.Contains("BAR"));
  EXPECT_FALSE(sw.Contains("the"));
}

TEST(ContentWordTest, Rules) {
  const StopwordList& sw = StopwordList::Default();
  const auto tokens = Tokenize("The big cat ran to a hidden den, ok?");
  EXPECT_EQ(ContentWordCount(tokens, sw), 5u);  // big cat ran hidden den
  EXPECT_FALSE(IsContentWord(tokens[0], sw));
  EXPECT_TRUE(IsContentWord(tokens[2], sw));
  EXPECT_FALSE(IsContentWord({",", 0, 1, false}, sw));
}

// Phrases: [fake news] and [fake claims spread]. fake: deg 5 / freq 2;
// news: 2/1; claims, spread: 3/1.
TEST(KeywordTest, HandComputedRanking) {
  const auto tokens = Tokenize("Fake news and fake claims spread");
  const auto ranked = RankKeywords(tokens, StopwordList::Default());
  ASSERT_EQ(ranked.size(), 5u);
  const std::vector<std::size_t> order = {8, 10, 0, 6, 2};
  const std::vector<double> scores = {3.0, 3.0, 2.5, 2.5, 2.0};
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    EXPECT_EQ(ranked[r].token_index, order[r]);
    EXPECT_DOUBLE_EQ(ranked[r].score, scores[r]);
    EXPECT_EQ(ranked[r].rank, r + 1);
  }
}

TEST(KeywordTest, PunctuationSplitsPhrasesWhitespaceDoesNot) {
  const auto joined = RankKeywords(Tokenize("alpha   beta\tgamma"),
                                   StopwordList::Default());
  for (const Keyword& k : joined) EXPECT_DOUBLE_EQ(k.score, 3.0);
  const auto split = RankKeywords(Tokenize("alpha, beta; gamma"),
                                  StopwordList::Default());
  for (const Keyword& k : split) EXPECT_DOUBLE_EQ(k.score, 1.0);
}

TEST(KeywordTest, ExtractCaps) {
  const auto top = ExtractKeywords(
      "one alpha beta gamma delta epsilon zeta eta theta", 3);
  EXPECT_EQ(top.size(), 3u);
  EXPECT_TRUE(ExtractKeywords("the and of", 5).empty());
}

// Independent scorer over ASCII text: words are [A-Za-z0-9'] runs, any
// other non-space character ends a phrase.
std::vector<std::pair<std::string, double>> OracleRake(const std::string& text) {
  const StopwordList& sw = StopwordList::Default();
  std::vector<std::string> words;
  std::vector<int> phrase_of;
  int phrase = 0;
  bool open = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalnum(c) || c == '\'') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '\'')) {
        ++j;
      }
      const std::string w = text.substr(i, j - i);
      if (w.size() >= 3 && !sw.Contains(w)) {
        if (!open) ++phrase;
        open = true;
        words.push_back(w);
        phrase_of.push_back(phrase);
      } else {
        open = false;
      }
      i = j;
    } else {
      if (!std::isspace(c)) open = false;
      ++i;
    }
  }
  std::map<int, int> phrase_len;
  for (int p : phrase_of) ++phrase_len[p];
  std::map<std::string, double> freq, degree;
  for (std::size_t k = 0; k < words.size(); ++k) {
    std::string key = words[k];
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    freq[key] += 1;
    degree[key] += phrase_len[phrase_of[k]];
  }
  std::vector<std::pair<std::string, double>> out;
  for (const std::string& w : words) {
    std::string key = w;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    out.emplace_back(w, degree[key] / freq[key]);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  return out;
}

TEST(KeywordTest, MatchesOracleOnCorpus) {
  const auto data = ReadDataset(testing::CorpusPath("test.jsonl"));
  for (std::size_t n = 0; n < 300 && n < data.size(); ++n) {
    const std::string& text = data[n].text;
    const auto tokens = Tokenize(text);
    const auto ranked = RankKeywords(tokens, StopwordList::Default());
    const auto oracle = OracleRake(text);
    ASSERT_EQ(ranked.size(), oracle.size()) << text;
    for (std::size_t r = 0; r < ranked.size(); ++r) {
      EXPECT_EQ(tokens[ranked[r].token_index].text, oracle[r].first) << text;
      EXPECT_DOUBLE_EQ(ranked[r].score, oracle[r].second) << text;
    }
  }
}

TEST(SyllabifyTest, KnownWords) {
  using V = std::vector<std::string>;
  EXPECT_EQ(Syllabify("Methodology"), (V{"Me", "tho", "do", "lo", "gy"}));
  EXPECT_EQ(Syllabify("fake"), (V{"fa", "ke"}));
  EXPECT_EQ(Syllabify("news"), (V{"news"}));
  EXPECT_EQ(Syllabify("vaccine"), (V{"vac", "ci", "ne"}));
  EXPECT_EQ(Syllabify("question"), (V{"ques", "tion"}));
  EXPECT_EQ(Syllabify("rhythm"), (V{"rhythm"}));
  EXPECT_EQ(Syllabify("mother"), (V{"mo", "ther"}));
  EXPECT_EQ(Syllabify("a"), (V{"a"}));
}

TEST(SyllabifyTest, ConcatenationIsIdentity) {
  const auto data = ReadDataset(testing::CorpusPath("test.jsonl"));
  for (std::size_t n = 0; n < 200; ++n) {
    for (const Token& t : Tokenize(data[n].text)) {
      if (!t.is_word) continue;
      std::string joined;
      for (const std::string& s : Syllabify(t.text)) {
        EXPECT_FALSE(s.empty());
        joined += s;
      }
      EXPECT_EQ(joined, t.text);
    }
  }
}

TEST(TargetCountTest, RoundingAndCaps) {
  EXPECT_EQ(TargetKeywordCount(10, 0.15, 5), 2u);   // 1.5 rounds up
  EXPECT_EQ(TargetKeywordCount(10, 0.65, 20), 7u);  // 6.5 rounds up
  EXPECT_EQ(TargetKeywordCount(100, 0.15, 5), 5u);
  EXPECT_EQ(TargetKeywordCount(100, 0.65, 20), 20u);
  EXPECT_EQ(TargetKeywordCount(3, 0.15, 5), 1u);
  EXPECT_EQ(TargetKeywordCount(0, 0.65, 20), 0u);
  EXPECT_EQ(TargetKeywordCount("Fake news spreads quickly online", 0.65, 20),
            3u);
}

}  // namespace
}  // namespace camo
