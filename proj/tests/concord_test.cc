// Copyright 2026 The lexgap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexgap/concord.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

#include "lexgap/errors.h"
#include "lexgap/morpho.h"
#include "test_util.h"

namespace lexgap::concord {
namespace {

using testing::DocumentFromText;

std::map<std::string, size_t> AsMap(const std::vector<NGramStat> &stats) {
  std::map<std::string, size_t> out;
  for (const NGramStat &stat : stats) out[stat.key.ToString()] = stat.frequency;
  return out;
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Naive recount: every window of 2 or 3 consecutive tokens inside one
// sentence, skipped if it contains punctuation or a number.
std::map<std::string, size_t> NaiveCounts(
    const std::vector<corpus::Document> &docs, size_t min_freq) {
  std::map<std::string, size_t> counts;
  for (const corpus::Document &doc : docs) {
    for (const corpus::Article &article : doc.articles) {
      for (const corpus::Sentence &sentence : article.sentences) {
        const auto &t = sentence.tokens;
        for (size_t n = 2; n <= 3; ++n) {
          for (size_t i = 0; i + n <= t.size(); ++i) {
            std::string key;
            bool clean = true;
            for (size_t k = i; k < i + n; ++k) {
              if (t[k].tag == corpus::Tag::kPunct ||
                  t[k].tag == corpus::Tag::kNum) {
                clean = false;
              }
              key += (k > i ? " " : "") + Lower(t[k].surface);
            }
            if (clean) ++counts[key];
          }
        }
      }
    }
  }
  std::erase_if(counts, [&](const auto &kv) { return kv.second < min_freq; });
  return counts;
}

TEST(ExtractNGramsTest, AbababSlidingWindow) {
  auto stats = ExtractNGrams({DocumentFromText("d", "a b a b a b")}, 2);
  std::map<std::string, size_t> expected = {
      {"a b", 3}, {"b a", 2}, {"a b a", 2}, {"b a b", 2}};
  EXPECT_EQ(AsMap(stats), expected);
  ASSERT_EQ(stats.size(), 4u);
  EXPECT_EQ(stats[0].key.ToString(), "a b");
}

TEST(ExtractNGramsTest, SingleBigram) {
  auto stats = ExtractNGrams({DocumentFromText("d", "x y")}, 1);
  ASSERT_EQ(stats.size(), 1u);
  EXPECT_EQ(stats[0].key.ToString(), "x y");
  EXPECT_EQ(stats[0].frequency, 1u);
}

TEST(ExtractNGramsTest, WindowsNeverCrossSentences) {
  auto stats = ExtractNGrams({DocumentFromText("d", "a b | a b")}, 1);
  EXPECT_EQ(AsMap(stats).count("b a"), 0u);
  EXPECT_EQ(AsMap(stats)["a b"], 2u);
}

TEST(ExtractNGramsTest, PunctuationAndNumbersBreakWindows) {
  auto stats = ExtractNGrams({DocumentFromText("d", "a , b 7 c d")}, 1);
  std::map<std::string, size_t> expected = {{"c d", 1}};
  EXPECT_EQ(AsMap(stats), expected);
}

TEST(ExtractNGramsTest, CountingFoldsCase) {
  auto stats = ExtractNGrams({DocumentFromText("d", "Má Fé | má fé")}, 2);
  ASSERT_EQ(stats.size(), 1u);
  EXPECT_EQ(stats[0].key.ToString(), "má fé");
}

TEST(ExtractNGramsTest, LocutionsAreSplitBack) {
  corpus::Token joined = testing::MakeToken("má_fé", corpus::Tag::kNoun);
  joined.is_locution = true;
  corpus::Document doc = testing::MakeDocument(
      "d", {{testing::MakeToken("de"), joined}});
  std::map<std::string, size_t> expected = {
      {"de má", 1}, {"má fé", 1}, {"de má fé", 1}};
  EXPECT_EQ(AsMap(ExtractNGrams({doc}, 1)), expected);
}

TEST(ExtractNGramsTest, OrderIsFrequencyThenKey) {
  auto stats =
      ExtractNGrams({DocumentFromText("d", "c d | c d | a b | b c")}, 1);
  std::vector<std::string> keys;
  for (const auto &stat : stats) keys.push_back(stat.key.ToString());
  std::vector<std::string> expected = {"c d", "a b", "b c"};
  EXPECT_EQ(keys, expected);
}

TEST(ExtractNGramsTest, MinFreqBelowOneIsAnError) {
  EXPECT_THROW(ExtractNGrams({DocumentFromText("d", "a b")}, 0),
               ValidationError);
}

TEST(ExtractNGramsTest, DefaultThresholdIsTen) {
  EXPECT_EQ(kDefaultMinFrequency, 10u);
}

TEST(ExtractNGramsTest, DocumentsAndSamplesAreTracked) {
  auto stats = ExtractNGrams({DocumentFromText("d1", "a b | a b | a b"),
                              DocumentFromText("d2", "a b")},
                             1, 2);
  ASSERT_EQ(stats.size(), 1u);
  EXPECT_EQ(stats[0].frequency, 4u);
  EXPECT_EQ(stats[0].documents, (std::set<std::string>{"d1", "d2"}));
  EXPECT_EQ(stats[0].samples.size(), 2u);
}

TEST(NGramPropertyTest, RandomCorporaMatchNaiveRecount) {
  std::mt19937 rng(41);
  for (int round = 0; round < 200; ++round) {
    auto docs = testing::RandomCorpus(rng);
    for (size_t min_freq : {1u, 2u, 3u}) {
      auto stats = ExtractNGrams(docs, min_freq);
      ASSERT_EQ(AsMap(stats), NaiveCounts(docs, min_freq));
      for (const NGramStat &stat : stats) {
        ASSERT_GE(stat.frequency, stat.documents.size());
        ASSERT_LE(stat.samples.size(), kDefaultSampleCap);
      }
    }
  }
}

TEST(NGramPropertyTest, BigramTotalEqualsCleanWindowCount) {
  std::mt19937 rng(43);
  for (int round = 0; round < 200; ++round) {
    auto docs = testing::RandomCorpus(rng);
    size_t total = 0;
    for (const NGramStat &stat : ExtractNGrams(docs, 1)) {
      if (stat.key.forms.size() == 2) total += stat.frequency;
    }
    size_t windows = 0;
    for (const auto &doc : docs) {
      doc.ForEachSentence([&](const auto &, const corpus::Sentence &s) {
        for (size_t i = 0; i + 1 < s.tokens.size(); ++i) {
          windows += s.tokens[i].IsWord() && s.tokens[i + 1].IsWord();
        }
      });
    }
    ASSERT_EQ(total, windows);
  }
}

TEST(NGramPropertyTest, MinFreqIsMonotone) {
  std::mt19937 rng(47);
  for (int round = 0; round < 200; ++round) {
    auto docs = testing::RandomCorpus(rng);
    for (size_t k = 1; k < 5; ++k) {
      auto lower = AsMap(ExtractNGrams(docs, k));
      for (const auto &[key, freq] : AsMap(ExtractNGrams(docs, k + 1))) {
        ASSERT_EQ(lower.count(key), 1u);
        ASSERT_EQ(lower[key], freq);
      }
    }
  }
}

TEST(NGramPropertyTest, PerDocumentMergeEqualsWholeCorpus) {
  std::mt19937 rng(53);
  for (int round = 0; round < 200; ++round) {
    auto docs = testing::RandomCorpus(rng);
    NGramCounts merged;
    for (const auto &doc : docs) {
      NGramCounts part;
      part.AddDocument(doc);
      merged.Merge(part);
    }
    auto whole = ExtractNGrams(docs, 1);
    auto combined = merged.Select(1);
    ASSERT_EQ(AsMap(combined), AsMap(whole));
    for (size_t i = 0; i < whole.size(); ++i) {
      ASSERT_EQ(combined[i].key, whole[i].key);
      ASSERT_EQ(combined[i].documents, whole[i].documents);
    }
  }
}

TEST(PrefilterTest, DropsFunctionWordBoundaries) {
  auto stats = ExtractNGrams(
      {DocumentFromText("d", "de o | defensor público | o defensor | "
                             "código de ética | código de")},
      1);
  FunctionWords words = {"de", "o"};
  std::vector<std::string> kept;
  for (const auto &stat : Prefilter(stats, words)) {
    kept.push_back(stat.key.ToString());
  }
  std::sort(kept.begin(), kept.end());
  std::vector<std::string> expected = {"código de ética", "defensor público"};
  EXPECT_EQ(kept, expected);
}

TEST(PrefilterTest, EmptySetIsIdentityAndOrderIsKept) {
  auto stats = ExtractNGrams({DocumentFromText("d", "a b c a b")}, 1);
  auto same = Prefilter(stats, {});
  ASSERT_EQ(same.size(), stats.size());
  for (size_t i = 0; i < stats.size(); ++i) {
    EXPECT_EQ(same[i].key, stats[i].key);
  }
  auto filtered = Prefilter(stats, {"c"});
  std::vector<NGramStat> oracle;
  for (const auto &stat : stats) {
    if (stat.key.forms.front() != "c" && stat.key.forms.back() != "c") {
      oracle.push_back(stat);
    }
  }
  ASSERT_EQ(filtered.size(), oracle.size());
  for (size_t i = 0; i < oracle.size(); ++i) {
    EXPECT_EQ(filtered[i].key, oracle[i].key);
  }
}

TEST(KwicTest, SentenceStartHasEmptyLeftContext) {
  auto lines = Kwic({DocumentFromText("d", "má fé anula o ato")},
                    NGramKey::FromString("má fé"), 3);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_TRUE(lines[0].left.empty());
  std::vector<std::string> right = {"anula", "o", "ato"};
  EXPECT_EQ(lines[0].right, right);
}

TEST(KwicTest, OneLinePerOccurrence) {
  std::vector<corpus::Document> docs = {
      DocumentFromText("d1", "a b a b | x a b"),
      DocumentFromText("d2", "A B")};
  auto stats = ExtractNGrams(docs, 1);
  for (const NGramStat &stat : stats) {
    EXPECT_EQ(Kwic(docs, stat.key, 2).size(), stat.frequency);
  }
  auto lines = Kwic(docs, NGramKey::FromString("a b"), 1);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0].doc, "d1");
  EXPECT_EQ(lines[1].position, 2u);
  EXPECT_EQ(lines[2].sentence, 1u);
  EXPECT_EQ(lines[3].doc, "d2");
}

// Hand-extracted windows over a 12-token fixture.
TEST(KwicTest, WindowTwoOnTwelveTokens) {
  corpus::Document doc = DocumentFromText(
      "d", "o defensor público atua , e o defensor público não age .");
  auto lines = Kwic({doc}, NGramKey::FromString("defensor público"), 2);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].left, std::vector<std::string>{"o"});
  EXPECT_EQ(lines[0].right, (std::vector<std::string>{"atua", ","}));
  EXPECT_EQ(lines[1].left, (std::vector<std::string>{"e", "o"}));
  EXPECT_EQ(lines[1].right, (std::vector<std::string>{"não", "age"}));
  EXPECT_EQ(lines[1].ToString(),
            "d:0\te o\t[defensor público]\tnão age");
}

TEST(NGramFileTest, RoundTripAndErrors) {
  auto stats = ExtractNGrams({DocumentFromText("d", "a b a b")}, 1);
  std::string tsv = FormatNGrams(stats);
  EXPECT_EQ(text::Lines(tsv)[0], "1\t2\ta b\t1");
  auto parsed = ParseNGrams(tsv);
  ASSERT_EQ(parsed.size(), stats.size());
  EXPECT_EQ(parsed[0].key, stats[0].key);
  EXPECT_THROW(ParseNGrams("1\t2\ta\t1\n"), ValidationError);
  EXPECT_THROW(ParseNGrams("1\tx\ta b\t1\n"), ValidationError);
}

}  // namespace
}  // namespace lexgap::concord
