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

#ifndef LEXGAP_CONCORD_H_
#define LEXGAP_CONCORD_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexgap/corpus.h"

namespace lexgap::concord {

// Two or three case-folded word forms.
struct NGramKey {
  std::vector<std::string> forms;

  std::string ToString() const;  // forms joined by single spaces
  static NGramKey FromString(std::string_view text);

  friend auto operator<=>(const NGramKey &, const NGramKey &) = default;
  friend bool operator==(const NGramKey &, const NGramKey &) = default;
};

struct Occurrence {
  std::string doc;
  size_t sentence = 0;
  size_t position = 0;  // index of the first form within the sentence

  friend auto operator<=>(const Occurrence &, const Occurrence &) = default;
  friend bool operator==(const Occurrence &, const Occurrence &) = default;
};

struct NGramStat {
  NGramKey key;
  size_t frequency = 0;
  std::set<std::string> documents;
  std::vector<Occurrence> samples;
};

inline constexpr size_t kDefaultMinFrequency = 10;
inline constexpr size_t kDefaultSampleCap = 10;

// Accumulates n-gram counts. Merging is associative and commutative apart
// from which samples survive the cap.
class NGramCounts {
 public:
  explicit NGramCounts(size_t sample_cap = kDefaultSampleCap)
      : sample_cap_(sample_cap) {}

  void AddDocument(const corpus::Document &doc);
  void Merge(const NGramCounts &other);

  // Keys with frequency >= min_freq, by frequency desc then key asc.
  std::vector<NGramStat> Select(size_t min_freq) const;

  size_t size() const { return stats_.size(); }

 private:
  void Record(const NGramKey &key, const Occurrence &at);

  size_t sample_cap_;
  std::map<NGramKey, NGramStat> stats_;
};

// The word forms of a sentence as the extractor sees them. Joined
// locutions are split back into their components; PUNCT and NUM tokens
// are kept as empty strings so that windows never span them.
std::vector<std::string> WindowForms(const corpus::Sentence &sentence);

std::vector<NGramStat> ExtractNGrams(
    const std::vector<corpus::Document> &corpus,
    size_t min_freq = kDefaultMinFrequency,
    size_t sample_cap = kDefaultSampleCap);

using FunctionWords = std::unordered_set<std::string>;

FunctionWords LoadFunctionWords(const std::filesystem::path &path);
FunctionWords ParseFunctionWords(std::string_view contents);

// Drops keys that start or end with a function word. Order is preserved.
std::vector<NGramStat> Prefilter(std::vector<NGramStat> stats,
                                 const FunctionWords &function_words);

struct ConcordanceLine {
  std::string doc;
  size_t sentence = 0;
  size_t position = 0;
  std::vector<std::string> left;
  std::vector<std::string> match;
  std::vector<std::string> right;

  std::string ToString() const;
};

std::vector<ConcordanceLine> Kwic(const std::vector<corpus::Document> &corpus,
                                  const NGramKey &key, size_t window);

// TSV: rank, frequency, space-joined ngram, document count.
std::string FormatNGrams(const std::vector<NGramStat> &stats);
void WriteNGrams(const std::filesystem::path &path,
                 const std::vector<NGramStat> &stats);
std::vector<NGramStat> ParseNGrams(std::string_view contents,
                                   const std::string &name = "ngrams.tsv");
std::vector<NGramStat> ReadNGrams(const std::filesystem::path &path);

}  // namespace lexgap::concord

#endif  // LEXGAP_CONCORD_H_
