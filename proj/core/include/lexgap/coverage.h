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

#ifndef LEXGAP_COVERAGE_H_
#define LEXGAP_COVERAGE_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lexgap/corpus.h"
#include "lexgap/wordnet.h"

namespace lexgap::coverage {

// Rows in report order.
enum class Row { kNoun, kAdj, kVerb, kAdv };
inline constexpr std::array<Row, 4> kRows = {Row::kNoun, Row::kAdj, Row::kVerb,
                                             Row::kAdv};

std::string_view RowName(Row row);
wn::Pos RowPos(Row row);

// Row for a tag; PROPN counts as NOUN. Closed classes have no row.
std::optional<Row> RowForTag(corpus::Tag tag);

struct RowCounts {
  size_t total = 0;
  size_t unique = 0;    // distinct (lemma, tag) pairs
  size_t no_sense = 0;  // distinct pairs with no synset in the store

  friend bool operator==(const RowCounts &, const RowCounts &) = default;
};

struct CorpusStats {
  size_t documents = 0;
  size_t articles = 0;
  size_t sentences = 0;
  size_t tokens = 0;
  size_t unique_types = 0;

  friend bool operator==(const CorpusStats &, const CorpusStats &) = default;
};

struct CoverageReport {
  std::array<RowCounts, 4> rows;
  CorpusStats stats;

  const RowCounts &at(Row row) const { return rows[static_cast<size_t>(row)]; }
};

CorpusStats ComputeStats(const std::vector<corpus::Document> &corpus);

// A pair lacks a sense when lookup(lemma, pos, pt) in `store` is empty.
CoverageReport ComputeCoverage(const std::vector<corpus::Document> &corpus,
                               const wn::WordNetStore &store);

// Header, four rows, then "#stats" with the corpus statistics.
std::string FormatReport(const CoverageReport &report);
void WriteReport(const std::filesystem::path &path,
                 const CoverageReport &report);

// key=value listing of the corpus statistics.
std::string FormatStats(const CorpusStats &stats);

}  // namespace lexgap::coverage

#endif  // LEXGAP_COVERAGE_H_
