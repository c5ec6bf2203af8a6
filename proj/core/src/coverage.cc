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

#include "lexgap/coverage.h"

#include <map>
#include <set>
#include <utility>

#include "lexgap/errors.h"
#include "lexgap/text.h"

namespace lexgap::coverage {

std::string_view RowName(Row row) {
  switch (row) {
    case Row::kNoun: return "NOUN";
    case Row::kAdj: return "ADJ";
    case Row::kVerb: return "VERB";
    case Row::kAdv: return "ADV";
  }
  return "NOUN";
}

wn::Pos RowPos(Row row) {
  switch (row) {
    case Row::kNoun: return wn::Pos::kNoun;
    case Row::kAdj: return wn::Pos::kAdjective;
    case Row::kVerb: return wn::Pos::kVerb;
    case Row::kAdv: return wn::Pos::kAdverb;
  }
  return wn::Pos::kNoun;
}

std::optional<Row> RowForTag(corpus::Tag tag) {
  switch (tag) {
    case corpus::Tag::kNoun:
    case corpus::Tag::kPropn: return Row::kNoun;
    case corpus::Tag::kAdj: return Row::kAdj;
    case corpus::Tag::kVerb: return Row::kVerb;
    case corpus::Tag::kAdv: return Row::kAdv;
    default: return std::nullopt;
  }
}

CorpusStats ComputeStats(const std::vector<corpus::Document> &corpus) {
  CorpusStats stats;
  stats.documents = corpus.size();
  for (const corpus::Document &doc : corpus) {
    stats.articles += doc.ArticleCount();
    stats.sentences += doc.SentenceCount();
    stats.tokens += doc.TokenCount();
  }
  stats.unique_types = corpus::UniqueTypes(corpus);
  return stats;
}

CoverageReport ComputeCoverage(const std::vector<corpus::Document> &corpus,
                               const wn::WordNetStore &store) {
  CoverageReport report;
  std::array<std::set<std::pair<std::string, corpus::Tag>>, 4> pairs;
  for (const corpus::Document &doc : corpus) {
    if (!doc.tokenized || !doc.IsAnalyzed()) {
      throw ValidationError("document '" + doc.id + "' is not analyzed");
    }
    doc.ForEachSentence([&](const corpus::Article &,
                            const corpus::Sentence &sentence) {
      for (const corpus::Token &token : sentence.tokens) {
        std::optional<Row> row = RowForTag(token.tag);
        if (!row) continue;
        size_t r = static_cast<size_t>(*row);
        ++report.rows[r].total;
        pairs[r].emplace(token.lemma, token.tag);
      }
    });
  }
  for (Row row : kRows) {
    size_t r = static_cast<size_t>(row);
    report.rows[r].unique = pairs[r].size();
    for (const auto &[lemma, tag] : pairs[r]) {
      if (store.Lookup(lemma, RowPos(row), wn::Language::kPortuguese).empty()) {
        ++report.rows[r].no_sense;
      }
    }
  }
  report.stats = ComputeStats(corpus);
  return report;
}

std::string FormatReport(const CoverageReport &report) {
  std::string out = "pos\ttotal\tunique\tno_sense\n";
  for (Row row : kRows) {
    const RowCounts &counts = report.at(row);
    out += std::string(RowName(row)) + "\t" + std::to_string(counts.total) +
           "\t" + std::to_string(counts.unique) + "\t" +
           std::to_string(counts.no_sense) + "\n";
  }
  const CorpusStats &s = report.stats;
  out += "#stats\tdocuments=" + std::to_string(s.documents) +
         "\tarticles=" + std::to_string(s.articles) +
         "\tsentences=" + std::to_string(s.sentences) +
         "\ttokens=" + std::to_string(s.tokens) +
         "\tunique_types=" + std::to_string(s.unique_types) + "\n";
  return out;
}

void WriteReport(const std::filesystem::path &path,
                 const CoverageReport &report) {
  text::WriteFile(path, FormatReport(report));
}

std::string FormatStats(const CorpusStats &stats) {
  return "documents=" + std::to_string(stats.documents) + "\n" +
         "articles=" + std::to_string(stats.articles) + "\n" +
         "sentences=" + std::to_string(stats.sentences) + "\n" +
         "tokens=" + std::to_string(stats.tokens) + "\n" +
         "unique_types=" + std::to_string(stats.unique_types) + "\n";
}

}  // namespace lexgap::coverage
