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

#include <algorithm>

#include "lexgap/errors.h"
#include "lexgap/text.h"

namespace lexgap::concord {
namespace {

bool Matches(const std::vector<std::string> &forms, size_t at,
             const NGramKey &key) {
  if (at + key.forms.size() > forms.size()) return false;
  for (size_t k = 0; k < key.forms.size(); ++k) {
    if (forms[at + k] != key.forms[k]) return false;
  }
  return true;
}

size_t ParseSize(const std::string &field, const char *what) {
  if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw ValidationError(std::string("invalid ") + what + " '" + field + "'");
  }
  return std::stoul(field);
}

}  // namespace

std::string NGramKey::ToString() const { return text::Join(forms, " "); }

NGramKey NGramKey::FromString(std::string_view value) {
  NGramKey key;
  for (const std::string &form : text::Split(text::Trim(value), ' ')) {
    if (!form.empty()) key.forms.push_back(text::Fold(form));
  }
  if (key.forms.size() < 2 || key.forms.size() > 3) {
    throw ValidationError("n-gram must have 2 or 3 forms: '" +
                          std::string(value) + "'");
  }
  return key;
}

std::vector<std::string> WindowForms(const corpus::Sentence &sentence) {
  std::vector<std::string> forms;
  for (const corpus::Token &token : sentence.tokens) {
    if (!token.IsWord()) {
      forms.emplace_back();
    } else if (token.is_locution) {
      for (const std::string &part : text::Split(token.surface, '_')) {
        forms.push_back(text::Fold(part));
      }
    } else {
      forms.push_back(text::Fold(token.surface));
    }
  }
  return forms;
}

void NGramCounts::Record(const NGramKey &key, const Occurrence &at) {
  NGramStat &stat = stats_[key];
  if (stat.frequency == 0) stat.key = key;
  ++stat.frequency;
  stat.documents.insert(at.doc);
  if (stat.samples.size() < sample_cap_) stat.samples.push_back(at);
}

void NGramCounts::AddDocument(const corpus::Document &doc) {
  if (!doc.tokenized) {
    throw ValidationError("document '" + doc.id + "' is not tokenized");
  }
  doc.ForEachSentence([&](const corpus::Article &,
                          const corpus::Sentence &sentence) {
    std::vector<std::string> forms = WindowForms(sentence);
    for (size_t n = 2; n <= 3; ++n) {
      for (size_t i = 0; i + n <= forms.size(); ++i) {
        auto first = forms.begin() + i;
        if (std::any_of(first, first + n,
                        [](const std::string &f) { return f.empty(); })) {
          continue;
        }
        Record(NGramKey{{first, first + n}}, {doc.id, sentence.index, i});
      }
    }
  });
}

void NGramCounts::Merge(const NGramCounts &other) {
  for (const auto &[key, theirs] : other.stats_) {
    NGramStat &mine = stats_[key];
    if (mine.frequency == 0) mine.key = key;
    mine.frequency += theirs.frequency;
    mine.documents.insert(theirs.documents.begin(), theirs.documents.end());
    for (const Occurrence &at : theirs.samples) {
      if (mine.samples.size() >= sample_cap_) break;
      mine.samples.push_back(at);
    }
  }
}

std::vector<NGramStat> NGramCounts::Select(size_t min_freq) const {
  if (min_freq < 1) throw ValidationError("min_freq must be at least 1");
  std::vector<NGramStat> out;
  for (const auto &[key, stat] : stats_) {
    if (stat.frequency >= min_freq) out.push_back(stat);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const NGramStat &a, const NGramStat &b) {
                     return a.frequency > b.frequency;
                   });
  return out;
}

std::vector<NGramStat> ExtractNGrams(
    const std::vector<corpus::Document> &corpus, size_t min_freq,
    size_t sample_cap) {
  if (min_freq < 1) throw ValidationError("min_freq must be at least 1");
  NGramCounts counts(sample_cap);
  for (const corpus::Document &doc : corpus) counts.AddDocument(doc);
  return counts.Select(min_freq);
}

FunctionWords LoadFunctionWords(const std::filesystem::path &path) {
  return ParseFunctionWords(text::ReadFile(path));
}

FunctionWords ParseFunctionWords(std::string_view contents) {
  FunctionWords words;
  for (const std::string &line : text::Lines(contents)) {
    std::string_view trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    words.insert(text::Fold(trimmed));
  }
  return words;
}

std::vector<NGramStat> Prefilter(std::vector<NGramStat> stats,
                                 const FunctionWords &function_words) {
  if (function_words.empty()) return stats;
  std::erase_if(stats, [&](const NGramStat &stat) {
    const std::vector<std::string> &forms = stat.key.forms;
    return function_words.count(forms.front()) ||
           function_words.count(forms.back());
  });
  return stats;
}

std::string ConcordanceLine::ToString() const {
  return doc + ":" + std::to_string(sentence) + "\t" + text::Join(left, " ") +
         "\t[" + text::Join(match, " ") + "]\t" + text::Join(right, " ");
}

std::vector<ConcordanceLine> Kwic(const std::vector<corpus::Document> &corpus,
                                  const NGramKey &key, size_t window) {
  std::vector<ConcordanceLine> lines;
  if (key.forms.empty()) return lines;
  for (const corpus::Document &doc : corpus) {
    doc.ForEachSentence([&](const corpus::Article &,
                            const corpus::Sentence &sentence) {
      std::vector<std::string> forms = WindowForms(sentence);
      // Context shows surfaces, including punctuation.
      std::vector<std::string> surfaces;
      for (const corpus::Token &token : sentence.tokens) {
        if (token.is_locution) {
          for (const std::string &part : text::Split(token.surface, '_')) {
            surfaces.push_back(part);
          }
        } else {
          surfaces.push_back(token.surface);
        }
      }
      size_t n = key.forms.size();
      for (size_t i = 0; i + n <= forms.size(); ++i) {
        if (!Matches(forms, i, key)) continue;
        ConcordanceLine line{doc.id, sentence.index, i, {}, {}, {}};
        size_t left = i >= window ? i - window : 0;
        size_t right = std::min(surfaces.size(), i + n + window);
        line.left.assign(surfaces.begin() + left, surfaces.begin() + i);
        line.match.assign(surfaces.begin() + i, surfaces.begin() + i + n);
        line.right.assign(surfaces.begin() + i + n, surfaces.begin() + right);
        lines.push_back(std::move(line));
      }
    });
  }
  return lines;
}

std::string FormatNGrams(const std::vector<NGramStat> &stats) {
  std::string out;
  for (size_t i = 0; i < stats.size(); ++i) {
    out += std::to_string(i + 1) + "\t" + std::to_string(stats[i].frequency) +
           "\t" + stats[i].key.ToString() + "\t" +
           std::to_string(stats[i].documents.size()) + "\n";
  }
  return out;
}

void WriteNGrams(const std::filesystem::path &path,
                 const std::vector<NGramStat> &stats) {
  text::WriteFile(path, FormatNGrams(stats));
}

std::vector<NGramStat> ParseNGrams(std::string_view contents,
                                   const std::string &name) {
  std::vector<NGramStat> stats;
  std::vector<std::string> lines = text::Lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (text::Trim(lines[i]).empty()) continue;
    try {
      std::vector<std::string> fields = text::Split(lines[i], '\t');
      if (fields.size() != 4) {
        throw ValidationError("expected 4 tab-separated fields");
      }
      ParseSize(fields[0], "rank");
      NGramStat stat;
      stat.frequency = ParseSize(fields[1], "frequency");
      stat.key = NGramKey::FromString(fields[2]);
      ParseSize(fields[3], "document count");
      if (stat.frequency < 1) throw ValidationError("frequency must be >= 1");
      stats.push_back(std::move(stat));
    } catch (const ValidationError &e) {
      throw ValidationError(AtLine(name, i + 1, e.what()));
    }
  }
  return stats;
}

std::vector<NGramStat> ReadNGrams(const std::filesystem::path &path) {
  return ParseNGrams(text::ReadFile(path), path.string());
}

}  // namespace lexgap::concord
