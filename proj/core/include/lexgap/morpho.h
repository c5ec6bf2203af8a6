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

#ifndef LEXGAP_MORPHO_H_
#define LEXGAP_MORPHO_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexgap/corpus.h"
#include "lexgap/wordnet.h"

// Dictionary-driven analysis chain: tokenization, sentence splitting,
// locution joining, lemma/tag assignment with a suffix guesser for unknown
// forms, and first-sense synset assignment.
namespace lexgap::morpho {

using corpus::Sentence;
using corpus::Tag;
using corpus::Token;

struct Analysis {
  std::string lemma;
  Tag tag = Tag::kX;

  friend bool operator==(const Analysis &, const Analysis &) = default;
};

// Maps lowercase NFC surface forms to their ordered analyses. The first
// analysis of a form is the preferred one.
class FormDictionary {
 public:
  // File layout, one form per line: form lemma1 TAG1 [lemma2 TAG2 ...]
  static FormDictionary Load(const std::filesystem::path &path);
  static FormDictionary Parse(std::string_view contents,
                              const std::string &name = "dictionary");

  // Appends an analysis unless it is already listed for the form.
  void Add(std::string_view form, std::string_view lemma, Tag tag);

  // Analyses for `form` (case-folded before lookup), or nullptr.
  const std::vector<Analysis> *Find(std::string_view form) const;

  size_t size() const { return entries_.size(); }
  const std::map<std::string, std::vector<Analysis>> &entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<Analysis>> entries_;
};

struct Locution {
  std::vector<std::string> forms;  // case-folded, at least two
  std::string lemma;               // underscore-joined
  Tag tag = Tag::kX;
};

class LocutionTable {
 public:
  // File layout: form1_form2[_form3...] lemma TAG
  static LocutionTable Load(const std::filesystem::path &path);
  static LocutionTable Parse(std::string_view contents,
                             const std::string &name = "locutions");

  // Raises ValidationError for sequences shorter than two or duplicates.
  void Add(std::vector<std::string> forms, std::string lemma, Tag tag);

  const std::vector<Locution> &entries() const { return entries_; }
  size_t max_length() const { return max_length_; }

  // Entry whose folded forms equal `forms`, or nullptr.
  const Locution *Find(const std::vector<std::string> &forms) const;

 private:
  static std::string Key(const std::vector<std::string> &forms);

  std::vector<Locution> entries_;
  std::map<std::string, size_t> index_;
  size_t max_length_ = 0;
};

// Guesses an analysis for forms ending in `suffix`: drop `strip` code
// points and append `append`. Among matching rules the longest suffix wins,
// then the lowest `priority` value.
struct SuffixRule {
  std::string suffix;
  size_t strip = 0;
  std::string append;
  Tag tag = Tag::kNoun;
  int priority = 0;
};

// File layout: suffix strip append TAG priority. An append of "-" is empty.
std::vector<SuffixRule> LoadSuffixRules(const std::filesystem::path &path);
std::vector<SuffixRule> ParseSuffixRules(std::string_view contents,
                                         const std::string &name = "rules");

using Abbreviations = std::unordered_set<std::string>;

// One lowercase abbreviation per line, without the trailing period.
Abbreviations LoadAbbreviations(const std::filesystem::path &path);
Abbreviations ParseAbbreviations(std::string_view contents);
Abbreviations DefaultAbbreviations();

// A punctuation token that may close a sentence. With `needs_capital`, it
// only does so when the next token starts with an uppercase letter (or at
// the end of input).
struct EndMarker {
  std::string symbol;
  bool needs_capital = false;
};
using EndMarkers = std::vector<EndMarker>;

// ".", "?" and "!". The period requires a capitalized continuation; a
// semicolon is not a terminator. This matches statute text, where an
// enumerated clause list ending in ";" is one sentence and paragraph
// markers (§) follow periods without starting a new sentence.
EndMarkers DefaultEndMarkers();

// ".", "?", "!" and ";", each closing a sentence unconditionally.
EndMarkers StrictEndMarkers();

// Splits `raw` into word, number and punctuation tokens. Words are maximal
// letter runs with optional internal hyphens; numbers are digit runs with
// internal '.' or ','; every other non-space code point is its own PUNCT
// token. Spans are byte offsets shifted by `base`.
std::vector<Token> Tokenize(std::string_view raw, size_t base = 0);

// Groups tokens into sentences. A sentence ends after an end marker unless
// the marker is a period attached to a listed abbreviation. Indices are
// assigned from `first_index`.
std::vector<Sentence> SplitSentences(std::vector<Token> tokens,
                                     const Abbreviations &abbreviations,
                                     const EndMarkers &markers = DefaultEndMarkers(),
                                     size_t first_index = 0);

// Tokenizes every article of `doc` and splits it into sentences. Each
// article heading therefore starts a new sentence.
void Segment(corpus::Document &doc, const Abbreviations &abbreviations,
             const EndMarkers &markers = DefaultEndMarkers());

// Re-splits the tokens of each article, e.g. with different abbreviations.
// Locution tokens must not be present.
void Resegment(corpus::Document &doc, const Abbreviations &abbreviations,
               const EndMarkers &markers = DefaultEndMarkers());

// Joins table sequences into single tokens: longest match first, left to
// right, non-overlapping, case-insensitive on surfaces.
Sentence JoinLocutions(Sentence sentence, const LocutionTable &table);

// Dictionary analyses verbatim on a hit; otherwise one guessed analysis
// from the suffix rules; otherwise (form, NOUN). Lookups are case-folded.
std::vector<Analysis> Analyze(std::string_view form,
                              const FormDictionary &dictionary,
                              const std::vector<SuffixRule> &rules);

// Gives every word token that is not a locution its first analysis.
Sentence TagSentence(Sentence sentence, const FormDictionary &dictionary,
                     const std::vector<SuffixRule> &rules);

// First-sense baseline: open-class tokens get the first Portuguese synset
// for their lemma, all other tokens get none.
Sentence AssignSenses(Sentence sentence, const wn::WordNetStore &store);

struct Lexicon {
  FormDictionary dictionary;
  LocutionTable locutions;
  std::vector<SuffixRule> rules;
  Abbreviations abbreviations = DefaultAbbreviations();
};

// Full chain over a tokenized document: resegment with the lexicon's
// abbreviations, join locutions, tag, and (when `store` is given) assign
// senses. Each sentence is processed independently of the others.
void AnalyzeDocument(corpus::Document &doc, const Lexicon &lexicon,
                     const wn::WordNetStore *store);

}  // namespace lexgap::morpho

#endif  // LEXGAP_MORPHO_H_
