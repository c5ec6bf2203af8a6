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

#include "lexgap/morpho.h"

#include <algorithm>
#include <set>
#include <utility>

#include "lexgap/errors.h"
#include "lexgap/text.h"

namespace lexgap::morpho {
namespace {

std::vector<std::string> SplitWhitespace(std::string_view line) {
  std::vector<std::string> fields;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) fields.emplace_back(line.substr(start, pos - start));
  }
  return fields;
}

bool IsContentLine(std::string_view line) {
  std::string_view trimmed = text::Trim(line);
  return !trimmed.empty() && trimmed.front() != '#';
}

Tag RequireTag(std::string_view name) {
  std::optional<Tag> tag = corpus::ParseTag(name);
  if (!tag) throw ValidationError("unknown tag '" + std::string(name) + "'");
  return *tag;
}

size_t ParseCount(std::string_view field, const char *what) {
  if (field.empty() ||
      !std::all_of(field.begin(), field.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ValidationError(std::string("invalid ") + what + " '" +
                          std::string(field) + "'");
  }
  return std::stoul(std::string(field));
}

bool IsLetterAt(std::string_view raw, size_t pos) {
  if (pos >= raw.size()) return false;
  return text::IsWordLetter(text::DecodeNext(raw, pos));
}

bool IsDigitAt(std::string_view raw, size_t pos) {
  if (pos >= raw.size()) return false;
  return text::IsDigit(text::DecodeNext(raw, pos));
}

// Consumes letters and combining marks starting at `pos`.
size_t ConsumeLetters(std::string_view raw, size_t pos) {
  while (pos < raw.size()) {
    size_t next = pos;
    char32_t c = text::DecodeNext(raw, next);
    if (!text::IsWordLetter(c) && !text::IsCombiningMark(c)) break;
    pos = next;
  }
  return pos;
}

size_t ConsumeDigits(std::string_view raw, size_t pos) {
  while (pos < raw.size()) {
    size_t next = pos;
    if (!text::IsDigit(text::DecodeNext(raw, next))) break;
    pos = next;
  }
  return pos;
}

bool IsEndMarker(const Token &token, const EndMarkers &markers,
                 bool &needs_capital) {
  if (token.tag != Tag::kPunct) return false;
  for (const EndMarker &marker : markers) {
    if (marker.symbol == token.surface) {
      needs_capital = marker.needs_capital;
      return true;
    }
  }
  return false;
}

}  // namespace

// FormDictionary

FormDictionary FormDictionary::Load(const std::filesystem::path &path) {
  return Parse(text::ReadFile(path), path.string());
}

FormDictionary FormDictionary::Parse(std::string_view contents,
                                     const std::string &name) {
  FormDictionary dictionary;
  std::vector<std::string> lines = text::Lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (!IsContentLine(lines[i])) continue;
    try {
      std::vector<std::string> fields = SplitWhitespace(lines[i]);
      if (fields.size() < 3 || fields.size() % 2 == 0) {
        throw ValidationError("expected: form lemma TAG [lemma TAG ...]");
      }
      for (size_t f = 1; f + 1 < fields.size(); f += 2) {
        dictionary.Add(fields[0], fields[f], RequireTag(fields[f + 1]));
      }
    } catch (const ValidationError &e) {
      throw ValidationError(AtLine(name, i + 1, e.what()));
    }
  }
  return dictionary;
}

void FormDictionary::Add(std::string_view form, std::string_view lemma,
                         Tag tag) {
  std::string key = text::Fold(form);
  if (key.empty()) throw ValidationError("empty dictionary form");
  if (lemma.empty()) throw ValidationError("empty lemma for '" + key + "'");
  Analysis analysis{text::Nfc(lemma), tag};
  std::vector<Analysis> &list = entries_[key];
  if (std::find(list.begin(), list.end(), analysis) == list.end()) {
    list.push_back(std::move(analysis));
  }
}

const std::vector<Analysis> *FormDictionary::Find(std::string_view form) const {
  auto it = entries_.find(text::Fold(form));
  return it == entries_.end() ? nullptr : &it->second;
}

// LocutionTable

LocutionTable LocutionTable::Load(const std::filesystem::path &path) {
  return Parse(text::ReadFile(path), path.string());
}

LocutionTable LocutionTable::Parse(std::string_view contents,
                                   const std::string &name) {
  LocutionTable table;
  std::vector<std::string> lines = text::Lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (!IsContentLine(lines[i])) continue;
    try {
      std::vector<std::string> fields = SplitWhitespace(lines[i]);
      if (fields.size() != 3) {
        throw ValidationError("expected: form1_form2[_form3] lemma TAG");
      }
      table.Add(text::Split(fields[0], '_'), fields[1], RequireTag(fields[2]));
    } catch (const ValidationError &e) {
      throw ValidationError(AtLine(name, i + 1, e.what()));
    }
  }
  return table;
}

std::string LocutionTable::Key(const std::vector<std::string> &forms) {
  return text::Join(forms, "\x1f");
}

void LocutionTable::Add(std::vector<std::string> forms, std::string lemma,
                        Tag tag) {
  if (forms.size() < 2) {
    throw ValidationError("locution needs at least two forms");
  }
  for (std::string &form : forms) {
    form = text::Fold(form);
    if (form.empty()) throw ValidationError("empty locution form");
  }
  std::string key = Key(forms);
  if (index_.count(key)) {
    throw ValidationError("duplicate locution '" + text::Join(forms, " ") + "'");
  }
  index_.emplace(key, entries_.size());
  max_length_ = std::max(max_length_, forms.size());
  entries_.push_back({std::move(forms), text::NormalizeLemma(lemma), tag});
}

const Locution *LocutionTable::Find(const std::vector<std::string> &forms) const {
  auto it = index_.find(Key(forms));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

// Suffix rules and abbreviations

std::vector<SuffixRule> LoadSuffixRules(const std::filesystem::path &path) {
  return ParseSuffixRules(text::ReadFile(path), path.string());
}

std::vector<SuffixRule> ParseSuffixRules(std::string_view contents,
                                         const std::string &name) {
  std::vector<SuffixRule> rules;
  std::set<std::pair<size_t, int>> seen;
  std::vector<std::string> lines = text::Lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (!IsContentLine(lines[i])) continue;
    try {
      std::vector<std::string> fields = SplitWhitespace(lines[i]);
      if (fields.size() != 5) {
        throw ValidationError("expected: suffix strip append TAG priority");
      }
      SuffixRule rule;
      rule.suffix = text::Fold(fields[0]);
      rule.strip = ParseCount(fields[1], "strip count");
      rule.append = fields[2] == "-" ? "" : text::Fold(fields[2]);
      rule.tag = RequireTag(fields[3]);
      try {
        rule.priority = std::stoi(fields[4]);
      } catch (const std::exception &) {
        throw ValidationError("invalid priority '" + fields[4] + "'");
      }
      size_t length = text::CodePointCount(rule.suffix);
      if (rule.strip > length) {
        throw ValidationError("strip count exceeds suffix length");
      }
      if (!seen.emplace(length, rule.priority).second) {
        throw ValidationError("priority " + fields[4] +
                              " reused for suffix length " +
                              std::to_string(length));
      }
      rules.push_back(std::move(rule));
    } catch (const ValidationError &e) {
      throw ValidationError(AtLine(name, i + 1, e.what()));
    }
  }
  return rules;
}

Abbreviations LoadAbbreviations(const std::filesystem::path &path) {
  return ParseAbbreviations(text::ReadFile(path));
}

Abbreviations ParseAbbreviations(std::string_view contents) {
  Abbreviations abbreviations;
  for (const std::string &line : text::Lines(contents)) {
    if (!IsContentLine(line)) continue;
    std::string entry = text::Fold(text::Trim(line));
    if (!entry.empty() && entry.back() == '.') entry.pop_back();
    if (!entry.empty()) abbreviations.insert(entry);
  }
  return abbreviations;
}

Abbreviations DefaultAbbreviations() {
  return {"art", "arts", "inc", "incs", "§", "al", "cf", "dr", "dra",
          "ex", "fls", "p", "pág", "prof", "sr", "sra"};
}

EndMarkers DefaultEndMarkers() {
  return {{".", true}, {"?", false}, {"!", false}};
}

EndMarkers StrictEndMarkers() {
  return {{".", false}, {"?", false}, {"!", false}, {";", false}};
}

// Tokenization and segmentation

std::vector<Token> Tokenize(std::string_view raw, size_t base) {
  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < raw.size()) {
    size_t start = pos;
    size_t next = pos;
    char32_t c = text::DecodeNext(raw, next);
    if (text::IsSpace(c)) {
      pos = next;
      continue;
    }
    Tag tag = Tag::kPunct;
    if (text::IsWordLetter(c)) {
      tag = Tag::kX;
      pos = ConsumeLetters(raw, start);
      while (pos < raw.size() && raw[pos] == '-' && IsLetterAt(raw, pos + 1)) {
        pos = ConsumeLetters(raw, pos + 1);
      }
    } else if (text::IsDigit(c)) {
      tag = Tag::kNum;
      pos = ConsumeDigits(raw, start);
      while (pos < raw.size() && (raw[pos] == '.' || raw[pos] == ',') &&
             IsDigitAt(raw, pos + 1)) {
        pos = ConsumeDigits(raw, pos + 1);
      }
    } else {
      pos = next;
    }
    Token token;
    token.surface = std::string(raw.substr(start, pos - start));
    token.span = {base + start, base + pos};
    token.tag = tag;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<Sentence> SplitSentences(std::vector<Token> tokens,
                                     const Abbreviations &abbreviations,
                                     const EndMarkers &markers,
                                     size_t first_index) {
  std::vector<Sentence> sentences;
  Sentence current;
  for (size_t i = 0; i < tokens.size(); ++i) {
    current.tokens.push_back(std::move(tokens[i]));
    const Token &token = current.tokens.back();
    bool needs_capital = false;
    if (!IsEndMarker(token, markers, needs_capital)) continue;
    if (token.surface == "." && current.tokens.size() >= 2) {
      const Token &previous = current.tokens[current.tokens.size() - 2];
      if (previous.IsWord() && abbreviations.count(text::Fold(previous.surface))) {
        continue;
      }
    }
    if (needs_capital && i + 1 < tokens.size() &&
        !text::StartsUppercase(tokens[i + 1].surface)) {
      continue;
    }
    current.index = first_index + sentences.size();
    sentences.push_back(std::move(current));
    current = Sentence{};
  }
  if (!current.tokens.empty()) {
    current.index = first_index + sentences.size();
    sentences.push_back(std::move(current));
  }
  return sentences;
}

void Segment(corpus::Document &doc, const Abbreviations &abbreviations,
             const EndMarkers &markers) {
  size_t next_index = 0;
  std::string_view raw = doc.raw;
  for (corpus::Article &article : doc.articles) {
    std::string_view text = raw.substr(article.span.begin,
                                       article.span.end - article.span.begin);
    article.sentences = SplitSentences(Tokenize(text, article.span.begin),
                                       abbreviations, markers, next_index);
    next_index += article.sentences.size();
  }
  doc.tokenized = true;
}

void Resegment(corpus::Document &doc, const Abbreviations &abbreviations,
               const EndMarkers &markers) {
  size_t next_index = 0;
  for (corpus::Article &article : doc.articles) {
    std::vector<Token> tokens;
    for (Sentence &sentence : article.sentences) {
      for (Token &token : sentence.tokens) {
        if (token.is_locution) {
          throw ValidationError("cannot resegment document '" + doc.id +
                                "' after locutions were joined");
        }
        tokens.push_back(std::move(token));
      }
    }
    article.sentences = SplitSentences(std::move(tokens), abbreviations,
                                       markers, next_index);
    next_index += article.sentences.size();
  }
}

// Analysis

Sentence JoinLocutions(Sentence sentence, const LocutionTable &table) {
  if (table.max_length() < 2) return sentence;
  std::vector<Token> &in = sentence.tokens;
  std::vector<Token> out;
  out.reserve(in.size());
  size_t i = 0;
  while (i < in.size()) {
    const Locution *match = nullptr;
    size_t longest = std::min(table.max_length(), in.size() - i);
    for (size_t length = longest; length >= 2 && !match; --length) {
      std::vector<std::string> forms;
      bool joinable = true;
      for (size_t k = i; k < i + length; ++k) {
        if (in[k].is_locution) {
          joinable = false;
          break;
        }
        forms.push_back(text::Fold(in[k].surface));
      }
      if (joinable) {
        match = table.Find(forms);
        if (match) longest = length;
      }
    }
    if (!match) {
      out.push_back(std::move(in[i]));
      ++i;
      continue;
    }
    size_t length = match->forms.size();
    Token joined;
    std::vector<std::string> surfaces;
    for (size_t k = i; k < i + length; ++k) surfaces.push_back(in[k].surface);
    joined.surface = text::Join(surfaces, "_");
    joined.span = {in[i].span.begin, in[i + length - 1].span.end};
    joined.lemma = match->lemma;
    joined.tag = match->tag;
    joined.is_locution = true;
    out.push_back(std::move(joined));
    i += length;
  }
  sentence.tokens = std::move(out);
  return sentence;
}

std::vector<Analysis> Analyze(std::string_view form,
                              const FormDictionary &dictionary,
                              const std::vector<SuffixRule> &rules) {
  if (const std::vector<Analysis> *hit = dictionary.Find(form)) return *hit;
  std::string folded = text::Fold(form);
  size_t form_length = text::CodePointCount(folded);
  const SuffixRule *best = nullptr;
  size_t best_length = 0;
  for (const SuffixRule &rule : rules) {
    size_t length = text::CodePointCount(rule.suffix);
    if (length >= form_length || !folded.ends_with(rule.suffix)) continue;
    if (!best || length > best_length ||
        (length == best_length && rule.priority < best->priority)) {
      best = &rule;
      best_length = length;
    }
  }
  if (!best) return {{folded, Tag::kNoun}};
  size_t cut = text::OffsetFromEnd(folded, best->strip);
  return {{folded.substr(0, cut) + best->append, best->tag}};
}

Sentence TagSentence(Sentence sentence, const FormDictionary &dictionary,
                     const std::vector<SuffixRule> &rules) {
  for (Token &token : sentence.tokens) {
    if (token.is_locution) continue;
    if (!token.IsWord()) {
      token.lemma = token.surface;
      continue;
    }
    Analysis first = Analyze(token.surface, dictionary, rules).front();
    token.lemma = std::move(first.lemma);
    token.tag = first.tag;
  }
  return sentence;
}

Sentence AssignSenses(Sentence sentence, const wn::WordNetStore &store) {
  for (Token &token : sentence.tokens) {
    token.sense.reset();
    std::optional<wn::Pos> pos = corpus::WordnetPos(token.tag);
    if (!pos || token.lemma.empty()) continue;
    std::vector<wn::SynsetId> senses =
        store.Lookup(token.lemma, *pos, wn::Language::kPortuguese);
    if (!senses.empty()) token.sense = senses.front();
  }
  return sentence;
}

void AnalyzeDocument(corpus::Document &doc, const Lexicon &lexicon,
                     const wn::WordNetStore *store) {
  if (!doc.tokenized) {
    throw ValidationError("document '" + doc.id + "' is not tokenized");
  }
  Resegment(doc, lexicon.abbreviations);
  for (corpus::Article &article : doc.articles) {
    for (Sentence &sentence : article.sentences) {
      sentence = JoinLocutions(std::move(sentence), lexicon.locutions);
      sentence = TagSentence(std::move(sentence), lexicon.dictionary,
                             lexicon.rules);
      if (store) sentence = AssignSenses(std::move(sentence), *store);
    }
  }
}

}  // namespace lexgap::morpho
