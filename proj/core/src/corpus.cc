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

#include "lexgap/corpus.h"

#include <array>
#include <unordered_set>

#include "lexgap/errors.h"
#include "lexgap/text.h"

namespace lexgap::corpus {
namespace {

constexpr std::array<std::string_view, 12> kTagNames = {
    "NOUN", "PROPN", "VERB", "ADJ", "ADV", "PRON",
    "DET",  "ADP",   "CONJ", "NUM", "PUNCT", "X",
};

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

// Length in bytes of an article heading starting at `pos`, or 0.
size_t MatchHeading(std::string_view raw, size_t pos) {
  constexpr std::string_view kPrefix = "Art. ";
  if (raw.substr(pos, kPrefix.size()) != kPrefix) return 0;
  size_t end = pos + kPrefix.size();
  size_t digits = end;
  while (end < raw.size() && IsAsciiDigit(raw[end])) ++end;
  if (end == digits) return 0;
  std::string_view rest = raw.substr(end);
  if (rest.starts_with("º") || rest.starts_with("°")) {
    end += 2;
  } else if (rest.starts_with("o")) {
    end += 1;
  }
  if (end < raw.size() && raw[end] == '.') ++end;
  return end - pos;
}

bool HasNonSpace(std::string_view s) { return !text::Trim(s).empty(); }

template <typename Fn>
void ForEachForm(const Token &token, Fn &&fn) {
  if (!token.is_locution) {
    fn(token.surface);
    return;
  }
  for (const std::string &part : text::Split(token.surface, '_')) fn(part);
}

}  // namespace

std::string_view TagName(Tag tag) { return kTagNames[static_cast<size_t>(tag)]; }

std::optional<Tag> ParseTag(std::string_view name) {
  for (size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<Tag>(i);
  }
  return std::nullopt;
}

std::optional<wn::Pos> WordnetPos(Tag tag) {
  switch (tag) {
    case Tag::kNoun:
    case Tag::kPropn:
      return wn::Pos::kNoun;
    case Tag::kVerb:
      return wn::Pos::kVerb;
    case Tag::kAdj:
      return wn::Pos::kAdjective;
    case Tag::kAdv:
      return wn::Pos::kAdverb;
    default:
      return std::nullopt;
  }
}

std::optional<Format> ParseFormat(std::string_view name) {
  if (name == "plain") return Format::kPlain;
  if (name == "law") return Format::kLaw;
  return std::nullopt;
}

bool Article::IsPreamble() const { return label == kPreambleLabel; }

size_t Document::ArticleCount() const {
  size_t count = 0;
  for (const Article &article : articles) {
    if (!article.IsPreamble()) ++count;
  }
  return count;
}

size_t Document::SentenceCount() const {
  size_t count = 0;
  for (const Article &article : articles) count += article.sentences.size();
  return count;
}

size_t Document::TokenCount() const {
  size_t count = 0;
  ForEachSentence([&](const Article &, const Sentence &sentence) {
    for (const Token &token : sentence.tokens) {
      ForEachForm(token, [&](std::string_view) { ++count; });
    }
  });
  return count;
}

bool Document::IsAnalyzed() const {
  if (!tokenized) return false;
  bool analyzed = true;
  ForEachSentence([&](const Article &, const Sentence &sentence) {
    for (const Token &token : sentence.tokens) {
      if (token.IsWord() && token.lemma.empty()) analyzed = false;
    }
  });
  return analyzed;
}

Document IngestText(std::string raw, Format format, std::string id,
                    std::string title) {
  if (!HasNonSpace(raw)) {
    throw ValidationError("document '" + id + "' is empty");
  }
  text::Nfc(raw);  // validates UTF-8; raw is kept verbatim
  Document doc;
  doc.id = std::move(id);
  doc.title = std::move(title);
  doc.raw = std::move(raw);
  std::string_view view = doc.raw;

  if (format == Format::kPlain) {
    doc.articles.push_back({std::string(kPlainLabel), {0, view.size()}, {}});
    return doc;
  }

  std::vector<std::pair<size_t, size_t>> headings;  // offset, length
  for (size_t pos = 0; pos < view.size();) {
    if (size_t length = MatchHeading(view, pos)) {
      headings.emplace_back(pos, length);
    }
    size_t newline = view.find('\n', pos);
    if (newline == std::string_view::npos) break;
    pos = newline + 1;
  }

  size_t first = headings.empty() ? view.size() : headings.front().first;
  if (HasNonSpace(view.substr(0, first))) {
    doc.articles.push_back({std::string(kPreambleLabel), {0, first}, {}});
  }
  for (size_t i = 0; i < headings.size(); ++i) {
    auto [start, length] = headings[i];
    size_t end = i + 1 < headings.size() ? headings[i + 1].first : view.size();
    doc.articles.push_back({std::string(view.substr(start, length)),
                            {start, end}, {}});
  }
  return doc;
}

Document Ingest(const std::filesystem::path &path, Format format,
                std::string id, std::string title) {
  if (id.empty()) id = path.stem().string();
  Document doc = IngestText(text::ReadFile(path), format, std::move(id),
                            std::move(title));
  doc.source_path = path;
  return doc;
}

namespace {

void CollectTypes(const Document &doc, std::unordered_set<std::string> &types) {
  if (!doc.tokenized) {
    throw ValidationError("document '" + doc.id + "' is not tokenized");
  }
  doc.ForEachSentence([&](const Article &, const Sentence &sentence) {
    for (const Token &token : sentence.tokens) {
      if (token.tag == Tag::kPunct) continue;
      ForEachForm(token, [&](std::string_view form) {
        types.insert(text::Fold(form));
      });
    }
  });
}

}  // namespace

size_t UniqueTypes(const Document &doc) {
  std::unordered_set<std::string> types;
  CollectTypes(doc, types);
  return types.size();
}

size_t UniqueTypes(const std::vector<Document> &docs) {
  std::unordered_set<std::string> types;
  for (const Document &doc : docs) CollectTypes(doc, types);
  return types.size();
}

}  // namespace lexgap::corpus
