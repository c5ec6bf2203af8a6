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

#ifndef LEXGAP_CORPUS_H_
#define LEXGAP_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexgap/wordnet.h"

namespace lexgap::corpus {

// Coarse part-of-speech tagset.
enum class Tag {
  kNoun,
  kPropn,
  kVerb,
  kAdj,
  kAdv,
  kPron,
  kDet,
  kAdp,
  kConj,
  kNum,
  kPunct,
  kX,
};

std::string_view TagName(Tag tag);
std::optional<Tag> ParseTag(std::string_view name);

// Wordnet part of speech for open-class tags: NOUN/PROPN -> n, VERB -> v,
// ADJ -> a, ADV -> r. Closed classes map to nullopt.
std::optional<wn::Pos> WordnetPos(Tag tag);

// Half-open byte range [begin, end) into Document::raw.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  friend bool operator==(const Span &, const Span &) = default;
};

struct Token {
  std::string surface;
  Span span;
  std::string lemma;
  Tag tag = Tag::kX;
  bool is_locution = false;
  std::optional<wn::SynsetId> sense;

  bool IsWord() const { return tag != Tag::kPunct && tag != Tag::kNum; }
};

struct Sentence {
  size_t index = 0;
  std::vector<Token> tokens;
};

struct Article {
  std::string label;
  Span span;
  std::vector<Sentence> sentences;

  bool IsPreamble() const;
};

inline constexpr std::string_view kPreambleLabel = "preamble";
inline constexpr std::string_view kPlainLabel = "text";

enum class Format { kPlain, kLaw };

std::optional<Format> ParseFormat(std::string_view name);

struct Document {
  std::string id;
  std::string title;
  std::filesystem::path source_path;
  std::string raw;
  std::vector<Article> articles;
  bool tokenized = false;

  // Articles other than the preamble pseudo-article.
  size_t ArticleCount() const;
  size_t SentenceCount() const;
  // Tokens as produced by the tokenizer; a joined locution counts once per
  // component form.
  size_t TokenCount() const;
  // True once every word token carries a lemma.
  bool IsAnalyzed() const;

  template <typename Fn>
  void ForEachSentence(Fn &&fn) const {
    for (const Article &article : articles) {
      for (const Sentence &sentence : article.sentences) fn(article, sentence);
    }
  }
};

// Segments `raw` into articles. The `law` format opens a new article at
// every line that starts with "Art." followed by a space, digits and an
// optional ordinal marker (º, °, o, .); text before the first heading becomes
// the "preamble" article. The `plain` format yields one article covering
// the whole text. Raises ValidationError on empty input.
Document IngestText(std::string raw, Format format, std::string id,
                    std::string title = "");

// Reads a UTF-8 file and segments it as IngestText does.
Document Ingest(const std::filesystem::path &path, Format format,
                std::string id = "", std::string title = "");

// Distinct case-folded surface forms, punctuation excluded. Requires a
// tokenized document.
size_t UniqueTypes(const Document &doc);
size_t UniqueTypes(const std::vector<Document> &docs);

struct ManifestEntry {
  std::string id;
  std::string title;
  std::filesystem::path path;  // resolved against the manifest directory
  Format format = Format::kPlain;
};

// Parses corpus.tsv: doc-id, title, relative path, format.
std::vector<ManifestEntry> LoadManifest(const std::filesystem::path &manifest);

// Token-level JSON-lines dump: one object per token with doc, article,
// sentence, start, end, surface, lemma, tag, locution and sense.
std::string DumpJsonLines(const std::vector<Document> &docs);
void WriteJsonLines(const std::filesystem::path &path,
                    const std::vector<Document> &docs);

// Rebuilds documents from a dump. Raw text is not part of the dump, so the
// returned documents have empty `raw`; spans still refer to the original.
std::vector<Document> ParseJsonLines(std::string_view contents,
                                     const std::string &name = "corpus.jsonl");
std::vector<Document> ReadJsonLines(const std::filesystem::path &path);

}  // namespace lexgap::corpus

#endif  // LEXGAP_CORPUS_H_
