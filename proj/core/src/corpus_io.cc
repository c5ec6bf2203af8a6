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

#include <set>

#include "json.hpp"
#include "lexgap/corpus.h"
#include "lexgap/errors.h"
#include "lexgap/text.h"

namespace lexgap::corpus {
namespace {

using Json = nlohmann::ordered_json;

Json TokenRecord(const Document &doc, const Article &article,
                 const Sentence &sentence, const Token &token) {
  Json record;
  record["doc"] = doc.id;
  record["article"] = article.label;
  record["sentence"] = sentence.index;
  record["start"] = token.span.begin;
  record["end"] = token.span.end;
  record["surface"] = token.surface;
  record["lemma"] = token.lemma;
  record["tag"] = TagName(token.tag);
  record["locution"] = token.is_locution;
  record["sense"] = token.sense ? Json(token.sense->ToString()) : Json(nullptr);
  return record;
}

template <typename T>
T Field(const Json &record, const char *name) {
  auto it = record.find(name);
  if (it == record.end()) {
    throw ValidationError(std::string("missing field '") + name + "'");
  }
  return it->get<T>();
}

}  // namespace

std::vector<ManifestEntry> LoadManifest(const std::filesystem::path &manifest) {
  std::string contents = text::ReadFile(manifest);
  std::filesystem::path base = manifest.parent_path();
  std::vector<ManifestEntry> entries;
  std::set<std::string> ids;
  std::vector<std::string> lines = text::Lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> fields = text::Split(lines[i], '\t');
    if (fields.size() != 4) {
      throw ValidationError(AtLine(manifest.string(), i + 1,
                                   "expected 4 tab-separated fields"));
    }
    std::optional<Format> format = ParseFormat(fields[3]);
    if (!format) {
      throw ValidationError(AtLine(manifest.string(), i + 1,
                                   "unknown format '" + fields[3] + "'"));
    }
    if (!ids.insert(fields[0]).second) {
      throw ValidationError(AtLine(manifest.string(), i + 1,
                                   "duplicate document id '" + fields[0] + "'"));
    }
    entries.push_back({fields[0], fields[1], base / fields[2], *format});
  }
  return entries;
}

std::string DumpJsonLines(const std::vector<Document> &docs) {
  std::string out;
  for (const Document &doc : docs) {
    doc.ForEachSentence([&](const Article &article, const Sentence &sentence) {
      for (const Token &token : sentence.tokens) {
        out += TokenRecord(doc, article, sentence, token).dump();
        out += '\n';
      }
    });
  }
  return out;
}

void WriteJsonLines(const std::filesystem::path &path,
                    const std::vector<Document> &docs) {
  text::WriteFile(path, DumpJsonLines(docs));
}

std::vector<Document> ParseJsonLines(std::string_view contents,
                                     const std::string &name) {
  std::vector<Document> docs;
  std::set<std::string> finished;
  std::vector<std::string> lines = text::Lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      Json record = Json::parse(lines[i]);
      std::string doc_id = Field<std::string>(record, "doc");
      std::string label = Field<std::string>(record, "article");
      size_t sentence_index = Field<size_t>(record, "sentence");

      Token token;
      token.span = {Field<size_t>(record, "start"), Field<size_t>(record, "end")};
      if (token.span.end < token.span.begin) {
        throw ValidationError("token end precedes start");
      }
      token.surface = Field<std::string>(record, "surface");
      token.lemma = Field<std::string>(record, "lemma");
      std::string tag = Field<std::string>(record, "tag");
      std::optional<Tag> parsed = ParseTag(tag);
      if (!parsed) throw ValidationError("unknown tag '" + tag + "'");
      token.tag = *parsed;
      token.is_locution = Field<bool>(record, "locution");
      const Json &sense = record.at("sense");
      if (!sense.is_null()) {
        token.sense = wn::SynsetId::FromString(sense.get<std::string>());
      }

      if (docs.empty() || docs.back().id != doc_id) {
        if (!docs.empty()) finished.insert(docs.back().id);
        if (finished.count(doc_id)) {
          throw ValidationError("records for document '" + doc_id +
                                "' are not contiguous");
        }
        Document doc;
        doc.id = doc_id;
        doc.tokenized = true;
        docs.push_back(std::move(doc));
      }
      Document &doc = docs.back();
      if (doc.articles.empty() || doc.articles.back().label != label) {
        doc.articles.push_back({label, token.span, {}});
      }
      Article &article = doc.articles.back();
      article.span.begin = std::min(article.span.begin, token.span.begin);
      article.span.end = std::max(article.span.end, token.span.end);
      if (article.sentences.empty() ||
          article.sentences.back().index != sentence_index) {
        article.sentences.push_back({sentence_index, {}});
      }
      article.sentences.back().tokens.push_back(std::move(token));
    } catch (const Json::exception &e) {
      throw ValidationError(AtLine(name, i + 1, e.what()));
    } catch (const ValidationError &e) {
      throw ValidationError(AtLine(name, i + 1, e.what()));
    }
  }
  return docs;
}

std::vector<Document> ReadJsonLines(const std::filesystem::path &path) {
  return ParseJsonLines(text::ReadFile(path), path.string());
}

}  // namespace lexgap::corpus
