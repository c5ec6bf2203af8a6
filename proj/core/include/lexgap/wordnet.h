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

#ifndef LEXGAP_WORDNET_H_
#define LEXGAP_WORDNET_H_

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

// A bilingual (English/Portuguese) wordnet aligned at the synset level.
//
// Each synset carries one sense-ordered lemma list per language; the first
// lemma of a list is the one for which this synset is the most frequent
// sense. Relations are stored as directed edges, and every edge is kept
// together with its inverse (hypernym/hyponym, domain_topic/domain_member;
// antonym and derivation are their own inverses).
namespace lexgap::wn {

enum class Pos : char {
  kAdjective = 'a',
  kNoun = 'n',
  kAdverb = 'r',
  kVerb = 'v',
};

std::optional<Pos> ParsePos(std::string_view s);
char PosLetter(Pos pos);

// Synset identifier rendered as DDDDDDDD-p. Offsets starting with 9 belong
// to synsets created locally; everything else comes from the source wordnet.
class SynsetId {
 public:
  static constexpr uint32_t kLocalBase = 90000000;
  static constexpr uint32_t kMaxOffset = 99999999;

  SynsetId(uint32_t offset, Pos pos);

  // Returns nullopt unless `s` matches DDDDDDDD-[nvar] exactly.
  static std::optional<SynsetId> Parse(std::string_view s);
  // As Parse, but raises ValidationError.
  static SynsetId FromString(std::string_view s);

  uint32_t offset() const { return offset_; }
  Pos pos() const { return pos_; }
  bool IsLocal() const { return offset_ >= kLocalBase; }
  std::string ToString() const;

  friend auto operator<=>(const SynsetId &, const SynsetId &) = default;

 private:
  uint32_t offset_;
  Pos pos_;
};

enum class Language { kEnglish = 0, kPortuguese = 1 };

std::optional<Language> ParseLanguage(std::string_view code);
std::string_view LanguageCode(Language language);

struct Synset {
  SynsetId id;
  std::array<std::vector<std::string>, 2> lemmas;
  std::string gloss;
  std::vector<std::string> examples;

  const std::vector<std::string> &Lemmas(Language language) const {
    return lemmas[static_cast<size_t>(language)];
  }
  std::vector<std::string> &Lemmas(Language language) {
    return lemmas[static_cast<size_t>(language)];
  }
};

// Enumerators are in alphabetical order of their names so that the
// canonical relation file sorts identically by enum or by name.
enum class RelationKind {
  kAntonym,
  kDerivation,
  kDomainMember,
  kDomainTopic,
  kHypernym,
  kHyponym,
};

std::optional<RelationKind> ParseRelationKind(std::string_view name);
std::string_view RelationName(RelationKind kind);
RelationKind Inverse(RelationKind kind);

struct Relation {
  SynsetId source;
  RelationKind kind;
  SynsetId target;

  friend auto operator<=>(const Relation &, const Relation &) = default;
};

// One row of a translation-gap report.
struct GapEntry {
  SynsetId id;
  std::vector<std::string> english;
  std::string gloss;
};

// In-memory wordnet. Const member functions are safe to call from many
// threads at once; mutations need exclusive access.
class WordNetStore {
 public:
  WordNetStore() = default;

  // Reads synsets.tsv and relations.tsv. Any malformed line, duplicate id,
  // or relation naming an unknown synset aborts the load.
  static WordNetStore Load(const std::filesystem::path &synset_file,
                           const std::filesystem::path &relation_file);
  static WordNetStore Parse(std::string_view synsets,
                            std::string_view relations,
                            const std::string &synset_name = "synsets.tsv",
                            const std::string &relation_name = "relations.tsv");

  // Canonical serialization: synsets sorted by id, relations sorted by
  // (source, kind, target) with both directions of every inverse pair.
  void Save(const std::filesystem::path &synset_file,
            const std::filesystem::path &relation_file) const;
  std::string SerializeSynsets() const;
  std::string SerializeRelations() const;

  size_t size() const { return synsets_.size(); }
  const std::map<SynsetId, Synset> &synsets() const { return synsets_; }
  const std::set<Relation> &relations() const { return relations_; }
  const Synset *Find(SynsetId id) const;
  bool Contains(SynsetId id) const { return synsets_.count(id) > 0; }

  // Targets of `kind` edges leaving `source`, in id order.
  std::vector<SynsetId> Targets(SynsetId source, RelationKind kind) const;

  // Synsets listing `lemma` for (pos, language). Ordered by the lemma's
  // position inside each synset's list (its sense priority), then by id.
  std::vector<SynsetId> Lookup(std::string_view lemma, Pos pos,
                               Language language) const;

  // Everything reachable from `start` by repeatedly following `kind`,
  // excluding `start` itself. Safe on cyclic graphs.
  std::set<SynsetId> Closure(SynsetId start, RelationKind kind) const;

  // Domain members of `topic` and of every hyponym of `topic` that have
  // no lemma in `language`, sorted by id.
  std::vector<GapEntry> DomainGapReport(SynsetId topic,
                                        Language language) const;

  // Appends `lemma` to the end of the synset's list for `language`.
  // No-op if the lemma is already present.
  void AddWord(SynsetId id, std::string_view lemma, Language language);

  // Creates a Portuguese-only synset below `hypernym` and returns its id,
  // allocated as 9 followed by a seven-digit counter. The counter continues
  // from the largest local id already in the store.
  SynsetId CreateSynset(const std::vector<std::string> &lemmas_pt, Pos pos,
                        std::string gloss, SynsetId hypernym);

  // Inserts a synset, validating its lemma lists.
  void AddSynset(Synset synset);

  // Inserts `source -kind-> target` and its inverse.
  void AddRelation(SynsetId source, RelationKind kind, SynsetId target);

  // Id that the next CreateSynset call with `pos` would return.
  SynsetId PeekNextLocalId(Pos pos) const;

 private:
  static std::string IndexKey(std::string_view lemma, Pos pos,
                              Language language);
  void IndexLemma(const Synset &synset, Language language,
                  const std::string &lemma);

  std::map<SynsetId, Synset> synsets_;
  std::set<Relation> relations_;
  std::unordered_map<std::string, std::vector<SynsetId>> index_;
  uint32_t next_local_ = 1;
};

}  // namespace lexgap::wn

#endif  // LEXGAP_WORDNET_H_
