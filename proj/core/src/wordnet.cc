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

#include "lexgap/wordnet.h"

#include <algorithm>
#include <deque>

#include "lexgap/errors.h"
#include "lexgap/text.h"

namespace lexgap::wn {
namespace {

constexpr std::array<std::string_view, 6> kRelationNames = {
    "antonym", "derivation", "domain_member",
    "domain_topic", "hypernym", "hyponym",
};

std::vector<std::string> ParseLemmaField(std::string_view field) {
  std::vector<std::string> lemmas;
  if (field.empty()) return lemmas;
  for (const std::string &raw : text::Split(field, '|')) {
    lemmas.push_back(text::NormalizeLemma(raw));
  }
  return lemmas;
}

void CheckFreeText(std::string_view s, const char *what) {
  if (s.find_first_of("\t\n\r") != std::string_view::npos) {
    throw ValidationError(std::string(what) +
                          " must not contain tabs or line breaks");
  }
}

}  // namespace

std::optional<Pos> ParsePos(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'n': return Pos::kNoun;
    case 'v': return Pos::kVerb;
    case 'a': return Pos::kAdjective;
    case 'r': return Pos::kAdverb;
    default: return std::nullopt;
  }
}

char PosLetter(Pos pos) { return static_cast<char>(pos); }

SynsetId::SynsetId(uint32_t offset, Pos pos) : offset_(offset), pos_(pos) {
  if (offset > kMaxOffset) {
    throw ValidationError("synset offset out of range: " +
                          std::to_string(offset));
  }
}

std::optional<SynsetId> SynsetId::Parse(std::string_view s) {
  if (s.size() != 10 || s[8] != '-') return std::nullopt;
  uint32_t offset = 0;
  for (size_t i = 0; i < 8; ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    offset = offset * 10 + static_cast<uint32_t>(s[i] - '0');
  }
  std::optional<Pos> pos = ParsePos(s.substr(9));
  if (!pos) return std::nullopt;
  return SynsetId(offset, *pos);
}

SynsetId SynsetId::FromString(std::string_view s) {
  std::optional<SynsetId> id = Parse(s);
  if (!id) throw ValidationError("malformed synset id '" + std::string(s) + "'");
  return *id;
}

std::string SynsetId::ToString() const {
  std::string digits = std::to_string(offset_);
  std::string out(8 - digits.size(), '0');
  out += digits;
  out += '-';
  out += PosLetter(pos_);
  return out;
}

std::optional<Language> ParseLanguage(std::string_view code) {
  if (code == "en") return Language::kEnglish;
  if (code == "pt") return Language::kPortuguese;
  return std::nullopt;
}

std::string_view LanguageCode(Language language) {
  return language == Language::kEnglish ? "en" : "pt";
}

std::optional<RelationKind> ParseRelationKind(std::string_view name) {
  for (size_t i = 0; i < kRelationNames.size(); ++i) {
    if (kRelationNames[i] == name) return static_cast<RelationKind>(i);
  }
  return std::nullopt;
}

std::string_view RelationName(RelationKind kind) {
  return kRelationNames[static_cast<size_t>(kind)];
}

RelationKind Inverse(RelationKind kind) {
  switch (kind) {
    case RelationKind::kHypernym: return RelationKind::kHyponym;
    case RelationKind::kHyponym: return RelationKind::kHypernym;
    case RelationKind::kDomainTopic: return RelationKind::kDomainMember;
    case RelationKind::kDomainMember: return RelationKind::kDomainTopic;
    case RelationKind::kAntonym:
    case RelationKind::kDerivation:
      return kind;
  }
  return kind;
}

WordNetStore WordNetStore::Load(const std::filesystem::path &synset_file,
                                const std::filesystem::path &relation_file) {
  return Parse(text::ReadFile(synset_file), text::ReadFile(relation_file),
               synset_file.string(), relation_file.string());
}

WordNetStore WordNetStore::Parse(std::string_view synsets,
                                 std::string_view relations,
                                 const std::string &synset_name,
                                 const std::string &relation_name) {
  WordNetStore store;
  std::vector<std::string> lines = text::Lines(synsets);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string &line = lines[i];
    if (line.empty()) continue;
    try {
      std::vector<std::string> fields = text::Split(line, '\t');
      if (fields.size() != 4 && fields.size() != 5) {
        throw ValidationError("expected 4 or 5 tab-separated fields, got " +
                              std::to_string(fields.size()));
      }
      Synset synset{SynsetId::FromString(fields[0]), {}, fields[3], {}};
      synset.Lemmas(Language::kEnglish) = ParseLemmaField(fields[1]);
      synset.Lemmas(Language::kPortuguese) = ParseLemmaField(fields[2]);
      if (fields.size() == 5 && !fields[4].empty()) {
        synset.examples = text::Split(fields[4], '|');
      }
      store.AddSynset(std::move(synset));
    } catch (const ValidationError &e) {
      throw ValidationError(AtLine(synset_name, i + 1, e.what()));
    }
  }
  if (store.synsets_.empty()) {
    throw ValidationError(synset_name + ": no synsets loaded");
  }

  lines = text::Lines(relations);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string &line = lines[i];
    if (line.empty()) continue;
    try {
      std::vector<std::string> fields = text::Split(line, '\t');
      if (fields.size() != 3) {
        throw ValidationError("expected 3 tab-separated fields, got " +
                              std::to_string(fields.size()));
      }
      SynsetId source = SynsetId::FromString(fields[0]);
      std::optional<RelationKind> kind = ParseRelationKind(fields[1]);
      if (!kind) throw ValidationError("unknown relation kind '" + fields[1] + "'");
      SynsetId target = SynsetId::FromString(fields[2]);
      store.AddRelation(source, *kind, target);
    } catch (const ValidationError &e) {
      throw ValidationError(AtLine(relation_name, i + 1, e.what()));
    }
  }
  return store;
}

void WordNetStore::Save(const std::filesystem::path &synset_file,
                        const std::filesystem::path &relation_file) const {
  text::WriteFile(synset_file, SerializeSynsets());
  text::WriteFile(relation_file, SerializeRelations());
}

std::string WordNetStore::SerializeSynsets() const {
  std::string out;
  for (const auto &[id, synset] : synsets_) {
    out += id.ToString();
    out += '\t';
    out += text::Join(synset.Lemmas(Language::kEnglish), "|");
    out += '\t';
    out += text::Join(synset.Lemmas(Language::kPortuguese), "|");
    out += '\t';
    out += synset.gloss;
    if (!synset.examples.empty()) {
      out += '\t';
      out += text::Join(synset.examples, "|");
    }
    out += '\n';
  }
  return out;
}

std::string WordNetStore::SerializeRelations() const {
  std::string out;
  for (const Relation &r : relations_) {
    out += r.source.ToString();
    out += '\t';
    out += RelationName(r.kind);
    out += '\t';
    out += r.target.ToString();
    out += '\n';
  }
  return out;
}

const Synset *WordNetStore::Find(SynsetId id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

std::vector<SynsetId> WordNetStore::Targets(SynsetId source,
                                            RelationKind kind) const {
  std::vector<SynsetId> out;
  const SynsetId lowest(0, Pos::kAdjective);
  for (auto it = relations_.lower_bound(Relation{source, kind, lowest});
       it != relations_.end() && it->source == source && it->kind == kind;
       ++it) {
    out.push_back(it->target);
  }
  return out;
}

std::vector<SynsetId> WordNetStore::Lookup(std::string_view lemma, Pos pos,
                                           Language language) const {
  auto it = index_.find(IndexKey(text::NormalizeLemma(lemma), pos, language));
  if (it == index_.end()) return {};
  return it->second;
}

std::set<SynsetId> WordNetStore::Closure(SynsetId start,
                                         RelationKind kind) const {
  if (!Contains(start)) {
    throw ValidationError("unknown synset " + start.ToString());
  }
  std::set<SynsetId> visited;
  std::deque<SynsetId> frontier = {start};
  while (!frontier.empty()) {
    SynsetId current = frontier.front();
    frontier.pop_front();
    for (SynsetId next : Targets(current, kind)) {
      if (next == start) continue;
      if (visited.insert(next).second) frontier.push_back(next);
    }
  }
  return visited;
}

std::vector<GapEntry> WordNetStore::DomainGapReport(SynsetId topic,
                                                    Language language) const {
  std::set<SynsetId> topics = Closure(topic, RelationKind::kHyponym);
  topics.insert(topic);
  std::set<SynsetId> members;
  for (SynsetId t : topics) {
    for (SynsetId member : Targets(t, RelationKind::kDomainMember)) {
      members.insert(member);
    }
  }
  std::vector<GapEntry> report;
  for (SynsetId id : members) {
    const Synset &synset = synsets_.at(id);
    if (!synset.Lemmas(language).empty()) continue;
    report.push_back({id, synset.Lemmas(Language::kEnglish), synset.gloss});
  }
  return report;
}

void WordNetStore::AddWord(SynsetId id, std::string_view lemma,
                           Language language) {
  auto it = synsets_.find(id);
  if (it == synsets_.end()) {
    throw ValidationError("unknown synset " + id.ToString());
  }
  std::string normalized = text::NormalizeLemma(lemma);
  if (normalized.empty()) throw ValidationError("empty lemma");
  if (normalized.find_first_of("|\t\n") != std::string::npos) {
    throw ValidationError("lemma contains a reserved character: " + normalized);
  }
  std::vector<std::string> &lemmas = it->second.Lemmas(language);
  if (std::find(lemmas.begin(), lemmas.end(), normalized) != lemmas.end()) {
    return;
  }
  lemmas.push_back(normalized);
  IndexLemma(it->second, language, normalized);
}

SynsetId WordNetStore::PeekNextLocalId(Pos pos) const {
  uint32_t counter = next_local_;
  while (true) {
    if (SynsetId::kLocalBase + counter > SynsetId::kMaxOffset) {
      throw ValidationError("local synset id space exhausted");
    }
    SynsetId candidate(SynsetId::kLocalBase + counter, pos);
    if (!Contains(candidate)) return candidate;
    ++counter;
  }
}

SynsetId WordNetStore::CreateSynset(const std::vector<std::string> &lemmas_pt,
                                    Pos pos, std::string gloss,
                                    SynsetId hypernym) {
  if (lemmas_pt.empty()) throw ValidationError("new synset needs a lemma");
  if (!Contains(hypernym)) {
    throw ValidationError("unknown hypernym " + hypernym.ToString());
  }
  if (hypernym.pos() != pos) {
    throw ValidationError("part of speech '" + std::string(1, PosLetter(pos)) +
                          "' does not match hypernym " + hypernym.ToString());
  }
  CheckFreeText(gloss, "gloss");
  SynsetId id = PeekNextLocalId(pos);
  Synset synset{id, {}, std::move(gloss), {}};
  for (const std::string &lemma : lemmas_pt) {
    synset.Lemmas(Language::kPortuguese).push_back(text::NormalizeLemma(lemma));
  }
  AddSynset(std::move(synset));
  AddRelation(id, RelationKind::kHypernym, hypernym);
  return id;
}

void WordNetStore::AddSynset(Synset synset) {
  if (synsets_.count(synset.id)) {
    throw ValidationError("duplicate synset id " + synset.id.ToString());
  }
  CheckFreeText(synset.gloss, "gloss");
  bool any = false;
  for (const auto &list : synset.lemmas) {
    std::set<std::string_view> seen;
    for (const std::string &lemma : list) {
      if (lemma.empty()) throw ValidationError("empty lemma");
      if (lemma.find_first_of("|\t\n") != std::string::npos) {
        throw ValidationError("lemma contains a reserved character: " + lemma);
      }
      if (!seen.insert(lemma).second) {
        throw ValidationError("duplicate lemma '" + lemma + "' in " +
                              synset.id.ToString());
      }
    }
    any = any || !list.empty();
  }
  if (!any) {
    throw ValidationError("synset " + synset.id.ToString() + " has no lemmas");
  }
  if (synset.id.IsLocal()) {
    next_local_ = std::max(next_local_,
                           synset.id.offset() - SynsetId::kLocalBase + 1);
  }
  SynsetId id = synset.id;
  const Synset &stored = synsets_.emplace(id, std::move(synset)).first->second;
  for (Language language : {Language::kEnglish, Language::kPortuguese}) {
    for (const std::string &lemma : stored.Lemmas(language)) {
      IndexLemma(stored, language, lemma);
    }
  }
}

void WordNetStore::AddRelation(SynsetId source, RelationKind kind,
                               SynsetId target) {
  if (!Contains(source)) {
    throw ValidationError("relation references unknown synset " +
                          source.ToString());
  }
  if (!Contains(target)) {
    throw ValidationError("relation references unknown synset " +
                          target.ToString());
  }
  if (source == target) {
    throw ValidationError("self relation on " + source.ToString());
  }
  relations_.insert({source, kind, target});
  relations_.insert({target, Inverse(kind), source});
}

std::string WordNetStore::IndexKey(std::string_view lemma, Pos pos,
                                   Language language) {
  std::string key(lemma);
  key += '\x1f';
  key += PosLetter(pos);
  key += LanguageCode(language);
  return key;
}

void WordNetStore::IndexLemma(const Synset &synset, Language language,
                              const std::string &lemma) {
  std::vector<SynsetId> &ids = index_[IndexKey(lemma, synset.id.pos(), language)];
  ids.push_back(synset.id);
  auto rank = [&](SynsetId id) {
    const std::vector<std::string> &list = synsets_.at(id).Lemmas(language);
    return static_cast<size_t>(std::find(list.begin(), list.end(), lemma) -
                               list.begin());
  };
  std::stable_sort(ids.begin(), ids.end(), [&](SynsetId a, SynsetId b) {
    size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
}

}  // namespace lexgap::wn
