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

#include "lexgap/mwe.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <utility>

#include "lexgap/errors.h"
#include "lexgap/text.h"

namespace lexgap::mwe {
namespace {

bool FrequencyOrder(const MweCandidate &a, const MweCandidate &b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.key < b.key;
}

}  // namespace

std::string_view StatusName(Status status) {
  switch (status) {
    case Status::kPending: return "pending";
    case Status::kKept: return "kept";
    case Status::kRejected: return "rejected";
    case Status::kDisputed: return "disputed";
  }
  return "pending";
}

std::optional<Status> ParseStatus(std::string_view name) {
  for (Status s : {Status::kPending, Status::kKept, Status::kRejected,
                   Status::kDisputed}) {
    if (StatusName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view ClassificationName(Classification classification) {
  switch (classification) {
    case Classification::kUnclassified: return "unclassified";
    case Classification::kNonCompositional: return "non_compositional";
    case Classification::kCompositionalConventional:
      return "compositional_conventional";
    case Classification::kCompositionalUnconventional:
      return "compositional_unconventional";
  }
  return "unclassified";
}

std::optional<Classification> ParseClassification(std::string_view name) {
  for (Classification c :
       {Classification::kUnclassified, Classification::kNonCompositional,
        Classification::kCompositionalConventional,
        Classification::kCompositionalUnconventional}) {
    if (ClassificationName(c) == name) return c;
  }
  return std::nullopt;
}

bool IsGlossaryEligible(Classification classification) {
  return classification == Classification::kNonCompositional ||
         classification == Classification::kCompositionalConventional;
}

void MweCandidate::Validate() const {
  if (key.forms.size() < 2 || key.forms.size() > 3) {
    throw ValidationError("candidate '" + id + "' must have 2 or 3 forms");
  }
  if (classification != Classification::kUnclassified &&
      status != Status::kKept) {
    throw ValidationError("candidate '" + id + "' is classified but not kept");
  }
  if (head_index && *head_index >= key.forms.size()) {
    throw ValidationError("candidate '" + id + "' head index out of range");
  }
  if (assigned_synset && !head_sense) {
    throw ValidationError("candidate '" + id +
                          "' has a synset but no head sense");
  }
}

std::string CandidateId(const concord::NGramKey &key) {
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : key.ToString()) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

std::vector<MweCandidate> FromStats(
    const std::vector<concord::NGramStat> &stats) {
  std::vector<MweCandidate> candidates;
  candidates.reserve(stats.size());
  for (const concord::NGramStat &stat : stats) {
    MweCandidate candidate;
    candidate.id = CandidateId(stat.key);
    candidate.key = stat.key;
    candidate.frequency = stat.frequency;
    candidate.documents.assign(stat.documents.begin(), stat.documents.end());
    candidates.push_back(std::move(candidate));
  }
  return candidates;
}

void FillDocuments(std::vector<MweCandidate> &candidates,
                   const std::vector<corpus::Document> &corpus) {
  concord::NGramCounts counts(0);
  for (const corpus::Document &doc : corpus) counts.AddDocument(doc);
  std::map<concord::NGramKey, std::set<std::string>> found;
  for (const concord::NGramStat &stat : counts.Select(1)) {
    found.emplace(stat.key, stat.documents);
  }
  for (MweCandidate &candidate : candidates) {
    auto it = found.find(candidate.key);
    candidate.documents.clear();
    if (it != found.end()) {
      candidate.documents.assign(it->second.begin(), it->second.end());
    }
  }
}

void AnnotationDecision::Validate() const {
  if (candidate_id.empty()) throw ValidationError("decision without candidate");
  if (text::Trim(annotator).empty()) {
    throw ValidationError("decision without annotator");
  }
  if (keep && !compositional) {
    throw ValidationError("keep decision on '" + candidate_id +
                          "' needs a compositional judgement");
  }
}

std::vector<AnnotationDecision> LatestDecisions(
    const std::vector<AnnotationDecision> &decisions) {
  std::map<std::pair<std::string, std::string>, const AnnotationDecision *>
      latest;
  for (const AnnotationDecision &decision : decisions) {
    auto &slot = latest[{decision.candidate_id, decision.annotator}];
    if (!slot || slot->timestamp <= decision.timestamp) slot = &decision;
  }
  std::vector<AnnotationDecision> out;
  out.reserve(latest.size());
  for (const auto &[key, decision] : latest) out.push_back(*decision);
  return out;
}

Status CombineVotes(const std::vector<AnnotationDecision> &latest,
                    size_t required_annotators,
                    std::optional<bool> *compositional) {
  if (required_annotators < 1) {
    throw ValidationError("at least one annotator is required");
  }
  if (compositional) compositional->reset();
  std::vector<const AnnotationDecision *> votes;
  for (const AnnotationDecision &decision : latest) {
    if (decision.annotator == kAdjudicator) {
      if (!decision.keep) return Status::kRejected;
      if (compositional) *compositional = decision.compositional;
      return Status::kKept;
    }
    votes.push_back(&decision);
  }
  if (votes.size() < required_annotators) return Status::kPending;
  bool all_keep = std::all_of(votes.begin(), votes.end(),
                              [](const auto *d) { return d->keep; });
  bool all_reject = std::none_of(votes.begin(), votes.end(),
                                 [](const auto *d) { return d->keep; });
  if (all_reject) return Status::kRejected;
  if (!all_keep) return Status::kDisputed;
  std::optional<bool> agreed = votes.front()->compositional;
  for (const auto *vote : votes) {
    if (vote->compositional != agreed) return Status::kDisputed;
  }
  if (compositional) *compositional = agreed;
  return Status::kKept;
}

std::vector<MweCandidate> Combine(
    std::vector<MweCandidate> candidates,
    const std::vector<AnnotationDecision> &decisions,
    size_t required_annotators) {
  if (required_annotators < 1) {
    throw ValidationError("at least one annotator is required");
  }
  std::map<std::string, std::vector<AnnotationDecision>> by_candidate;
  for (const MweCandidate &candidate : candidates) {
    by_candidate[candidate.id];
  }
  for (AnnotationDecision &decision : LatestDecisions(decisions)) {
    auto it = by_candidate.find(decision.candidate_id);
    if (it == by_candidate.end()) {
      throw ValidationError("decision references unknown candidate '" +
                            decision.candidate_id + "'");
    }
    it->second.push_back(std::move(decision));
  }
  for (MweCandidate &candidate : candidates) {
    std::optional<bool> compositional;
    Status status = CombineVotes(by_candidate[candidate.id],
                                 required_annotators, &compositional);
    bool unchanged = candidate.status == Status::kKept &&
                     status == Status::kKept &&
                     candidate.compositional == compositional;
    if (!unchanged) candidate.classification = Classification::kUnclassified;
    candidate.status = status;
    candidate.compositional = compositional;
  }
  return candidates;
}

std::string NormalizeTitle(std::string_view raw) {
  std::string folded = text::Fold(raw);
  std::string out;
  bool pending_space = false;
  size_t pos = 0;
  while (pos < folded.size()) {
    size_t start = pos;
    char32_t c = text::DecodeNext(folded, pos);
    if (c == U'_' || text::IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out.append(folded, start, pos - start);
  }
  return out;
}

TitleSet TitleSet::Load(const std::filesystem::path &path) {
  return Parse(text::ReadFile(path));
}

TitleSet TitleSet::Parse(std::string_view contents) {
  TitleSet titles;
  for (const std::string &line : text::Lines(contents)) titles.Add(line);
  return titles;
}

void TitleSet::Add(std::string_view raw_title) {
  std::string title = NormalizeTitle(raw_title);
  if (!title.empty()) titles_.insert(std::move(title));
}

bool TitleSet::Contains(std::string_view value) const {
  return titles_.count(NormalizeTitle(value)) > 0;
}

Classification Classify(const MweCandidate &candidate, const TitleSet &titles) {
  if (candidate.status != Status::kKept) {
    throw ValidationError("candidate '" + candidate.Term() + "' is not kept");
  }
  if (!candidate.compositional) {
    throw ValidationError("candidate '" + candidate.Term() +
                          "' has no compositional judgement");
  }
  if (!*candidate.compositional) return Classification::kNonCompositional;
  return titles.Contains(candidate.Term())
             ? Classification::kCompositionalConventional
             : Classification::kCompositionalUnconventional;
}

void ClassifyAll(std::vector<MweCandidate> &candidates,
                 const TitleSet &titles) {
  for (MweCandidate &candidate : candidates) {
    candidate.classification = candidate.status == Status::kKept
                                   ? Classify(candidate, titles)
                                   : Classification::kUnclassified;
  }
}

std::optional<size_t> IdentifyHead(const MweCandidate &candidate,
                                   const morpho::FormDictionary &dictionary) {
  for (size_t i = 0; i < candidate.key.forms.size(); ++i) {
    const auto *analyses = dictionary.Find(candidate.key.forms[i]);
    if (!analyses) continue;
    for (const morpho::Analysis &analysis : *analyses) {
      if (analysis.tag == corpus::Tag::kNoun) return i;
    }
  }
  return std::nullopt;
}

std::string HeadLemma(const MweCandidate &candidate,
                      const morpho::FormDictionary *dictionary) {
  if (!candidate.head_index) {
    throw ValidationError("candidate '" + candidate.Term() + "' has no head");
  }
  const std::string &form = candidate.key.forms.at(*candidate.head_index);
  if (dictionary) {
    if (const auto *analyses = dictionary->Find(form)) {
      for (const morpho::Analysis &analysis : *analyses) {
        if (analysis.tag == corpus::Tag::kNoun) return analysis.lemma;
      }
    }
  }
  return form;
}

std::vector<MweCandidate> TopK(const std::vector<MweCandidate> &candidates,
                               size_t k) {
  if (k < 1) throw ValidationError("k must be at least 1");
  std::vector<MweCandidate> kept;
  for (const MweCandidate &candidate : candidates) {
    if (candidate.status == Status::kKept) kept.push_back(candidate);
  }
  std::sort(kept.begin(), kept.end(), FrequencyOrder);
  if (kept.size() > k) kept.resize(k);
  return kept;
}

void AssignHeads(std::vector<MweCandidate> &candidates,
                 const morpho::FormDictionary &dictionary, size_t k) {
  if (k < 1) throw ValidationError("k must be at least 1");
  std::vector<MweCandidate *> ranked;
  for (MweCandidate &candidate : candidates) {
    if (candidate.status == Status::kKept &&
        candidate.classification != Classification::kUnclassified) {
      ranked.push_back(&candidate);
    }
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const MweCandidate *a, const MweCandidate *b) {
              return FrequencyOrder(*a, *b);
            });
  if (ranked.size() > k) ranked.resize(k);
  for (MweCandidate *candidate : ranked) {
    candidate->head_index = IdentifyHead(*candidate, dictionary);
  }
}

std::string DefaultGloss(const MweCandidate &candidate) {
  return "MWE extracted from corpus: " + candidate.Term();
}

wn::SynsetId Attach(MweCandidate &candidate, wn::WordNetStore &store,
                    const morpho::FormDictionary *dictionary) {
  if (candidate.assigned_synset && store.Contains(*candidate.assigned_synset)) {
    return *candidate.assigned_synset;
  }
  if (!candidate.head_sense) {
    std::string lemma = HeadLemma(candidate, dictionary);
    std::vector<wn::SynsetId> senses =
        store.Lookup(lemma, wn::Pos::kNoun, wn::Language::kPortuguese);
    if (senses.empty()) {
      throw ValidationError("head lemma '" + lemma + "' of '" +
                            candidate.Term() + "' is not in the wordnet");
    }
    candidate.head_sense = senses.front();
  }
  if (!store.Contains(*candidate.head_sense)) {
    throw ValidationError("head sense " + candidate.head_sense->ToString() +
                          " of '" + candidate.Term() + "' is not in the wordnet");
  }
  std::string lemma = text::Join(candidate.key.forms, "_");
  // A synset created by an earlier run under the same head is reused.
  for (wn::SynsetId id :
       store.Lookup(lemma, wn::Pos::kNoun, wn::Language::kPortuguese)) {
    std::vector<wn::SynsetId> parents =
        store.Targets(id, wn::RelationKind::kHypernym);
    if (id.IsLocal() && std::find(parents.begin(), parents.end(),
                                  *candidate.head_sense) != parents.end()) {
      candidate.assigned_synset = id;
      return id;
    }
  }
  candidate.assigned_synset = store.CreateSynset(
      {lemma}, wn::Pos::kNoun, DefaultGloss(candidate), *candidate.head_sense);
  return *candidate.assigned_synset;
}

AttachReport AttachAll(std::vector<MweCandidate> &candidates,
                       wn::WordNetStore &store,
                       const morpho::FormDictionary *dictionary) {
  AttachReport report;
  for (MweCandidate &candidate : candidates) {
    if (!IsGlossaryEligible(candidate.classification)) continue;
    if (!candidate.head_index && !candidate.head_sense &&
        !candidate.assigned_synset) {
      report.skipped.push_back(candidate.id + "\tno head");
      continue;
    }
    try {
      Attach(candidate, store, dictionary);
      report.attached.push_back(candidate.id);
    } catch (const ValidationError &e) {
      report.skipped.push_back(candidate.id + "\t" + e.what());
    }
  }
  return report;
}

std::vector<GlossaryEntry> BuildGlossary(
    const std::vector<MweCandidate> &candidates,
    const wn::WordNetStore &store) {
  std::vector<GlossaryEntry> entries;
  for (const MweCandidate &candidate : candidates) {
    if (!IsGlossaryEligible(candidate.classification)) continue;
    GlossaryEntry entry;
    entry.term = candidate.Term();
    entry.synset = candidate.assigned_synset;
    entry.hypernym = candidate.head_sense;
    if (entry.synset) {
      entry.pos = entry.synset->pos();
      if (const wn::Synset *synset = store.Find(*entry.synset)) {
        entry.gloss = synset->gloss;
      }
    }
    entry.frequency = candidate.frequency;
    entry.sources = candidate.documents;
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(),
            [](const GlossaryEntry &a, const GlossaryEntry &b) {
              return a.term < b.term;
            });
  return entries;
}

std::string FormatGlossary(const std::vector<GlossaryEntry> &entries) {
  auto id_or_dash = [](const std::optional<wn::SynsetId> &id) {
    return id ? id->ToString() : std::string("-");
  };
  std::string out;
  for (const GlossaryEntry &entry : entries) {
    out += entry.term + "\t" + std::string(1, wn::PosLetter(entry.pos)) +
           "\t" + id_or_dash(entry.synset) + "\t" +
           id_or_dash(entry.hypernym) + "\t" +
           (entry.gloss.empty() ? "-" : entry.gloss) + "\t" +
           std::to_string(entry.frequency) + "\t" +
           (entry.sources.empty() ? "-" : text::Join(entry.sources, ",")) +
           "\n";
  }
  return out;
}

void WriteGlossary(const std::filesystem::path &path,
                   const std::vector<GlossaryEntry> &entries) {
  text::WriteFile(path, FormatGlossary(entries));
}

}  // namespace lexgap::mwe
