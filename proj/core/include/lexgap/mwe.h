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

#ifndef LEXGAP_MWE_H_
#define LEXGAP_MWE_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexgap/concord.h"
#include "lexgap/morpho.h"
#include "lexgap/wordnet.h"

namespace lexgap::mwe {

enum class Status { kPending, kKept, kRejected, kDisputed };

enum class Classification {
  kUnclassified,
  kNonCompositional,
  kCompositionalConventional,
  kCompositionalUnconventional,
};

std::string_view StatusName(Status status);
std::optional<Status> ParseStatus(std::string_view name);
std::string_view ClassificationName(Classification classification);
std::optional<Classification> ParseClassification(std::string_view name);

// Non-compositional expressions are conventional by definition, so both
// they and compositional-conventional ones belong in the glossary.
bool IsGlossaryEligible(Classification classification);

struct MweCandidate {
  std::string id;
  concord::NGramKey key;
  size_t frequency = 0;
  std::vector<std::string> documents;  // sorted
  Status status = Status::kPending;
  std::optional<bool> compositional;  // agreed value once kept
  Classification classification = Classification::kUnclassified;
  std::optional<size_t> head_index;
  std::optional<wn::SynsetId> head_sense;
  std::optional<wn::SynsetId> assigned_synset;

  std::string Term() const { return key.ToString(); }

  // Throws ValidationError when a field combination is impossible.
  void Validate() const;
};

// Hex FNV-1a hash of the space-joined key.
std::string CandidateId(const concord::NGramKey &key);

std::vector<MweCandidate> FromStats(const std::vector<concord::NGramStat> &stats);

// Replaces each candidate's document list with the documents in which its
// key occurs.
void FillDocuments(std::vector<MweCandidate> &candidates,
                   const std::vector<corpus::Document> &corpus);

inline constexpr std::string_view kAdjudicator = "adjudicator";
inline constexpr size_t kDefaultAnnotators = 2;
inline constexpr size_t kDefaultTopK = 50;

struct AnnotationDecision {
  std::string candidate_id;
  std::string annotator;
  bool keep = false;
  std::optional<bool> compositional;
  std::optional<std::string> note;
  std::string timestamp;  // ISO-8601 UTC; compares chronologically as text

  void Validate() const;

  friend bool operator==(const AnnotationDecision &,
                         const AnnotationDecision &) = default;
};

// The latest decision per (candidate, annotator). Equal timestamps are
// resolved in favour of the later record.
std::vector<AnnotationDecision> LatestDecisions(
    const std::vector<AnnotationDecision> &decisions);

// Status from the latest votes on one candidate. A vote by the adjudicator
// is final; otherwise unanimity over the other annotators decides.
Status CombineVotes(const std::vector<AnnotationDecision> &latest,
                    size_t required_annotators,
                    std::optional<bool> *compositional = nullptr);

std::vector<MweCandidate> Combine(
    std::vector<MweCandidate> candidates,
    const std::vector<AnnotationDecision> &decisions,
    size_t required_annotators = kDefaultAnnotators);

class TitleSet {
 public:
  static TitleSet Load(const std::filesystem::path &path);
  static TitleSet Parse(std::string_view contents);

  void Add(std::string_view raw_title);
  bool Contains(std::string_view text) const;
  size_t size() const { return titles_.size(); }

 private:
  std::unordered_set<std::string> titles_;
};

std::string NormalizeTitle(std::string_view raw);

Classification Classify(const MweCandidate &candidate, const TitleSet &titles);

// Classifies every kept candidate and clears the class of the rest.
void ClassifyAll(std::vector<MweCandidate> &candidates, const TitleSet &titles);

// Index of the first form with a NOUN analysis in the dictionary.
std::optional<size_t> IdentifyHead(const MweCandidate &candidate,
                                   const morpho::FormDictionary &dictionary);

// Lemma looked up in the wordnet for the head form.
std::string HeadLemma(const MweCandidate &candidate,
                      const morpho::FormDictionary *dictionary);

// Kept candidates by frequency desc, then key asc; at most k of them.
std::vector<MweCandidate> TopK(const std::vector<MweCandidate> &candidates,
                               size_t k = kDefaultTopK);

// Sets head_index on the top k kept, classified candidates.
void AssignHeads(std::vector<MweCandidate> &candidates,
                 const morpho::FormDictionary &dictionary,
                 size_t k = kDefaultTopK);

std::string DefaultGloss(const MweCandidate &candidate);

// Creates a synset for the candidate as a hyponym of its head sense, or
// returns the one it already has.
wn::SynsetId Attach(MweCandidate &candidate, wn::WordNetStore &store,
                    const morpho::FormDictionary *dictionary = nullptr);

struct AttachReport {
  std::vector<std::string> attached;  // candidate ids
  std::vector<std::string> skipped;   // "id<TAB>reason"
};

// Attaches every glossary-eligible candidate that has a head.
AttachReport AttachAll(std::vector<MweCandidate> &candidates,
                       wn::WordNetStore &store,
                       const morpho::FormDictionary *dictionary = nullptr);

struct GlossaryEntry {
  std::string term;
  wn::Pos pos = wn::Pos::kNoun;
  std::optional<wn::SynsetId> synset;
  std::optional<wn::SynsetId> hypernym;
  std::string gloss;
  size_t frequency = 0;
  std::vector<std::string> sources;
};

std::vector<GlossaryEntry> BuildGlossary(
    const std::vector<MweCandidate> &candidates, const wn::WordNetStore &store);

// TSV: term, pos, synset, hypernym, gloss, frequency, comma-joined sources.
// Missing ids are written as "-".
std::string FormatGlossary(const std::vector<GlossaryEntry> &entries);
void WriteGlossary(const std::filesystem::path &path,
                   const std::vector<GlossaryEntry> &entries);

std::string DumpCandidate(const MweCandidate &candidate);
MweCandidate ParseCandidate(std::string_view line);
std::string DumpCandidates(const std::vector<MweCandidate> &candidates);
std::vector<MweCandidate> ParseCandidates(
    std::string_view contents, const std::string &name = "candidates.jsonl");
std::vector<MweCandidate> ReadCandidates(const std::filesystem::path &path);
void WriteCandidates(const std::filesystem::path &path,
                     const std::vector<MweCandidate> &candidates);

std::string DumpDecision(const AnnotationDecision &decision);
AnnotationDecision ParseDecision(std::string_view line);
std::vector<AnnotationDecision> ParseDecisions(
    std::string_view contents, const std::string &name = "decisions.jsonl");
std::vector<AnnotationDecision> ReadDecisions(const std::filesystem::path &path);

}  // namespace lexgap::mwe

#endif  // LEXGAP_MWE_H_
