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

#include <utility>

#include "json.hpp"
#include "lexgap/errors.h"
#include "lexgap/mwe.h"
#include "lexgap/text.h"

namespace lexgap::mwe {
namespace {

using Json = nlohmann::ordered_json;

Json OptionalId(const std::optional<wn::SynsetId> &id) {
  return id ? Json(id->ToString()) : Json(nullptr);
}

std::optional<wn::SynsetId> ReadOptionalId(const Json &record,
                                           const char *field) {
  if (!record.contains(field) || record[field].is_null()) return std::nullopt;
  return wn::SynsetId::FromString(record[field].get<std::string>());
}

template <typename T>
std::optional<T> ReadOptional(const Json &record, const char *field) {
  if (!record.contains(field) || record[field].is_null()) return std::nullopt;
  return record[field].get<T>();
}

Json ParseObject(std::string_view line) {
  Json record = Json::parse(line);
  if (!record.is_object()) throw ValidationError("expected a JSON object");
  return record;
}

// Runs `parse` on each non-blank line, prefixing errors with file:line.
template <typename T, typename Fn>
std::vector<T> ParseLines(std::string_view contents, const std::string &name,
                          Fn parse) {
  std::vector<T> out;
  std::vector<std::string> lines = text::Lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (text::Trim(lines[i]).empty()) continue;
    try {
      out.push_back(parse(lines[i]));
    } catch (const Json::exception &e) {
      throw ValidationError(AtLine(name, i + 1, e.what()));
    } catch (const ValidationError &e) {
      throw ValidationError(AtLine(name, i + 1, e.what()));
    }
  }
  return out;
}

}  // namespace

std::string DumpCandidate(const MweCandidate &candidate) {
  Json record;
  record["id"] = candidate.id;
  record["ngram"] = candidate.Term();
  record["frequency"] = candidate.frequency;
  record["documents"] = candidate.documents;
  record["status"] = StatusName(candidate.status);
  record["compositional"] = candidate.compositional
                                ? Json(*candidate.compositional)
                                : Json(nullptr);
  record["classification"] = ClassificationName(candidate.classification);
  record["head_index"] =
      candidate.head_index ? Json(*candidate.head_index) : Json(nullptr);
  record["head_sense"] = OptionalId(candidate.head_sense);
  record["assigned_synset"] = OptionalId(candidate.assigned_synset);
  return record.dump();
}

MweCandidate ParseCandidate(std::string_view line) {
  Json record = ParseObject(line);
  MweCandidate candidate;
  candidate.key = concord::NGramKey::FromString(
      record.at("ngram").get<std::string>());
  candidate.id = record.contains("id") ? record["id"].get<std::string>()
                                       : CandidateId(candidate.key);
  candidate.frequency = record.at("frequency").get<size_t>();
  if (record.contains("documents")) {
    candidate.documents =
        record["documents"].get<std::vector<std::string>>();
  }
  std::string status = record.value("status", "pending");
  std::optional<Status> parsed_status = ParseStatus(status);
  if (!parsed_status) throw ValidationError("unknown status '" + status + "'");
  candidate.status = *parsed_status;
  candidate.compositional = ReadOptional<bool>(record, "compositional");
  std::string classification = record.value("classification", "unclassified");
  std::optional<Classification> parsed_class =
      ParseClassification(classification);
  if (!parsed_class) {
    throw ValidationError("unknown classification '" + classification + "'");
  }
  candidate.classification = *parsed_class;
  candidate.head_index = ReadOptional<size_t>(record, "head_index");
  candidate.head_sense = ReadOptionalId(record, "head_sense");
  candidate.assigned_synset = ReadOptionalId(record, "assigned_synset");
  candidate.Validate();
  return candidate;
}

std::string DumpCandidates(const std::vector<MweCandidate> &candidates) {
  std::string out;
  for (const MweCandidate &candidate : candidates) {
    out += DumpCandidate(candidate);
    out += '\n';
  }
  return out;
}

std::vector<MweCandidate> ParseCandidates(std::string_view contents,
                                          const std::string &name) {
  std::vector<MweCandidate> candidates =
      ParseLines<MweCandidate>(contents, name, ParseCandidate);
  std::set<std::string> ids;
  for (const MweCandidate &candidate : candidates) {
    if (!ids.insert(candidate.id).second) {
      throw ValidationError(name + ": duplicate candidate id '" +
                            candidate.id + "'");
    }
  }
  return candidates;
}

std::vector<MweCandidate> ReadCandidates(const std::filesystem::path &path) {
  return ParseCandidates(text::ReadFile(path), path.string());
}

void WriteCandidates(const std::filesystem::path &path,
                     const std::vector<MweCandidate> &candidates) {
  text::WriteFile(path, DumpCandidates(candidates));
}

std::string DumpDecision(const AnnotationDecision &decision) {
  Json record;
  record["candidate"] = decision.candidate_id;
  record["annotator"] = decision.annotator;
  record["keep"] = decision.keep;
  record["compositional"] = decision.compositional
                                ? Json(*decision.compositional)
                                : Json(nullptr);
  record["note"] = decision.note ? Json(*decision.note) : Json(nullptr);
  record["timestamp"] = decision.timestamp;
  return record.dump();
}

AnnotationDecision ParseDecision(std::string_view line) {
  Json record = ParseObject(line);
  AnnotationDecision decision;
  decision.candidate_id = record.at("candidate").get<std::string>();
  decision.annotator = record.at("annotator").get<std::string>();
  decision.keep = record.at("keep").get<bool>();
  decision.compositional = ReadOptional<bool>(record, "compositional");
  decision.note = ReadOptional<std::string>(record, "note");
  decision.timestamp = record.value("timestamp", "");
  decision.Validate();
  return decision;
}

std::vector<AnnotationDecision> ParseDecisions(std::string_view contents,
                                               const std::string &name) {
  return ParseLines<AnnotationDecision>(contents, name, ParseDecision);
}

std::vector<AnnotationDecision> ReadDecisions(
    const std::filesystem::path &path) {
  return ParseDecisions(text::ReadFile(path), path.string());
}

}  // namespace lexgap::mwe
