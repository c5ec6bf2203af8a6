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

#ifndef LEXGAP_ANNOTATION_H_
#define LEXGAP_ANNOTATION_H_

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "lexgap/concord.h"
#include "lexgap/corpus.h"
#include "lexgap/mwe.h"

namespace lexgap::annot {

// Append-only JSON-lines file of annotation decisions.
class DecisionLog {
 public:
  // Replays an existing log, or creates an empty one. A line that does not
  // parse aborts with a ValidationError naming the line.
  explicit DecisionLog(std::filesystem::path path);
  ~DecisionLog();

  DecisionLog(const DecisionLog &) = delete;
  DecisionLog &operator=(const DecisionLog &) = delete;

  // Writes and flushes one record before returning.
  void Append(const mwe::AnnotationDecision &decision);

  const std::vector<mwe::AnnotationDecision> &records() const {
    return records_;
  }
  const std::filesystem::path &path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::FILE *file_ = nullptr;
  std::vector<mwe::AnnotationDecision> records_;
};

// ISO-8601 UTC timestamp with milliseconds, e.g. 2026-01-02T03:04:05.678Z.
std::string FormatTimestamp(std::chrono::system_clock::time_point at);

struct ServiceOptions {
  size_t required_annotators = mwe::kDefaultAnnotators;
  std::vector<std::string> allowed_annotators;  // empty means anyone
  size_t kwic_lines = 10;
  size_t kwic_window = 8;
  size_t page_size = 50;
  std::filesystem::path export_path;  // defaults to <log>.combined.jsonl
};

struct CandidateView {
  mwe::MweCandidate candidate;  // with combined status
  std::vector<concord::ConcordanceLine> kwic;
  std::vector<mwe::AnnotationDecision> decisions;  // latest per annotator
};

struct Page {
  size_t page = 0;
  size_t page_size = 0;
  size_t total = 0;
  std::vector<mwe::MweCandidate> items;
};

struct Progress {
  size_t decided = 0;
  size_t pending = 0;
  size_t disputed = 0;

  friend bool operator==(const Progress &, const Progress &) = default;
};

struct ExportResult {
  std::filesystem::path path;
  size_t candidates = 0;
  size_t records = 0;  // log records the export reflects
};

// Candidate queue and decision state for one annotation project. State is
// rebuilt from the decision log on construction. All members are safe to
// call concurrently; log appends are serialized.
class AnnotationService {
 public:
  AnnotationService(std::vector<mwe::MweCandidate> candidates,
                    std::vector<corpus::Document> corpus,
                    std::filesystem::path log_path,
                    ServiceOptions options = {});

  // Highest-frequency candidate the annotator has not decided, or nullopt
  // when none remain. With `revisit`, disputed candidates the annotator
  // voted on are served as well. The adjudicator is served disputed
  // candidates it has not yet resolved.
  std::optional<CandidateView> Next(const std::string &annotator,
                                    bool revisit = false) const;

  // Validates, stamps and appends the decision; returns it as stored.
  mwe::AnnotationDecision Record(mwe::AnnotationDecision decision);

  std::optional<CandidateView> Get(const std::string &id) const;
  Page List(std::optional<mwe::Status> status, size_t page) const;
  std::vector<CandidateView> AdjudicationQueue() const;
  std::map<std::string, Progress> ProgressByAnnotator() const;

  // Candidates with status from combining the current log.
  std::vector<mwe::MweCandidate> Combined() const;

  ExportResult Export() const;

  // Latest decision by `annotator` on `id`, if any.
  std::optional<mwe::AnnotationDecision> DecisionOf(
      const std::string &id, const std::string &annotator) const;

  size_t log_size() const;
  const ServiceOptions &options() const { return options_; }

 private:
  using Latest = std::map<std::string, std::map<std::string, size_t>>;

  void Apply(const mwe::AnnotationDecision &decision, size_t record);
  void CheckAnnotator(const std::string &annotator) const;
  std::vector<mwe::AnnotationDecision> LatestFor(const std::string &id) const;
  mwe::Status StatusOf(const std::string &id) const;
  CandidateView View(const mwe::MweCandidate &candidate) const;
  std::string NextTimestamp();

  std::vector<mwe::MweCandidate> candidates_;  // frequency desc, key asc
  std::map<std::string, size_t> by_id_;
  std::vector<corpus::Document> corpus_;
  ServiceOptions options_;
  std::unique_ptr<DecisionLog> log_;
  // candidate id -> annotator -> index of latest record in the log.
  Latest latest_;
  std::string last_timestamp_;
  mutable std::shared_mutex mutex_;
};

// HTTP front end for an AnnotationService.
class AnnotationServer {
 public:
  explicit AnnotationServer(AnnotationService &service,
                            std::filesystem::path static_dir = {});
  ~AnnotationServer();

  // Binds to host:port; port 0 picks a free one. Returns the bound port.
  // Throws IoError when the address cannot be bound.
  int Bind(const std::string &host, int port);

  // Serves requests until Stop is called.
  void Listen();
  // Blocks until Listen is accepting connections.
  void WaitUntilReady();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lexgap::annot

#endif  // LEXGAP_ANNOTATION_H_
