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

#include "lexgap/annotation.h"

#include <unistd.h>

#include <algorithm>
#include <cstring>
#include <ctime>
#include <mutex>
#include <set>

#include "lexgap/errors.h"
#include "lexgap/text.h"

namespace lexgap::annot {
namespace {

using Clock = std::chrono::system_clock;

// Milliseconds since the epoch for a timestamp in our format.
std::optional<int64_t> ParseTimestamp(const std::string &value) {
  std::tm tm{};
  int millis = 0;
  if (std::sscanf(value.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d.%3dZ", &tm.tm_year,
                  &tm.tm_mon, &tm.tm_mday, &tm.tm_hour, &tm.tm_min,
                  &tm.tm_sec, &millis) != 7) {
    return std::nullopt;
  }
  tm.tm_year -= 1900;
  tm.tm_mon -= 1;
  return static_cast<int64_t>(timegm(&tm)) * 1000 + millis;
}

std::string FormatMillis(int64_t millis) {
  std::time_t seconds = static_cast<std::time_t>(millis / 1000);
  std::tm tm{};
  gmtime_r(&seconds, &tm);
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec, static_cast<int>(millis % 1000));
  return buffer;
}

int64_t ToMillis(Clock::time_point at) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             at.time_since_epoch())
      .count();
}

bool QueueOrder(const mwe::MweCandidate &a, const mwe::MweCandidate &b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.key < b.key;
}

}  // namespace

std::string FormatTimestamp(Clock::time_point at) {
  return FormatMillis(ToMillis(at));
}

// DecisionLog

DecisionLog::DecisionLog(std::filesystem::path path) : path_(std::move(path)) {
  bool needs_newline = false;
  if (std::filesystem::exists(path_)) {
    std::string contents = text::ReadFile(path_);
    records_ = mwe::ParseDecisions(contents, path_.string());
    needs_newline = !contents.empty() && contents.back() != '\n';
  }
  file_ = std::fopen(path_.c_str(), "ab");
  if (!file_) {
    throw IoError("cannot open decision log " + path_.string() + ": " +
                  std::strerror(errno));
  }
  if (needs_newline) {
    std::fputc('\n', file_);
    std::fflush(file_);
  }
}

DecisionLog::~DecisionLog() {
  if (file_) std::fclose(file_);
}

void DecisionLog::Append(const mwe::AnnotationDecision &decision) {
  std::string line = mwe::DumpDecision(decision) + "\n";
  if (std::fwrite(line.data(), 1, line.size(), file_) != line.size() ||
      std::fflush(file_) != 0 || ::fsync(::fileno(file_)) != 0) {
    throw IoError("cannot append to decision log " + path_.string() + ": " +
                  std::strerror(errno));
  }
  records_.push_back(decision);
}

// AnnotationService

AnnotationService::AnnotationService(std::vector<mwe::MweCandidate> candidates,
                                     std::vector<corpus::Document> corpus,
                                     std::filesystem::path log_path,
                                     ServiceOptions options)
    : candidates_(std::move(candidates)),
      corpus_(std::move(corpus)),
      options_(std::move(options)) {
  if (options_.required_annotators < 1) {
    throw ValidationError("at least one annotator is required");
  }
  if (options_.export_path.empty()) {
    options_.export_path = log_path;
    options_.export_path.replace_extension(".combined.jsonl");
  }
  std::stable_sort(candidates_.begin(), candidates_.end(), QueueOrder);
  for (size_t i = 0; i < candidates_.size(); ++i) {
    if (!by_id_.emplace(candidates_[i].id, i).second) {
      throw ValidationError("duplicate candidate id '" + candidates_[i].id +
                            "'");
    }
  }
  log_ = std::make_unique<DecisionLog>(std::move(log_path));
  const auto &records = log_->records();
  for (size_t i = 0; i < records.size(); ++i) {
    if (!by_id_.count(records[i].candidate_id)) {
      throw ValidationError(log_->path().string() + ": record " +
                            std::to_string(i + 1) +
                            " references unknown candidate '" +
                            records[i].candidate_id + "'");
    }
    Apply(records[i], i);
  }
}

void AnnotationService::Apply(const mwe::AnnotationDecision &decision,
                              size_t record) {
  auto &slot = latest_[decision.candidate_id];
  auto it = slot.find(decision.annotator);
  const auto &records = log_->records();
  if (it == slot.end() || records[it->second].timestamp <= decision.timestamp) {
    slot[decision.annotator] = record;
  }
  if (decision.timestamp > last_timestamp_) last_timestamp_ = decision.timestamp;
}

void AnnotationService::CheckAnnotator(const std::string &annotator) const {
  if (text::Trim(annotator).empty()) {
    throw ValidationError("annotator name is required");
  }
  const auto &allowed = options_.allowed_annotators;
  if (allowed.empty() || annotator == mwe::kAdjudicator) return;
  if (std::find(allowed.begin(), allowed.end(), annotator) == allowed.end()) {
    throw ValidationError("unknown annotator '" + annotator + "'");
  }
}

std::vector<mwe::AnnotationDecision> AnnotationService::LatestFor(
    const std::string &id) const {
  std::vector<mwe::AnnotationDecision> out;
  auto it = latest_.find(id);
  if (it == latest_.end()) return out;
  for (const auto &[annotator, record] : it->second) {
    out.push_back(log_->records()[record]);
  }
  return out;
}

mwe::Status AnnotationService::StatusOf(const std::string &id) const {
  return mwe::CombineVotes(LatestFor(id), options_.required_annotators);
}

CandidateView AnnotationService::View(
    const mwe::MweCandidate &candidate) const {
  CandidateView view;
  view.candidate = candidate;
  view.decisions = LatestFor(candidate.id);
  std::optional<bool> compositional;
  view.candidate.status = mwe::CombineVotes(
      view.decisions, options_.required_annotators, &compositional);
  view.candidate.compositional = compositional;
  if (view.candidate.status != mwe::Status::kKept) {
    view.candidate.classification = mwe::Classification::kUnclassified;
  }
  view.kwic = concord::Kwic(corpus_, candidate.key, options_.kwic_window);
  if (view.kwic.size() > options_.kwic_lines) {
    view.kwic.resize(options_.kwic_lines);
  }
  return view;
}

std::string AnnotationService::NextTimestamp() {
  int64_t now = ToMillis(Clock::now());
  if (std::optional<int64_t> last = ParseTimestamp(last_timestamp_)) {
    now = std::max(now, *last + 1);
  }
  std::string stamp = FormatMillis(now);
  // Logs written by other tools may carry timestamps we cannot parse; keep
  // the textual order monotonic regardless.
  if (stamp <= last_timestamp_) stamp = last_timestamp_ + "+";
  return stamp;
}

std::optional<CandidateView> AnnotationService::Next(
    const std::string &annotator, bool revisit) const {
  CheckAnnotator(annotator);
  std::shared_lock lock(mutex_);
  bool adjudicator = annotator == mwe::kAdjudicator;
  for (const mwe::MweCandidate &candidate : candidates_) {
    auto it = latest_.find(candidate.id);
    bool decided = it != latest_.end() && it->second.count(annotator);
    bool serve = false;
    if (adjudicator) {
      serve = StatusOf(candidate.id) == mwe::Status::kDisputed;
    } else if (!decided) {
      serve = true;
    } else if (revisit) {
      serve = StatusOf(candidate.id) == mwe::Status::kDisputed;
    }
    if (serve) return View(candidate);
  }
  return std::nullopt;
}

mwe::AnnotationDecision AnnotationService::Record(
    mwe::AnnotationDecision decision) {
  CheckAnnotator(decision.annotator);
  decision.Validate();
  if (!by_id_.count(decision.candidate_id)) {
    throw ValidationError("unknown candidate '" + decision.candidate_id + "'");
  }
  std::unique_lock lock(mutex_);
  decision.timestamp = NextTimestamp();
  log_->Append(decision);
  Apply(decision, log_->records().size() - 1);
  return decision;
}

std::optional<CandidateView> AnnotationService::Get(
    const std::string &id) const {
  std::shared_lock lock(mutex_);
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return View(candidates_[it->second]);
}

std::vector<mwe::MweCandidate> AnnotationService::Combined() const {
  std::shared_lock lock(mutex_);
  return mwe::Combine(candidates_, log_->records(),
                      options_.required_annotators);
}

Page AnnotationService::List(std::optional<mwe::Status> status,
                             size_t page) const {
  Page out;
  out.page = std::max<size_t>(page, 1);
  out.page_size = options_.page_size;
  std::vector<mwe::MweCandidate> combined = Combined();
  if (status) {
    std::erase_if(combined, [&](const mwe::MweCandidate &candidate) {
      return candidate.status != *status;
    });
  }
  out.total = combined.size();
  size_t begin = (out.page - 1) * out.page_size;
  for (size_t i = begin; i < combined.size() && i < begin + out.page_size;
       ++i) {
    out.items.push_back(std::move(combined[i]));
  }
  return out;
}

std::vector<CandidateView> AnnotationService::AdjudicationQueue() const {
  std::shared_lock lock(mutex_);
  std::vector<CandidateView> queue;
  for (const mwe::MweCandidate &candidate : candidates_) {
    if (StatusOf(candidate.id) == mwe::Status::kDisputed) {
      queue.push_back(View(candidate));
    }
  }
  return queue;
}

std::map<std::string, Progress> AnnotationService::ProgressByAnnotator() const {
  std::shared_lock lock(mutex_);
  std::set<std::string> annotators(options_.allowed_annotators.begin(),
                                   options_.allowed_annotators.end());
  for (const mwe::AnnotationDecision &record : log_->records()) {
    annotators.insert(record.annotator);
  }
  annotators.erase(std::string(mwe::kAdjudicator));
  std::map<std::string, Progress> progress;
  for (const std::string &annotator : annotators) progress[annotator];
  for (const mwe::MweCandidate &candidate : candidates_) {
    auto it = latest_.find(candidate.id);
    bool disputed = StatusOf(candidate.id) == mwe::Status::kDisputed;
    for (auto &[annotator, counts] : progress) {
      if (it != latest_.end() && it->second.count(annotator)) {
        ++counts.decided;
        if (disputed) ++counts.disputed;
      } else {
        ++counts.pending;
      }
    }
  }
  return progress;
}

std::optional<mwe::AnnotationDecision> AnnotationService::DecisionOf(
    const std::string &id, const std::string &annotator) const {
  std::shared_lock lock(mutex_);
  auto it = latest_.find(id);
  if (it == latest_.end()) return std::nullopt;
  auto found = it->second.find(annotator);
  if (found == it->second.end()) return std::nullopt;
  return log_->records()[found->second];
}

ExportResult AnnotationService::Export() const {
  // The shared lock keeps appends out until the file is written, so the
  // export always reflects a prefix of the log.
  std::shared_lock lock(mutex_);
  ExportResult result;
  result.path = options_.export_path;
  result.records = log_->records().size();
  std::vector<mwe::MweCandidate> combined = mwe::Combine(
      candidates_, log_->records(), options_.required_annotators);
  result.candidates = combined.size();
  mwe::WriteCandidates(result.path, combined);
  return result;
}

size_t AnnotationService::log_size() const {
  std::shared_lock lock(mutex_);
  return log_->records().size();
}

}  // namespace lexgap::annot
