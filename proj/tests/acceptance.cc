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

// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails. `--only <name>` runs a single criterion.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "lexgap/annotation.h"
#include "lexgap/concord.h"
#include "lexgap/coverage.h"
#include "lexgap/errors.h"
#include "lexgap/morpho.h"
#include "lexgap/mwe.h"
#include "lexgap/text.h"
#include "pipeline_util.h"

namespace lexgap::acceptance {
namespace {

using testing::Cli;
using testing::DataDir;
using testing::P;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

bool Within(double value, double target, double tolerance) {
  return std::abs(value - target) <= target * tolerance;
}

std::map<std::string, std::string> ParseKeyValues(const std::string &out) {
  std::map<std::string, std::string> values;
  for (const std::string &line : text::Lines(out)) {
    size_t eq = line.find('=');
    if (eq != std::string::npos) values[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return values;
}

std::map<std::string, std::string> LawStats() {
  auto result = Cli({"stats", "--manifest", P(DataDir() / "law" / "corpus.tsv")});
  if (result.code != cli::kExitOk) return {{"error", result.err}};
  return ParseKeyValues(result.out);
}

Outcome ArticleCount() {
  auto stats = LawStats();
  if (stats.count("error")) return {false, stats["error"]};
  return {stats["articles"] == "87", "articles=" + stats["articles"]};
}

Outcome TokenSentenceTypeCounts() {
  auto stats = LawStats();
  if (stats.count("error")) return {false, stats["error"]};
  double tokens = std::stod(stats["tokens"]);
  double sentences = std::stod(stats["sentences"]);
  double types = std::stod(stats["unique_types"]);
  bool tokens_ok = Within(tokens, 10242, 0.05);
  bool sentences_ok = Within(sentences, 231, 0.10);
  bool types_ok = Within(types, 1508, 0.05);
  std::ostringstream detail;
  detail << "tokens=" << stats["tokens"] << (tokens_ok ? "" : " (out of range)")
         << " sentences=" << stats["sentences"]
         << (sentences_ok ? "" : " (out of range)")
         << " unique_types=" << stats["unique_types"]
         << (types_ok ? "" : " (out of range)")
         << "; targets 10242+-5%, 231+-10%, 1508+-5%";
  return {tokens_ok && sentences_ok && types_ok, detail.str()};
}

Outcome CoverageProperties() {
  using coverage::ComputeCoverage;
  using coverage::kRows;
  std::mt19937 rng(2026);
  std::uniform_int_distribution<size_t> lemma(0, 11);
  for (int round = 0; round < 200; ++round) {
    auto a = testing::RandomAnalyzedCorpus(rng);
    auto b = testing::RandomAnalyzedCorpus(rng);
    for (auto &doc : b) doc.id += "b";
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    auto store = testing::RandomStore(rng, 10);
    auto ra = ComputeCoverage(a, store);
    auto rb = ComputeCoverage(b, store);
    auto rab = ComputeCoverage(both, store);
    auto grown = store;
    std::uniform_int_distribution<size_t> pick(0, grown.size() - 1);
    auto it = grown.synsets().begin();
    std::advance(it, pick(rng));
    grown.AddWord(it->first, "l" + std::to_string(lemma(rng)),
                  wn::Language::kPortuguese);
    auto rg = ComputeCoverage(a, grown);
    for (coverage::Row row : kRows) {
      const auto &c = ra.at(row);
      if (!(c.no_sense <= c.unique && c.unique <= c.total)) {
        return {false, "row inequality broken at round " + std::to_string(round)};
      }
      if (rg.at(row).no_sense > c.no_sense) {
        return {false, "adding a word raised no_sense at round " +
                           std::to_string(round)};
      }
      if (rab.at(row).total != c.total + rb.at(row).total ||
          rab.at(row).unique > c.unique + rb.at(row).unique ||
          rab.at(row).no_sense > c.no_sense + rb.at(row).no_sense) {
        return {false, "sub-additivity broken at round " + std::to_string(round)};
      }
    }
  }
  testing::TempDir dir;
  auto pipeline = testing::RunMiniPipeline(dir.path());
  if (pipeline.code != cli::kExitOk) return {false, pipeline.err};
  bool golden = text::ReadFile(dir / "coverage.tsv") ==
                text::ReadFile(DataDir() / "mini" / "golden" / "coverage.tsv");
  return {golden, golden ? "200 corpora, golden layout matches"
                         : "coverage.tsv differs from golden file"};
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::map<std::string, size_t> NaiveCounts(
    const std::vector<corpus::Document> &docs, size_t min_freq) {
  std::map<std::string, size_t> counts;
  for (const auto &doc : docs) {
    for (const auto &article : doc.articles) {
      for (const auto &sentence : article.sentences) {
        const auto &t = sentence.tokens;
        for (size_t n = 2; n <= 3; ++n) {
          for (size_t i = 0; i + n <= t.size(); ++i) {
            std::string key;
            bool clean = true;
            for (size_t k = i; k < i + n; ++k) {
              clean = clean && t[k].tag != corpus::Tag::kPunct &&
                      t[k].tag != corpus::Tag::kNum;
              key += (k > i ? " " : "") + Lower(t[k].surface);
            }
            if (clean) ++counts[key];
          }
        }
      }
    }
  }
  std::erase_if(counts, [&](const auto &kv) { return kv.second < min_freq; });
  return counts;
}

Outcome NGramOracle() {
  std::mt19937 rng(500);
  std::uniform_int_distribution<size_t> alphabet(1, 12);
  for (int round = 0; round < 500; ++round) {
    testing::RandomCorpusOptions options;
    options.alphabet = alphabet(rng);
    auto docs = testing::RandomCorpus(rng, options);
    std::map<std::string, size_t> previous;
    for (size_t min_freq : {1u, 2u, 3u}) {
      std::map<std::string, size_t> got;
      for (const auto &stat : concord::ExtractNGrams(docs, min_freq)) {
        got[stat.key.ToString()] = stat.frequency;
      }
      if (got != NaiveCounts(docs, min_freq)) {
        return {false, "mismatch at round " + std::to_string(round) +
                           " min_freq " + std::to_string(min_freq)};
      }
      for (const auto &[key, freq] : got) {
        if (min_freq > 1 && previous.count(key) == 0) {
          return {false, "monotonicity broken at round " + std::to_string(round)};
        }
      }
      previous = got;
    }
  }
  return {true, "500 corpora, min_freq 1..3"};
}

Outcome DefaultThresholds() {
  auto ngram_help = Cli({"ngrams", "--help"});
  auto heads_help = Cli({"heads", "--help"});
  if (ngram_help.out.find("[10]") == std::string::npos) {
    return {false, "ngrams help does not show default 10"};
  }
  if (heads_help.out.find("[50]") == std::string::npos) {
    return {false, "heads help does not show default 50"};
  }
  testing::TempDir dir;
  std::string body;
  for (int i = 0; i < 10; ++i) body += "Alfa beta. ";
  for (int i = 0; i < 9; ++i) body += "Gama delta. ";
  text::WriteFile(dir / "f.txt", body + "\n");
  text::WriteFile(dir / "m.tsv", "f\tF\tf.txt\tplain\n");
  if (Cli({"ingest", "--manifest", P(dir / "m.tsv"), "--out",
           P(dir / "c.jsonl")}).code != cli::kExitOk ||
      Cli({"ngrams", "--corpus", P(dir / "c.jsonl"), "--out",
           P(dir / "n.tsv")}).code != cli::kExitOk) {
    return {false, "flagless ngrams run failed"};
  }
  if (text::ReadFile(dir / "n.tsv") != "1\t10\talfa beta\t1\n") {
    return {false, "unexpected ngrams: " + text::ReadFile(dir / "n.tsv")};
  }
  std::vector<mwe::MweCandidate> candidates;
  for (int i = 0; i < 51; ++i) {
    mwe::MweCandidate candidate;
    candidate.key = concord::NGramKey::FromString("nome x" + std::to_string(i));
    candidate.id = mwe::CandidateId(candidate.key);
    candidate.frequency = 100 - i;
    candidate.status = mwe::Status::kKept;
    candidate.compositional = false;
    candidate.classification = mwe::Classification::kNonCompositional;
    candidates.push_back(candidate);
  }
  mwe::WriteCandidates(dir / "k.jsonl", candidates);
  text::WriteFile(dir / "d.txt", "nome nome NOUN\n");
  if (Cli({"heads", "--candidates", P(dir / "k.jsonl"), "--dict",
           P(dir / "d.txt"), "--out", P(dir / "h.jsonl")}).code !=
      cli::kExitOk) {
    return {false, "flagless heads run failed"};
  }
  auto headed = mwe::ReadCandidates(dir / "h.jsonl");
  size_t with_head = std::count_if(headed.begin(), headed.end(),
                                   [](const auto &c) { return c.head_index; });
  bool lowest_skipped = std::none_of(
      headed.begin(), headed.end(),
      [](const auto &c) { return c.frequency == 50 && c.head_index; });
  return {with_head == 50 && lowest_skipped,
          "min_freq 10 keeps freq 10 and drops freq 9; heads on " +
              std::to_string(with_head) + " of 51"};
}

Outcome MweLattice() {
  mwe::TitleSet titles = mwe::TitleSet::Parse("defensor público\nhabeas corpus\n");
  size_t checked = 0;
  for (const char *term : {"defensor público", "habeas corpus", "código de ética"}) {
    bool titled = titles.Contains(term);
    for (mwe::Status status : {mwe::Status::kPending, mwe::Status::kKept,
                               mwe::Status::kRejected, mwe::Status::kDisputed}) {
      for (bool compositional : {false, true}) {
        mwe::MweCandidate candidate;
        candidate.key = concord::NGramKey::FromString(term);
        candidate.status = status;
        candidate.compositional = compositional;
        ++checked;
        if (status != mwe::Status::kKept) {
          try {
            mwe::Classify(candidate, titles);
            return {false, std::string("classified a non-kept ") + term};
          } catch (const ValidationError &) {
            continue;
          }
        }
        mwe::Classification expected =
            !compositional ? mwe::Classification::kNonCompositional
            : titled       ? mwe::Classification::kCompositionalConventional
                           : mwe::Classification::kCompositionalUnconventional;
        if (mwe::Classify(candidate, titles) != expected) {
          return {false, std::string("wrong class for ") + term};
        }
      }
    }
  }
  mwe::MweCandidate ma_fe;
  ma_fe.key = concord::NGramKey::FromString("má fé");
  ma_fe.id = mwe::CandidateId(ma_fe.key);
  ma_fe.status = mwe::Status::kKept;
  ma_fe.compositional = false;
  std::vector<mwe::MweCandidate> candidates = {ma_fe};
  mwe::ClassifyAll(candidates, mwe::TitleSet());
  auto glossary = mwe::BuildGlossary(candidates, wn::WordNetStore());
  bool listed = glossary.size() == 1 && glossary[0].term == "má fé";
  return {listed, std::to_string(checked) +
                      " combinations; má fé in glossary with no titles"};
}

Outcome Attachment() {
  auto store = wn::WordNetStore::Load(DataDir() / "wordnet" / "synsets.tsv",
                                      DataDir() / "wordnet" / "relations.tsv");
  auto dictionary = morpho::FormDictionary::Load(DataDir() / "mini" / "dict.txt");
  std::vector<mwe::MweCandidate> candidates;
  for (const char *term : {"defensor público", "má fé", "advogado dativo"}) {
    mwe::MweCandidate candidate;
    candidate.key = concord::NGramKey::FromString(term);
    candidate.id = mwe::CandidateId(candidate.key);
    candidate.status = mwe::Status::kKept;
    candidate.compositional = std::string(term) != "má fé";
    candidates.push_back(candidate);
  }
  mwe::ClassifyAll(candidates,
                   mwe::TitleSet::Parse("defensor público\nadvogado dativo\n"));
  mwe::AssignHeads(candidates, dictionary);
  size_t before = store.size();
  auto report = mwe::AttachAll(candidates, store, &dictionary);
  size_t n = candidates.size();
  if (report.attached.size() != n || store.size() != before + n) {
    return {false, "store grew by " + std::to_string(store.size() - before) +
                       " for " + std::to_string(n) + " candidates"};
  }
  for (const auto &candidate : candidates) {
    wn::SynsetId id = *candidate.assigned_synset;
    if (!id.IsLocal() || id.ToString()[0] != '9') {
      return {false, "non-local id " + id.ToString()};
    }
    auto up = store.Targets(id, wn::RelationKind::kHypernym);
    auto down = store.Targets(*candidate.head_sense, wn::RelationKind::kHyponym);
    if (up != std::vector<wn::SynsetId>{*candidate.head_sense} ||
        std::find(down.begin(), down.end(), id) == down.end()) {
      return {false, "missing inverse edge for " + id.ToString()};
    }
  }
  testing::TempDir dir;
  store.Save(dir / "s1.tsv", dir / "r1.tsv");
  wn::WordNetStore::Load(dir / "s1.tsv", dir / "r1.tsv")
      .Save(dir / "s2.tsv", dir / "r2.tsv");
  bool stable = text::ReadFile(dir / "s1.tsv") == text::ReadFile(dir / "s2.tsv") &&
                text::ReadFile(dir / "r1.tsv") == text::ReadFile(dir / "r2.tsv");
  return {stable, std::to_string(n) + " synsets attached" +
                      (stable ? ", save is byte-stable" : ", save differs")};
}

Outcome Guesser() {
  morpho::FormDictionary empty;
  auto before = morpho::Analyze("juizados", empty, {});
  if (before.size() != 1 || before[0].lemma != "juizados") {
    return {false, "empty dictionary gave " +
                       (before.empty() ? std::string("nothing") : before[0].lemma)};
  }
  morpho::FormDictionary dictionary;
  dictionary.Add("juizados", "juizado", corpus::Tag::kNoun);
  auto after = morpho::Analyze("juizados", dictionary, {});
  bool flipped = after.size() == 1 && after[0].lemma == "juizado";
  return {flipped, "juizados -> " + before[0].lemma + " -> " +
                       (after.empty() ? std::string("nothing") : after[0].lemma)};
}

Outcome EventSourcing() {
  testing::TempDir dir;
  std::vector<mwe::MweCandidate> candidates;
  for (int i = 0; i < 20; ++i) {
    mwe::MweCandidate candidate;
    candidate.key = concord::NGramKey::FromString("t" + std::to_string(i) + " u");
    candidate.id = mwe::CandidateId(candidate.key);
    candidate.frequency = 1 + i % 7;
    candidates.push_back(candidate);
  }
  std::vector<corpus::Document> corpus = {
      testing::DocumentFromText("d", "t1 u t2 u | t3 u")};
  auto service = std::make_unique<annot::AnnotationService>(
      candidates, corpus, dir / "log.jsonl");

  struct Snapshot {
    std::string exported;
    size_t records;
  };
  std::vector<Snapshot> snapshots;
  std::atomic<int> remaining = 3;
  std::atomic<bool> failed = false;
  std::vector<std::thread> annotators;
  const char *names[] = {"ana", "bruno", "adjudicator"};
  for (int a = 0; a < 3; ++a) {
    annotators.emplace_back([&, a] {
      std::mt19937 rng(100 + a);
      std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
      std::uniform_int_distribution<int> coin(0, 2);
      int ops = a < 2 ? 450 : 100;
      for (int i = 0; i < ops; ++i) {
        mwe::AnnotationDecision decision;
        decision.candidate_id = candidates[pick(rng)].id;
        decision.annotator = names[a];
        decision.keep = coin(rng) != 0;
        if (decision.keep) decision.compositional = coin(rng) == 1;
        try {
          service->Record(decision);
        } catch (...) {
          failed = true;
        }
      }
      --remaining;
    });
  }
  std::thread exporter([&] {
    while (remaining > 0) {
      annot::ExportResult result = service->Export();
      snapshots.push_back({text::ReadFile(result.path), result.records});
    }
  });
  for (auto &thread : annotators) thread.join();
  exporter.join();
  if (failed) return {false, "a record operation failed"};

  // Crash: copy the log as it is on disk while the service is still live.
  std::filesystem::copy_file(dir / "log.jsonl", dir / "crashed.jsonl");
  std::string live = mwe::DumpCandidates(service->Combined());
  annot::AnnotationService restarted(candidates, corpus, dir / "crashed.jsonl");
  if (restarted.log_size() != 1000) {
    return {false, "replayed " + std::to_string(restarted.log_size()) +
                       " of 1000 records"};
  }
  if (mwe::DumpCandidates(restarted.Combined()) != live) {
    return {false, "restart changed combine output"};
  }
  auto log = mwe::ReadDecisions(dir / "log.jsonl");
  for (const Snapshot &snapshot : snapshots) {
    std::vector<mwe::AnnotationDecision> prefix(log.begin(),
                                                log.begin() + snapshot.records);
    if (snapshot.exported !=
        mwe::DumpCandidates(
            testing::QueueOrdered(mwe::Combine(candidates, prefix)))) {
      return {false, "export at " + std::to_string(snapshot.records) +
                         " records is not a log prefix"};
    }
  }
  return {true, "1000 records, identical after restart, " +
                    std::to_string(snapshots.size()) +
                    " exports prefix-consistent"};
}

std::vector<Criterion> Criteria() {
  return {
      {"article_count", 1.0, ArticleCount},
      {"token_sentence_type_counts", 5.0, TokenSentenceTypeCounts},
      {"coverage_properties", 30.0, CoverageProperties},
      {"ngram_oracle", 30.0, NGramOracle},
      {"default_thresholds", 30.0, DefaultThresholds},
      {"mwe_lattice", 1.0, MweLattice},
      {"attachment", 1.0, Attachment},
      {"guesser", 1.0, Guesser},
      {"event_sourcing", 20.0, EventSourcing},
  };
}

int Main(int argc, char **argv) {
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--only <criterion>]\n";
      return 2;
    }
  }
  int failures = 0;
  bool matched = false;
  for (const Criterion &criterion : Criteria()) {
    if (!only.empty() && criterion.name != only) continue;
    matched = true;
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    bool in_time = seconds < criterion.limit_seconds;
    bool pass = outcome.pass && in_time;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", seconds,
                  criterion.limit_seconds);
    std::cout << (pass ? "PASS " : "FAIL ") << criterion.name << ": "
              << outcome.detail << " (" << timing
              << (in_time ? "" : ", too slow") << ")\n";
    failures += !pass;
  }
  if (!matched) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace lexgap::acceptance

int main(int argc, char **argv) { return lexgap::acceptance::Main(argc, argv); }
