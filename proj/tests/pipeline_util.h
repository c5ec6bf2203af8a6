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

#ifndef LEXGAP_TESTS_PIPELINE_UTIL_H_
#define LEXGAP_TESTS_PIPELINE_UTIL_H_

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "test_util.h"

namespace lexgap::testing {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult Cli(const std::vector<std::string> &args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string P(const std::filesystem::path &path) {
  return path.string();
}

// Runs every stage over the bundled mini corpus inside `dir` and returns the
// first failing result, or the glossary run on success.
inline CliResult RunMiniPipeline(const std::filesystem::path &dir) {
  const std::filesystem::path mini = DataDir() / "mini";
  const std::filesystem::path wordnet = DataDir() / "wordnet";
  std::filesystem::copy_file(wordnet / "synsets.tsv", dir / "synsets.tsv",
                             std::filesystem::copy_options::overwrite_existing);
  std::filesystem::copy_file(wordnet / "relations.tsv", dir / "relations.tsv",
                             std::filesystem::copy_options::overwrite_existing);
  const std::vector<std::vector<std::string>> stages = {
      {"ingest", "--manifest", P(mini / "corpus.tsv"), "--abbrev",
       P(mini / "abbrev.txt"), "--out", P(dir / "corpus.jsonl")},
      {"analyze", "--corpus", P(dir / "corpus.jsonl"), "--dict",
       P(mini / "dict.txt"), "--locutions", P(mini / "locutions.txt"),
       "--rules", P(mini / "rules.txt"), "--abbrev", P(mini / "abbrev.txt"),
       "--wordnet-synsets", P(wordnet / "synsets.tsv"), "--wordnet-relations",
       P(wordnet / "relations.tsv"), "--out", P(dir / "analyzed.jsonl")},
      {"coverage", "--corpus", P(dir / "analyzed.jsonl"), "--wordnet-synsets",
       P(wordnet / "synsets.tsv"), "--wordnet-relations",
       P(wordnet / "relations.tsv"), "--out", P(dir / "coverage.tsv")},
      {"ngrams", "--corpus", P(dir / "corpus.jsonl"), "--min-freq", "2",
       "--out", P(dir / "ngrams.tsv")},
      {"prefilter", "--ngrams", P(dir / "ngrams.tsv"), "--function-words",
       P(mini / "function_words.txt"), "--corpus", P(dir / "corpus.jsonl"),
       "--out", P(dir / "candidates.jsonl")},
      {"combine", "--candidates", P(dir / "candidates.jsonl"), "--log",
       P(mini / "decisions.jsonl"), "--out", P(dir / "combined.jsonl")},
      {"classify", "--candidates", P(dir / "combined.jsonl"), "--titles",
       P(mini / "titles.txt"), "--out", P(dir / "classified.jsonl")},
      {"heads", "--candidates", P(dir / "classified.jsonl"), "--dict",
       P(mini / "dict.txt"), "--out", P(dir / "headed.jsonl")},
      {"attach", "--candidates", P(dir / "headed.jsonl"), "--dict",
       P(mini / "dict.txt"), "--wordnet-synsets", P(dir / "synsets.tsv"),
       "--wordnet-relations", P(dir / "relations.tsv"), "--out",
       P(dir / "attached.jsonl")},
      {"glossary", "--candidates", P(dir / "attached.jsonl"),
       "--wordnet-synsets", P(dir / "synsets.tsv"), "--wordnet-relations",
       P(dir / "relations.tsv"), "--out", P(dir / "glossary.tsv")},
  };
  CliResult result;
  for (const auto &stage : stages) {
    result = Cli(stage);
    if (result.code != cli::kExitOk) {
      result.err = stage[0] + ": " + result.err;
      return result;
    }
  }
  return result;
}

}  // namespace lexgap::testing

#endif  // LEXGAP_TESTS_PIPELINE_UTIL_H_
