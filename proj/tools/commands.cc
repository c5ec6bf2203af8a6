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

#include "commands.h"

#include <functional>
#include <memory>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "lexgap/annotation.h"
#include "lexgap/concord.h"
#include "lexgap/corpus.h"
#include "lexgap/coverage.h"
#include "lexgap/errors.h"
#include "lexgap/morpho.h"
#include "lexgap/mwe.h"
#include "lexgap/text.h"
#include "lexgap/wordnet.h"

namespace lexgap::cli {
namespace {

namespace fs = std::filesystem;

struct WordnetPaths {
  std::string synsets;
  std::string relations;

  void AddOptions(CLI::App *app, const std::string &prefix, bool required) {
    app->add_option("--" + prefix + "synsets", synsets, "synsets.tsv")
        ->required(required);
    app->add_option("--" + prefix + "relations", relations, "relations.tsv")
        ->required(required);
  }

  wn::WordNetStore Load() const {
    return wn::WordNetStore::Load(synsets, relations);
  }
};

morpho::Abbreviations LoadAbbreviationsOrDefault(const std::string &path) {
  return path.empty() ? morpho::DefaultAbbreviations()
                      : morpho::LoadAbbreviations(path);
}

morpho::EndMarkers Markers(bool strict) {
  return strict ? morpho::StrictEndMarkers() : morpho::DefaultEndMarkers();
}

std::vector<corpus::Document> IngestManifest(const std::string &manifest,
                                             const morpho::Abbreviations &abbr,
                                             const morpho::EndMarkers &markers) {
  std::vector<corpus::Document> docs;
  for (const corpus::ManifestEntry &entry : corpus::LoadManifest(manifest)) {
    corpus::Document doc =
        corpus::Ingest(entry.path, entry.format, entry.id, entry.title);
    morpho::Segment(doc, abbr, markers);
    docs.push_back(std::move(doc));
  }
  return docs;
}

wn::Language RequireLanguage(const std::string &code) {
  std::optional<wn::Language> language = wn::ParseLanguage(code);
  if (!language) throw ValidationError("unknown language '" + code + "'");
  return *language;
}

wn::Pos RequirePos(const std::string &letter) {
  std::optional<wn::Pos> pos = wn::ParsePos(letter);
  if (!pos) throw ValidationError("unknown part of speech '" + letter + "'");
  return *pos;
}

void SaveStore(const wn::WordNetStore &store, const WordnetPaths &in,
               const WordnetPaths &out) {
  store.Save(out.synsets.empty() ? in.synsets : out.synsets,
             out.relations.empty() ? in.relations : out.relations);
}

void AddIngest(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string manifest, out, abbrev;
    bool strict = false;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand(
      "ingest", "Read a corpus manifest, segment it, and write JSON lines");
  cmd->add_option("--manifest", opt->manifest,
                  "corpus.tsv: id, title, relative path, format")
      ->required();
  cmd->add_option("--out", opt->out, "Output corpus.jsonl")->required();
  cmd->add_option("--abbrev", opt->abbrev,
                  "Abbreviations file (built-in list if omitted)");
  cmd->add_flag("--strict-sentences", opt->strict,
                "End a sentence after every . ! ? and ;");
  cmd->callback([opt, &out] {
    auto docs = IngestManifest(opt->manifest,
                               LoadAbbreviationsOrDefault(opt->abbrev),
                               Markers(opt->strict));
    corpus::WriteJsonLines(opt->out, docs);
    out << "wrote " << docs.size() << " documents to " << opt->out << "\n";
  });
}

void AddAnalyze(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string corpus, dict, locutions, rules, abbrev, out;
    WordnetPaths wordnet;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand(
      "analyze", "Join locutions, lemmatize, tag and assign first senses");
  cmd->add_option("--corpus", opt->corpus, "Tokenized corpus.jsonl")
      ->required();
  cmd->add_option("--dict", opt->dict, "Form dictionary")->required();
  cmd->add_option("--locutions", opt->locutions, "Locutions file");
  cmd->add_option("--rules", opt->rules, "Suffix rules file");
  cmd->add_option("--abbrev", opt->abbrev,
                  "Abbreviations file (built-in list if omitted)");
  opt->wordnet.AddOptions(cmd, "wordnet-", false);
  cmd->add_option("--out", opt->out, "Output analyzed.jsonl")->required();
  cmd->callback([opt, &out] {
    morpho::Lexicon lexicon;
    lexicon.dictionary = morpho::FormDictionary::Load(opt->dict);
    if (!opt->locutions.empty()) {
      lexicon.locutions = morpho::LocutionTable::Load(opt->locutions);
    }
    if (!opt->rules.empty()) lexicon.rules = morpho::LoadSuffixRules(opt->rules);
    lexicon.abbreviations = LoadAbbreviationsOrDefault(opt->abbrev);
    std::optional<wn::WordNetStore> store;
    if (!opt->wordnet.synsets.empty() || !opt->wordnet.relations.empty()) {
      store = opt->wordnet.Load();
    }
    auto docs = corpus::ReadJsonLines(opt->corpus);
    for (corpus::Document &doc : docs) {
      morpho::AnalyzeDocument(doc, lexicon, store ? &*store : nullptr);
    }
    corpus::WriteJsonLines(opt->out, docs);
    out << "analyzed " << docs.size() << " documents\n";
  });
}

void AddNgrams(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string corpus, out;
    size_t min_freq = concord::kDefaultMinFrequency;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd =
      app.add_subcommand("ngrams", "Count bi-grams and tri-grams");
  cmd->add_option("--corpus", opt->corpus, "corpus.jsonl")->required();
  cmd->add_option("--min-freq", opt->min_freq,
                  "Keep n-grams occurring at least this many times")
      ->capture_default_str();
  cmd->add_option("--out", opt->out, "Output ngrams.tsv")->required();
  cmd->callback([opt, &out] {
    auto stats =
        concord::ExtractNGrams(corpus::ReadJsonLines(opt->corpus),
                               opt->min_freq);
    concord::WriteNGrams(opt->out, stats);
    out << "wrote " << stats.size() << " n-grams (min-freq "
        << opt->min_freq << ")\n";
  });
}

void AddPrefilter(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string ngrams, function_words, corpus, out;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand(
      "prefilter", "Drop n-grams bounded by function words; emit candidates");
  cmd->add_option("--ngrams", opt->ngrams, "ngrams.tsv")->required();
  cmd->add_option("--function-words", opt->function_words,
                  "One function word per line");
  cmd->add_option("--corpus", opt->corpus,
                  "corpus.jsonl used to record source documents");
  cmd->add_option("--out", opt->out, "Output candidates.jsonl")->required();
  cmd->callback([opt, &out] {
    concord::FunctionWords words;
    if (!opt->function_words.empty()) {
      words = concord::LoadFunctionWords(opt->function_words);
    }
    auto stats = concord::Prefilter(concord::ReadNGrams(opt->ngrams), words);
    auto candidates = mwe::FromStats(stats);
    if (!opt->corpus.empty()) {
      mwe::FillDocuments(candidates, corpus::ReadJsonLines(opt->corpus));
    }
    mwe::WriteCandidates(opt->out, candidates);
    out << "wrote " << candidates.size() << " candidates\n";
  });
}

void AddKwic(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string corpus, ngram;
    size_t window = 8;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand("kwic", "Print concordance lines");
  cmd->add_option("--corpus", opt->corpus, "corpus.jsonl")->required();
  cmd->add_option("--ngram", opt->ngram, "Space-separated forms")->required();
  cmd->add_option("--window", opt->window, "Context tokens on each side")
      ->capture_default_str();
  cmd->callback([opt, &out] {
    auto lines = concord::Kwic(corpus::ReadJsonLines(opt->corpus),
                               concord::NGramKey::FromString(opt->ngram),
                               opt->window);
    for (const auto &line : lines) out << line.ToString() << "\n";
  });
}

void AddServe(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string candidates, corpus, log, static_dir, export_path;
    std::string bind = "127.0.0.1:8080";
    size_t annotators = mwe::kDefaultAnnotators;
    std::vector<std::string> allow;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd =
      app.add_subcommand("serve", "Serve candidates to annotators over HTTP");
  cmd->add_option("--candidates", opt->candidates, "candidates.jsonl")
      ->required();
  cmd->add_option("--corpus", opt->corpus, "corpus.jsonl for KWIC context")
      ->required();
  cmd->add_option("--log", opt->log, "Decision log (created if absent)")
      ->required();
  cmd->add_option("--static", opt->static_dir, "Directory served at /");
  cmd->add_option("--bind", opt->bind, "host:port")->capture_default_str();
  cmd->add_option("--annotators", opt->annotators,
                  "Annotators required before a candidate is decided")
      ->capture_default_str();
  cmd->add_option("--allow", opt->allow, "Allowed annotator names")
      ->delimiter(',');
  cmd->add_option("--export", opt->export_path,
                  "Export path (default: <log>.combined.jsonl)");
  cmd->callback([opt, &out] {
    size_t colon = opt->bind.rfind(':');
    if (colon == std::string::npos) {
      throw ValidationError("--bind must be host:port");
    }
    std::string host = opt->bind.substr(0, colon);
    int port = 0;
    try {
      port = std::stoi(opt->bind.substr(colon + 1));
    } catch (const std::exception &) {
      throw ValidationError("invalid port in '" + opt->bind + "'");
    }
    annot::ServiceOptions options;
    options.required_annotators = opt->annotators;
    options.allowed_annotators = opt->allow;
    options.export_path = opt->export_path;
    annot::AnnotationService service(mwe::ReadCandidates(opt->candidates),
                                     corpus::ReadJsonLines(opt->corpus),
                                     opt->log, options);
    annot::AnnotationServer server(service, opt->static_dir);
    int bound = server.Bind(host, port);
    out << "listening on " << host << ":" << bound << std::endl;
    server.Listen();
  });
}

void AddCombine(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string candidates, log, out;
    size_t annotators = mwe::kDefaultAnnotators;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand(
      "combine", "Combine annotator decisions into candidate statuses");
  cmd->add_option("--candidates", opt->candidates, "candidates.jsonl")
      ->required();
  cmd->add_option("--log", opt->log, "Decision log")->required();
  cmd->add_option("--annotators", opt->annotators,
                  "Annotators that must agree")
      ->capture_default_str();
  cmd->add_option("--out", opt->out, "Output combined.jsonl")->required();
  cmd->callback([opt, &out] {
    auto combined = mwe::Combine(mwe::ReadCandidates(opt->candidates),
                                 mwe::ReadDecisions(opt->log),
                                 opt->annotators);
    mwe::WriteCandidates(opt->out, combined);
    size_t kept = std::count_if(
        combined.begin(), combined.end(),
        [](const auto &c) { return c.status == mwe::Status::kKept; });
    out << "kept " << kept << " of " << combined.size() << " candidates\n";
  });
}

void AddClassify(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string candidates, titles, out;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand(
      "classify", "Classify kept candidates by compositionality and titles");
  cmd->add_option("--candidates", opt->candidates, "combined.jsonl")
      ->required();
  cmd->add_option("--titles", opt->titles, "One page title per line")
      ->required();
  cmd->add_option("--out", opt->out, "Output classified.jsonl")->required();
  cmd->callback([opt, &out] {
    auto candidates = mwe::ReadCandidates(opt->candidates);
    mwe::ClassifyAll(candidates, mwe::TitleSet::Load(opt->titles));
    mwe::WriteCandidates(opt->out, candidates);
    out << "classified " << candidates.size() << " candidates\n";
  });
}

void AddHeads(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string candidates, dict, out;
    size_t top = mwe::kDefaultTopK;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand(
      "heads", "Find head words of the most frequent classified candidates");
  cmd->add_option("--candidates", opt->candidates, "classified.jsonl")
      ->required();
  cmd->add_option("--dict", opt->dict, "Form dictionary")->required();
  cmd->add_option("--top", opt->top, "Number of candidates to process")
      ->capture_default_str();
  cmd->add_option("--out", opt->out, "Output headed.jsonl")->required();
  cmd->callback([opt, &out] {
    auto candidates = mwe::ReadCandidates(opt->candidates);
    mwe::AssignHeads(candidates, morpho::FormDictionary::Load(opt->dict),
                     opt->top);
    mwe::WriteCandidates(opt->out, candidates);
    out << "processed top " << opt->top << " candidates\n";
  });
}

void AddAttach(CLI::App &app, std::ostream &out, std::ostream &err) {
  struct Options {
    std::string candidates, dict, out;
    WordnetPaths in, written;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand(
      "attach", "Create hyponym synsets for headed glossary candidates");
  cmd->add_option("--candidates", opt->candidates, "headed.jsonl")
      ->required();
  opt->in.AddOptions(cmd, "wordnet-", true);
  cmd->add_option("--dict", opt->dict, "Form dictionary for head lemmas");
  cmd->add_option("--out-wordnet-synsets", opt->written.synsets,
                  "Updated synsets.tsv (default: overwrite input)");
  cmd->add_option("--out-wordnet-relations", opt->written.relations,
                  "Updated relations.tsv (default: overwrite input)");
  cmd->add_option("--out", opt->out,
                  "Updated candidates (default: overwrite input)");
  cmd->callback([opt, &out, &err] {
    auto candidates = mwe::ReadCandidates(opt->candidates);
    wn::WordNetStore store = opt->in.Load();
    std::optional<morpho::FormDictionary> dict;
    if (!opt->dict.empty()) dict = morpho::FormDictionary::Load(opt->dict);
    mwe::AttachReport report =
        mwe::AttachAll(candidates, store, dict ? &*dict : nullptr);
    for (const std::string &skipped : report.skipped) {
      err << "skipped " << skipped << "\n";
    }
    SaveStore(store, opt->in, opt->written);
    mwe::WriteCandidates(opt->out.empty() ? opt->candidates : opt->out,
                         candidates);
    out << "attached " << report.attached.size() << " candidates\n";
  });
}

void AddGlossary(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string candidates, out;
    WordnetPaths wordnet;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd =
      app.add_subcommand("glossary", "Write the glossary of attached terms");
  cmd->add_option("--candidates", opt->candidates, "Attached candidates")
      ->required();
  opt->wordnet.AddOptions(cmd, "wordnet-", true);
  cmd->add_option("--out", opt->out, "Output glossary.tsv")->required();
  cmd->callback([opt, &out] {
    auto entries = mwe::BuildGlossary(mwe::ReadCandidates(opt->candidates),
                                      opt->wordnet.Load());
    mwe::WriteGlossary(opt->out, entries);
    out << "wrote " << entries.size() << " glossary entries\n";
  });
}

void AddCoverage(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string corpus, out;
    WordnetPaths wordnet;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand(
      "coverage", "Per-PoS totals, unique pairs and pairs without a sense");
  cmd->add_option("--corpus", opt->corpus, "analyzed.jsonl")->required();
  opt->wordnet.AddOptions(cmd, "wordnet-", true);
  cmd->add_option("--out", opt->out, "Output coverage.tsv")->required();
  cmd->callback([opt, &out] {
    auto report = coverage::ComputeCoverage(
        corpus::ReadJsonLines(opt->corpus), opt->wordnet.Load());
    coverage::WriteReport(opt->out, report);
    out << coverage::FormatReport(report);
  });
}

void AddStats(CLI::App &app, std::ostream &out) {
  struct Options {
    std::string corpus, manifest, abbrev;
    bool strict = false;
  };
  auto opt = std::make_shared<Options>();
  CLI::App *cmd = app.add_subcommand(
      "stats", "Documents, articles, sentences, tokens and unique types");
  auto *corpus_opt =
      cmd->add_option("--corpus", opt->corpus, "corpus.jsonl");
  auto *manifest_opt = cmd->add_option(
      "--manifest", opt->manifest, "corpus.tsv, ingested on the fly");
  corpus_opt->excludes(manifest_opt);
  cmd->add_option("--abbrev", opt->abbrev,
                  "Abbreviations file for --manifest");
  cmd->add_flag("--strict-sentences", opt->strict,
                "End a sentence after every . ! ? and ; (with --manifest)");
  cmd->callback([opt, &out] {
    std::vector<corpus::Document> docs;
    if (!opt->corpus.empty()) {
      docs = corpus::ReadJsonLines(opt->corpus);
    } else if (!opt->manifest.empty()) {
      docs = IngestManifest(opt->manifest,
                            LoadAbbreviationsOrDefault(opt->abbrev),
                            Markers(opt->strict));
    } else {
      throw ValidationError("stats needs --corpus or --manifest");
    }
    out << coverage::FormatStats(coverage::ComputeStats(docs));
  });
}

void AddWordnet(CLI::App &app, std::ostream &out) {
  CLI::App *wn_cmd = app.add_subcommand("wn", "Wordnet utilities");
  wn_cmd->require_subcommand(1);

  struct Lookup {
    WordnetPaths wordnet;
    std::string lemma, pos, lang = "pt";
  };
  auto lookup = std::make_shared<Lookup>();
  CLI::App *cmd = wn_cmd->add_subcommand("lookup", "Synsets listing a lemma");
  lookup->wordnet.AddOptions(cmd, "", true);
  cmd->add_option("--lemma", lookup->lemma, "Lemma")->required();
  cmd->add_option("--pos", lookup->pos, "n, v, a or r")->required();
  cmd->add_option("--lang", lookup->lang, "en or pt")->capture_default_str();
  cmd->callback([lookup, &out] {
    wn::WordNetStore store = lookup->wordnet.Load();
    for (wn::SynsetId id :
         store.Lookup(text::NormalizeLemma(lookup->lemma),
                      RequirePos(lookup->pos),
                      RequireLanguage(lookup->lang))) {
      out << id.ToString() << "\t" << store.Find(id)->gloss << "\n";
    }
  });

  struct AddWord {
    WordnetPaths wordnet, written;
    std::string id, lemma, lang = "pt";
  };
  auto add = std::make_shared<AddWord>();
  cmd = wn_cmd->add_subcommand("add-word", "Append a lemma to a synset");
  add->wordnet.AddOptions(cmd, "", true);
  cmd->add_option("--id", add->id, "Synset id")->required();
  cmd->add_option("--lemma", add->lemma, "Lemma")->required();
  cmd->add_option("--lang", add->lang, "en or pt")->capture_default_str();
  cmd->add_option("--out-synsets", add->written.synsets,
                  "Output synsets.tsv (default: overwrite input)");
  cmd->add_option("--out-relations", add->written.relations,
                  "Output relations.tsv (default: overwrite input)");
  cmd->callback([add, &out] {
    wn::WordNetStore store = add->wordnet.Load();
    store.AddWord(wn::SynsetId::FromString(add->id), add->lemma,
                  RequireLanguage(add->lang));
    SaveStore(store, add->wordnet, add->written);
    out << "added '" << add->lemma << "' to " << add->id << "\n";
  });

  struct NewSynset {
    WordnetPaths wordnet, written;
    std::vector<std::string> lemmas;
    std::string pos, gloss, hypernym;
  };
  auto create = std::make_shared<NewSynset>();
  cmd = wn_cmd->add_subcommand("new-synset",
                               "Create a Portuguese synset below a hypernym");
  create->wordnet.AddOptions(cmd, "", true);
  cmd->add_option("--lemmas", create->lemmas, "Comma-separated pt lemmas")
      ->required()
      ->delimiter(',');
  cmd->add_option("--pos", create->pos, "n, v, a or r")->required();
  cmd->add_option("--gloss", create->gloss, "Gloss");
  cmd->add_option("--hypernym", create->hypernym, "Hypernym synset id")
      ->required();
  cmd->add_option("--out-synsets", create->written.synsets,
                  "Output synsets.tsv (default: overwrite input)");
  cmd->add_option("--out-relations", create->written.relations,
                  "Output relations.tsv (default: overwrite input)");
  cmd->callback([create, &out] {
    wn::WordNetStore store = create->wordnet.Load();
    wn::SynsetId id = store.CreateSynset(
        create->lemmas, RequirePos(create->pos), create->gloss,
        wn::SynsetId::FromString(create->hypernym));
    SaveStore(store, create->wordnet, create->written);
    out << id.ToString() << "\n";
  });

  struct Gap {
    WordnetPaths wordnet;
    std::string topic, lang = "pt";
  };
  auto gap = std::make_shared<Gap>();
  cmd = wn_cmd->add_subcommand(
      "gap-report", "Domain members without lemmas in a language");
  gap->wordnet.AddOptions(cmd, "", true);
  cmd->add_option("--topic", gap->topic, "Domain topic synset id")
      ->required();
  cmd->add_option("--lang", gap->lang, "Target language")
      ->capture_default_str();
  cmd->callback([gap, &out] {
    wn::WordNetStore store = gap->wordnet.Load();
    for (const wn::GapEntry &entry : store.DomainGapReport(
             wn::SynsetId::FromString(gap->topic),
             RequireLanguage(gap->lang))) {
      out << entry.id.ToString() << "\t" << text::Join(entry.english, "|")
          << "\t" << entry.gloss << "\n";
    }
  });
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app("Domain lexicon gap analysis over a legal corpus", "lexgap");
  app.require_subcommand(1);
  app.set_version_flag("--version", "lexgap 0.1.0");
  AddIngest(app, out);
  AddAnalyze(app, out);
  AddNgrams(app, out);
  AddPrefilter(app, out);
  AddKwic(app, out);
  AddServe(app, out);
  AddCombine(app, out);
  AddClassify(app, out);
  AddHeads(app, out);
  AddAttach(app, out, err);
  AddGlossary(app, out);
  AddCoverage(app, out);
  AddStats(app, out);
  AddWordnet(app, out);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  std::vector<const char *> argv = {"lexgap"};
  for (const std::string &arg : args) argv.push_back(arg.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lexgap::cli
