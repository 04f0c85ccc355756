// Copyright 2026 The corpsum Authors.
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

#include "cli/commands.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <future>
#include <memory>

#include "cli/config.h"
#include "corpsum/corpus.h"
#include "corpsum/error.h"
#include "corpsum/evaluation.h"
#include "corpsum/extraction.h"
#include "corpsum/json_io.h"
#include "corpsum/linguistic.h"
#include "corpsum/scoring.h"
#include "corpsum/selection.h"
#include "corpsum/strings.h"

namespace corpsum::cli {

namespace fs = std::filesystem;

namespace {

struct Paths {
  std::vector<std::string> inputs;
  std::string output;
  std::string index;
  std::string corpus;
  std::string doc;
  std::string summary;
  std::string scores;
  std::string scores_out;
  std::string reviewer_tsv;
  std::string config;
  size_t quota = 0;
};

// Writes to `out` for "-", otherwise to the file.
void Emit(const std::string &path, const std::string &text, std::ostream &out) {
  if (path == "-") {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

ExtractOptions ExtractOptionsFor(const Config &config) {
  ExtractOptions options;
  options.p_only = config.p_only;
  options.strict_period = config.strict_period;
  return options;
}

FlatDocument ReadDocument(const std::string &path, const Config &config) {
  ExtractOptions options = ExtractOptionsFor(config);
  std::string ext = ToLower(fs::path(path).extension().string());
  if (config.tagger_mode() == TaggerMode::kPretagged) {
    options.format = InputFormat::kLines;
  } else if (path == "-" || ext == ".html" || ext == ".htm" || ext == ".xhtml") {
    options.format = InputFormat::kHtml;
  } else {
    options.format = InputFormat::kPlain;
  }
  std::string id = path == "-" ? "stdin" : fs::path(path).filename().string();
  return ExtractFlatText(ReadFile(path), options, id);
}

Tagger MakeTagger(const Config &config) {
  if (config.tagger_mode() == TaggerMode::kPretagged) return Tagger::Pretagged();
  if (config.lexicon.empty()) return Tagger::Builtin();
  return Tagger::Builtin(std::make_shared<const Lexicon>(Lexicon::Load(config.lexicon)));
}

std::string Fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

void AddConfigOption(CLI::App *sub, Paths &paths) {
  sub->add_option("--config", paths.config,
                  "key = value file applied before command-line flags");
}

void AddTaggingOptions(CLI::App *sub, Config &config) {
  sub->add_option("--tagger", config.tagger, "builtin | pretagged (word_TAG lines)")
      ->check(CLI::IsMember({"builtin", "pretagged"}));
  sub->add_option("--lexicon", config.lexicon,
                  "word<TAB>tag lexicon file (empty: builtin lexicon)");
  sub->add_flag("--strict-period", config.strict_period,
                "split sentences on '.' only");
  sub->add_flag("--p-only", config.p_only,
                "only <p> separates paragraphs in HTML");
}

int BuildCorpus(const Paths &paths, const Config &config, std::ostream &out,
                std::ostream &err) {
  CorpusSource source;
  source.extract = ExtractOptionsFor(config);
  const bool pretagged = config.tagger_mode() == TaggerMode::kPretagged;
  for (const std::string &input : paths.inputs) {
    CorpusSource part;
    try {
      part = LoadCorpus(input, source.extract, pretagged);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kEmptyCorpus) throw;
      throw Error(ErrorCode::kEmptyCorpus, "corpus", input + " contains no corpus text");
    }
    for (CorpusDocument &doc : part.documents) source.documents.push_back(std::move(doc));
  }
  TermFrequencyIndex index = BuildIndex(source, MakeTagger(config));
  Emit(paths.output, FormatIndex(index), out);
  const auto ranked = index.Ranked();
  err << "indexed " << index.size() << " terms (" << index.noun_tokens()
      << " noun tokens) from " << index.document_count() << " documents; "
      << "most frequent: " << ranked.front().first << " (count "
      << ranked.front().second.count << ")\n";
  return kExitOk;
}

int RankDocs(const Paths &paths, const Config &config, std::ostream &out) {
  const TermFrequencyIndex index = LoadIndex(paths.index);
  const Tagger tagger = MakeTagger(config);
  CorpusSource source = LoadCorpus(paths.corpus, ExtractOptionsFor(config),
                                   config.tagger_mode() == TaggerMode::kPretagged);

  std::vector<std::future<DocumentScore>> pending;
  for (const std::string &path : paths.inputs) {
    pending.push_back(std::async(std::launch::async, [&, path] {
      return ScoreDocument(ReadDocument(path, config), index, tagger);
    }));
  }
  DocumentScore corpus = ScoreDocument(CorpusAsDocument(source), index, tagger);
  std::vector<DocumentScore> scores;
  for (auto &f : pending) scores.push_back(f.get());

  ResourcefulnessReport report = RankDocuments(corpus, scores);
  const std::string format = config.format.empty() ? "both" : config.format;
  if (format == "table" || format == "both") {
    out << "doc\tmean\tdelta\n";
    for (const DocumentMeanEntry &e : report.entries) {
      out << e.id << "\t" << Fixed(e.mean) << "\t" << Fixed(e.delta) << "\n";
    }
    out << "corpus mean: " << Fixed(report.corpus_mean) << "\n";
    out << "chosen: "
        << (report.chosen ? *report.chosen : "none (no document above the corpus mean)")
        << "\n";
    if (format == "both") out << "\n";
  }
  if (format == "json" || format == "both") {
    out << ReportToJson(report).dump(2) << "\n";
  }
  return kExitOk;
}

int Summarize(const Paths &paths, const Config &config, std::ostream &out) {
  const FlatDocument doc = ReadDocument(paths.doc, config);
  const TermFrequencyIndex index = LoadIndex(paths.index);
  const DocumentScore score = ScoreDocument(doc, index, MakeTagger(config));
  const size_t n = score.sentences.size();

  size_t quota = config.quota ? *config.quota : ComputeQuota(n, config.ratio);
  if (quota > n) {
    throw Error(ErrorCode::kInvalidArgument, "cli",
                "quota " + std::to_string(quota) + " exceeds the document's " +
                    std::to_string(n) + " sentences");
  }
  std::set<std::string> connectives =
      config.connectives_file.empty() ? DefaultConnectives()
                                      : ReadConnectives(config.connectives_file);
  Summary summary = SelectSummary(score, quota, connectives, config.backref_factor);

  if (!paths.scores_out.empty()) {
    Emit(paths.scores_out, ScoresToJson(score).dump(2) + "\n", out);
  }
  SummaryFormat format =
      config.format == "json" ? SummaryFormat::kJson : SummaryFormat::kText;
  out << RenderSummary(summary, doc, score, format);
  return kExitOk;
}

int Evaluate(const Paths &paths, const Config &config, std::ostream &out) {
  Summary summary = SummaryFromJson(ParseJson(ReadFile(paths.summary), paths.summary));
  DocumentScore scores = ScoresFromJson(ParseJson(ReadFile(paths.scores), paths.scores));
  if (summary.doc_id() != scores.id) {
    throw Error(ErrorCode::kFormatError, "evaluation",
                "summary is for '" + summary.doc_id() + "' but scores are for '" +
                    scores.id + "'");
  }
  std::vector<HumanExtract> extracts;
  for (const std::string &path : paths.inputs) extracts.push_back(ReadExtractFile(path));

  std::set<size_t> reference =
      BuildReference(extracts, scores.sentences.size(), config.majority);
  EvalReport report = OverlapReport(summary, reference, extracts, scores);

  nlohmann::json json = ReportToJson(report);
  json["doc"] = scores.id;
  json["reference"] = reference;
  json["system"] = summary.selected();
  out << json.dump(2) << "\n";
  if (!paths.reviewer_tsv.empty()) {
    Emit(paths.reviewer_tsv, PerReviewerTsv(report, extracts), out);
  }
  return kExitOk;
}

int Extract(const Paths &paths, const Config &config, std::ostream &out) {
  out << FlatDocumentToJson(ReadDocument(paths.doc, config)).dump(2) << "\n";
  return kExitOk;
}

int Score(const Paths &paths, const Config &config, std::ostream &out) {
  const FlatDocument doc = ReadDocument(paths.doc, config);
  const TermFrequencyIndex index = LoadIndex(paths.index);
  out << ScoresToJson(ScoreDocument(doc, index, MakeTagger(config))).dump(2) << "\n";
  return kExitOk;
}

int TagDocument(const Paths &paths, const Config &config, std::ostream &out) {
  const FlatDocument doc = ReadDocument(paths.doc, config);
  const AnalyzedDocument analyzed = AnalyzeDocument(doc, MakeTagger(config));
  for (size_t i = 0; i < analyzed.sentences.size(); ++i) {
    if (i > 0 && analyzed.paragraph_of[i] != analyzed.paragraph_of[i - 1]) out << "\n";
    out << analyzed.sentences[i].ToPretagged() << "\n";
  }
  return kExitOk;
}

// Loads --config before CLI11 parses, so flags override file values.
void PreloadConfig(const std::vector<std::string> &args, Config &config) {
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      ApplyConfigFile(args[i + 1], config);
    } else if (args[i].rfind("--config=", 0) == 0) {
      ApplyConfigFile(args[i].substr(9), config);
    }
  }
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Config config;
  Paths paths;
  try {
    PreloadConfig(args, config);
  } catch (const Error &e) {
    err << "corpsum: " << e.module() << ": " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Corpus-referenced extractive summarizer", "corpsum"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  CLI::App *build = app.add_subcommand(
      "build-corpus", "Build the noun term-frequency index from a reference corpus");
  build->add_option("inputs", paths.inputs,
                    "corpus directories (*.txt) or sentence-per-line files")
      ->required();
  build->add_option("-o,--output", paths.output, "index TSV to write ('-' for stdout)")
      ->required();
  AddTaggingOptions(build, config);
  AddConfigOption(build, paths);

  CLI::App *rank = app.add_subcommand(
      "rank-docs", "Compare documents' mean sentence weight with the corpus mean");
  rank->add_option("docs", paths.inputs, "candidate documents (.html or .txt)")->required();
  rank->add_option("--corpus", paths.corpus, "corpus directory or sentence-per-line file")
      ->required();
  rank->add_option("--index", paths.index, "index TSV from build-corpus")->required();
  rank->add_option("--format", config.format, "table | json | both (empty: both)")
      ->check(CLI::IsMember({"", "table", "json", "both"}));
  AddTaggingOptions(rank, config);
  AddConfigOption(rank, paths);

  CLI::App *summarize = app.add_subcommand("summarize", "Summarize one document");
  summarize->add_option("doc", paths.doc, "document (.html, .txt, or '-' for stdin)")
      ->required();
  summarize->add_option("--index", paths.index, "index TSV from build-corpus")->required();
  summarize->add_option("--ratio", config.ratio, "fraction of sentences to keep");
  CLI::Option *quota_opt = summarize->add_option(
      "--quota", paths.quota, "number of sentences to keep (overrides --ratio; 0: use ratio)");
  summarize->add_option("--backref-factor", config.backref_factor,
                        "minimum predecessor rank, as a fraction of a connective "
                        "sentence's rank");
  summarize->add_option("--connectives", config.connectives_file,
                        "file with one connective per line (empty: builtin list)");
  summarize->add_option("--format", config.format, "text | json (empty: text)")
      ->check(CLI::IsMember({"", "text", "json"}));
  summarize->add_option("--scores-out", paths.scores_out,
                        "also write per-sentence scores JSON to this path");
  AddTaggingOptions(summarize, config);
  AddConfigOption(summarize, paths);

  CLI::App *evaluate = app.add_subcommand(
      "evaluate", "Compare a summary with a majority-vote reference from human extracts");
  evaluate->add_option("extracts", paths.inputs, "extract files, one position per line")
      ->required();
  evaluate->add_option("--summary", paths.summary, "summary JSON from summarize")->required();
  evaluate->add_option("--scores", paths.scores, "scores JSON from summarize --scores-out")
      ->required();
  evaluate->add_option("--majority-threshold", config.majority,
                       "a sentence joins the reference when chosen by more than "
                       "this fraction of reviewers");
  evaluate->add_option("--reviewer-tsv", paths.reviewer_tsv,
                       "also write per-reviewer overlap TSV to this path");
  AddConfigOption(evaluate, paths);

  CLI::App *extract = app.add_subcommand("extract", "Print a document's paragraphs as JSON");
  extract->add_option("doc", paths.doc, "document (.html, .txt, or '-')")->required();
  AddTaggingOptions(extract, config);
  AddConfigOption(extract, paths);

  CLI::App *score = app.add_subcommand("score", "Print per-sentence scores as JSON");
  score->add_option("doc", paths.doc, "document (.html, .txt, or '-')")->required();
  score->add_option("--index", paths.index, "index TSV from build-corpus")->required();
  AddTaggingOptions(score, config);
  AddConfigOption(score, paths);

  CLI::App *tag = app.add_subcommand("tag", "Print a document as word_TAG lines");
  tag->add_option("doc", paths.doc, "document (.html, .txt, or '-')")->required();
  AddTaggingOptions(tag, config);
  AddConfigOption(tag, paths);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }
  if (quota_opt->count() > 0 && paths.quota > 0) config.quota = paths.quota;

  try {
    config.Validate();
    if (build->parsed()) return BuildCorpus(paths, config, out, err);
    if (rank->parsed()) return RankDocs(paths, config, out);
    if (summarize->parsed()) return Summarize(paths, config, out);
    if (evaluate->parsed()) return Evaluate(paths, config, out);
    if (extract->parsed()) return Extract(paths, config, out);
    if (score->parsed()) return Score(paths, config, out);
    if (tag->parsed()) return TagDocument(paths, config, out);
  } catch (const Error &e) {
    err << "corpsum: " << e.module() << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidArgument ? kExitUsage : kExitFailure;
  } catch (const std::exception &e) {
    err << "corpsum: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace corpsum::cli
