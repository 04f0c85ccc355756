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

#include "corpsum/corpus.h"

#include <algorithm>
#include <cmath>

#include "corpsum/error.h"
#include "corpsum/strings.h"

namespace corpsum {

namespace fs = std::filesystem;

namespace {

constexpr double kMaxTf = 100.0;
constexpr double kTfTolerance = 1e-9;

Error FormatErrorAt(std::string_view source, size_t line, const std::string &what) {
  return Error(ErrorCode::kFormatError, "corpus",
               std::string(source) + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

void CorpusSource::Validate() const {
  if (documents.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus", "corpus has no documents");
  }
  for (const CorpusDocument &doc : documents) {
    if (Trim(doc.text).empty()) {
      throw Error(ErrorCode::kEmptyCorpus, "corpus",
                  "corpus document '" + doc.id + "' is blank");
    }
  }
}

CorpusSource LoadCorpus(const fs::path &path, const ExtractOptions &options,
                        bool pretagged) {
  CorpusSource source;
  source.extract = options;
  std::error_code ec;
  if (path != "-" && fs::is_directory(path, ec)) {
    InputFormat format = pretagged ? InputFormat::kLines : InputFormat::kPlain;
    std::vector<fs::path> files;
    for (const fs::directory_entry &entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path &file : files) {
      source.documents.push_back({file.filename().string(), ReadFile(file), format});
    }
  } else {
    std::string id = path == "-" ? "stdin" : path.filename().string();
    source.documents.push_back({id, ReadFile(path), InputFormat::kLines});
  }
  source.Validate();
  return source;
}

std::vector<FlatDocument> FlattenCorpus(const CorpusSource &source) {
  std::vector<FlatDocument> docs;
  for (const CorpusDocument &doc : source.documents) {
    ExtractOptions options = source.extract;
    options.format = doc.format;
    try {
      docs.push_back(ExtractFlatText(doc.text, options, doc.id));
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kEmptyDocument) throw;
    }
  }
  return docs;
}

FlatDocument CorpusAsDocument(const CorpusSource &source) {
  FlatDocument corpus;
  corpus.id = "corpus";
  for (FlatDocument &doc : FlattenCorpus(source)) {
    for (Paragraph &p : doc.paragraphs) corpus.paragraphs.push_back(std::move(p));
  }
  if (corpus.paragraphs.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus", "no sentences in corpus");
  }
  return corpus;
}

TermFrequencyIndex TermFrequencyIndex::FromCounts(
    const std::map<std::string, int64_t> &counts, size_t document_count) {
  TermFrequencyIndex index;
  index.document_count_ = document_count;
  for (const auto &[term, count] : counts) {
    if (count < 1) {
      throw Error(ErrorCode::kInvalidArgument, "corpus",
                  "count for '" + term + "' must be positive");
    }
    index.entries_[ToLower(term)].count += count;
  }
  if (index.entries_.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus", "no noun terms to index");
  }
  for (const auto &[term, entry] : index.entries_) {
    index.max_count_ = std::max(index.max_count_, entry.count);
    index.noun_tokens_ += entry.count;
  }
  const double max_count = static_cast<double>(index.max_count_);
  for (auto &[term, entry] : index.entries_) {
    // Divide first so the most frequent term lands on exactly 100.
    entry.tf = kMaxTf * (static_cast<double>(entry.count) / max_count);
  }
  return index;
}

const TermFrequencyIndex::Entry *TermFrequencyIndex::Find(std::string_view term) const {
  auto it = entries_.find(ToLower(term));
  return it == entries_.end() ? nullptr : &it->second;
}

double TermFrequencyIndex::Lookup(std::string_view term) const {
  const Entry *entry = Find(term);
  return entry == nullptr ? 0.0 : entry->tf;
}

std::vector<std::pair<std::string, TermFrequencyIndex::Entry>>
TermFrequencyIndex::Ranked() const {
  std::vector<std::pair<std::string, Entry>> ranked(entries_.begin(), entries_.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    return a.second.tf > b.second.tf;
  });
  return ranked;
}

TermFrequencyIndex BuildIndex(const CorpusSource &source, const Tagger &tagger) {
  source.Validate();
  std::map<std::string, int64_t> counts;
  size_t sentences = 0;
  std::vector<FlatDocument> docs = FlattenCorpus(source);
  for (const FlatDocument &doc : docs) {
    for (const LocatedSentence &s : doc.Sentences()) {
      ++sentences;
      TaggedSentence tagged;
      try {
        tagged = tagger.Analyze(*s.text);
      } catch (const Error &e) {
        throw Error(ErrorCode::kTaggerFailure, "corpus",
                    "document '" + doc.id + "' sentence " +
                        std::to_string(s.position) + ": " + e.what());
      }
      for (size_t i : tagged.terms) ++counts[ToLower(tagged.tokens[i].text)];
    }
  }
  if (sentences == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus", "no sentences in corpus");
  }
  if (counts.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus", "no noun tokens in corpus");
  }
  return TermFrequencyIndex::FromCounts(counts, source.documents.size());
}

std::string FormatIndex(const TermFrequencyIndex &index) {
  std::string out = "# corpsum-index documents=" +
                    std::to_string(index.document_count()) +
                    " noun_tokens=" + std::to_string(index.noun_tokens()) +
                    " terms=" + std::to_string(index.size()) + "\n";
  for (const auto &[term, entry] : index.Ranked()) {
    out += term;
    out.push_back('\t');
    out += FormatDouble(entry.tf);
    out.push_back('\t');
    out += std::to_string(entry.count);
    out.push_back('\n');
  }
  return out;
}

TermFrequencyIndex ParseIndex(std::string_view text, std::string_view source) {
  TermFrequencyIndex index;
  std::optional<long long> header_tokens;
  size_t pos = 0;
  size_t line_no = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    if (line.front() == '#') {
      if (line_no != 1) continue;
      for (const std::string &field : SplitWhitespace(line.substr(1))) {
        size_t eq = field.find('=');
        if (eq == std::string::npos) continue;
        std::string_view key(field.data(), eq);
        auto value = ParseInteger(std::string_view(field).substr(eq + 1));
        if (!value || *value < 0) {
          throw FormatErrorAt(source, line_no, "bad header field '" + field + "'");
        }
        if (key == "documents") index.document_count_ = static_cast<size_t>(*value);
        if (key == "noun_tokens") header_tokens = *value;
      }
      continue;
    }

    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3 || Trim(fields[0]).empty()) {
      throw FormatErrorAt(source, line_no, "expected term<TAB>tf<TAB>count");
    }
    std::string term = ToLower(Trim(fields[0]));
    auto tf = ParseDouble(fields[1]);
    auto count = ParseInteger(fields[2]);
    if (!tf || !std::isfinite(*tf) || *tf <= 0.0 || *tf > kMaxTf + kTfTolerance) {
      throw FormatErrorAt(source, line_no, "tf must be in (0, 100]");
    }
    if (!count || *count < 1) {
      throw FormatErrorAt(source, line_no, "count must be a positive integer");
    }
    if (!index.entries_.emplace(term, TermFrequencyIndex::Entry{*tf, *count}).second) {
      throw FormatErrorAt(source, line_no, "duplicate term '" + term + "'");
    }
  }

  if (index.entries_.empty()) {
    throw Error(ErrorCode::kFormatError, "corpus", std::string(source) + ": no terms");
  }
  double max_tf = 0.0;
  for (const auto &[term, entry] : index.entries_) {
    max_tf = std::max(max_tf, entry.tf);
    index.max_count_ = std::max(index.max_count_, entry.count);
    index.noun_tokens_ += entry.count;
  }
  if (std::fabs(max_tf - kMaxTf) > kTfTolerance) {
    throw Error(ErrorCode::kFormatError, "corpus",
                std::string(source) + ": maximum tf is " + FormatDouble(max_tf) +
                    ", expected 100.0");
  }
  for (const auto &[term, entry] : index.entries_) {
    double expected = kMaxTf * (static_cast<double>(entry.count) /
                                static_cast<double>(index.max_count_));
    if (std::fabs(entry.tf - expected) > kTfTolerance * kMaxTf) {
      throw Error(ErrorCode::kFormatError, "corpus",
                  std::string(source) + ": tf of '" + term +
                      "' does not match its count");
    }
  }
  if (header_tokens && *header_tokens != index.noun_tokens_) {
    throw Error(ErrorCode::kFormatError, "corpus",
                std::string(source) + ": header noun_tokens disagrees with counts");
  }
  return index;
}

void SaveIndex(const TermFrequencyIndex &index, const fs::path &path) {
  WriteFile(path, FormatIndex(index));
}

TermFrequencyIndex LoadIndex(const fs::path &path) {
  return ParseIndex(ReadFile(path), path.string());
}

}  // namespace corpsum
