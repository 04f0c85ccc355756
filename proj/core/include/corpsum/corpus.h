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

#ifndef CORPSUM_CORPUS_H_
#define CORPSUM_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corpsum/extraction.h"
#include "corpsum/linguistic.h"

namespace corpsum {

struct CorpusDocument {
  std::string id;
  std::string text;
  InputFormat format = InputFormat::kPlain;
};

// The reference corpus: ordered plain-text documents. `extract` supplies the
// splitting flags; each document's own format overrides extract.format.
struct CorpusSource {
  std::vector<CorpusDocument> documents;
  ExtractOptions extract{InputFormat::kPlain};

  // Throws Error(kEmptyCorpus) when there are no documents or a document is
  // blank after trimming.
  void Validate() const;
};

// A directory is read as every regular "*.txt" file in name order; a file is
// read as one sentence per line. `pretagged` switches both to line format.
CorpusSource LoadCorpus(const std::filesystem::path &path,
                        const ExtractOptions &options = {InputFormat::kPlain},
                        bool pretagged = false);

// Documents that extract to nothing are skipped.
std::vector<FlatDocument> FlattenCorpus(const CorpusSource &source);

// All corpus paragraphs as one document with id "corpus", for comparing a
// corpus mean sentence weight with candidate documents.
FlatDocument CorpusAsDocument(const CorpusSource &source);

// Normalised noun term frequencies: tf(t) = 100 * count(t) / max count.
// Immutable once built.
class TermFrequencyIndex {
 public:
  struct Entry {
    double tf = 0.0;
    int64_t count = 0;

    friend bool operator==(const Entry &, const Entry &) = default;
  };
  using EntryMap = std::map<std::string, Entry, std::less<>>;

  // Keys are case-folded; counts must be >= 1. Throws Error(kEmptyCorpus)
  // for an empty map.
  static TermFrequencyIndex FromCounts(const std::map<std::string, int64_t> &counts,
                                       size_t document_count = 0);

  // 0.0 for unknown terms. Case-folds `term`.
  double Lookup(std::string_view term) const;
  const Entry *Find(std::string_view term) const;

  const EntryMap &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  size_t document_count() const { return document_count_; }
  int64_t noun_tokens() const { return noun_tokens_; }
  int64_t max_count() const { return max_count_; }

  // Entries ordered by tf descending, then term ascending.
  std::vector<std::pair<std::string, Entry>> Ranked() const;

  friend bool operator==(const TermFrequencyIndex &, const TermFrequencyIndex &) = default;

 private:
  friend TermFrequencyIndex ParseIndex(std::string_view text, std::string_view source);

  TermFrequencyIndex() = default;

  EntryMap entries_;
  size_t document_count_ = 0;
  int64_t noun_tokens_ = 0;
  int64_t max_count_ = 0;
};

// Counts every NN/NNS/NNP/NNPS token in the corpus. Throws
// Error(kEmptyCorpus) when no sentence or no noun survives, and
// Error(kTaggerFailure) naming the document and sentence on tagging errors.
TermFrequencyIndex BuildIndex(const CorpusSource &source, const Tagger &tagger);

// TSV: a "# corpsum-index documents=N noun_tokens=M terms=K" header, then
// "term<TAB>tf<TAB>count" lines in Ranked() order.
std::string FormatIndex(const TermFrequencyIndex &index);
// Throws Error(kFormatError) on malformed lines, duplicate terms, or tf values
// that break the normalisation (max tf must be 100 within 1e-9).
TermFrequencyIndex ParseIndex(std::string_view text, std::string_view source = "index");

void SaveIndex(const TermFrequencyIndex &index, const std::filesystem::path &path);
TermFrequencyIndex LoadIndex(const std::filesystem::path &path);

}  // namespace corpsum

#endif  // CORPSUM_CORPUS_H_
