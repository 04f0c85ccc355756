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

#ifndef CORPSUM_SELECTION_H_
#define CORPSUM_SELECTION_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "corpsum/extraction.h"
#include "corpsum/scoring.h"

namespace corpsum {

inline constexpr double kDefaultRatio = 0.30;
inline constexpr double kDefaultBackrefFactor = 0.70;

struct DocumentMeanEntry {
  std::string id;
  double mean = 0.0;
  double delta = 0.0;  // mean - corpus mean
};

struct ResourcefulnessReport {
  double corpus_mean = 0.0;
  std::vector<DocumentMeanEntry> entries;  // in input order
  // Largest positive delta; ties go to the smaller id. Absent when no
  // document beats the corpus mean.
  std::optional<std::string> chosen;
};

// Throws Error(kInvalidArgument) when `docs` is empty.
ResourcefulnessReport RankDocuments(const DocumentScore &corpus,
                                    std::span<const DocumentScore> docs);

// ceil(n * ratio) clamped to [1, n].
size_t ComputeQuota(size_t n_sentences, double ratio);

// {such, beyond, although, however, moreover, also, this, these, those, that}
const std::set<std::string> &DefaultConnectives();

// Selected sentence positions of one document, strictly ascending.
class Summary {
 public:
  // Throws Error(kInvalidSummary) unless `selected` is strictly ascending
  // and `backref_added` is an ascending subset of it.
  Summary(std::string doc_id, std::vector<size_t> selected, double threshold,
          size_t quota, std::vector<size_t> backref_added = {});

  const std::string &doc_id() const { return doc_id_; }
  const std::vector<size_t> &selected() const { return selected_; }
  double threshold() const { return threshold_; }
  size_t quota() const { return quota_; }
  const std::vector<size_t> &backref_added() const { return backref_added_; }
  size_t size() const { return selected_.size(); }

  bool Contains(size_t position) const;
  bool IsBackref(size_t position) const;

  friend bool operator==(const Summary &, const Summary &) = default;

 private:
  std::string doc_id_;
  std::vector<size_t> selected_;
  double threshold_;
  size_t quota_;
  std::vector<size_t> backref_added_;
};

// The quota-th highest rank becomes the threshold and every sentence at or
// above it is selected. Then, in one pass in document order, a selected
// sentence whose lead word is a connective pulls in its unselected
// predecessor when rank(pred) >= backref_factor * rank(sentence).
Summary SelectSummary(const DocumentScore &score, size_t quota,
                      const std::set<std::string> &connectives = DefaultConnectives(),
                      double backref_factor = kDefaultBackrefFactor);

enum class SummaryFormat { kText, kJson };

// Text joins sentences with a space and starts a new paragraph (blank line)
// whenever the source paragraph changes. Throws Error(kPositionOutOfRange)
// for positions outside the document.
std::string RenderSummary(const Summary &summary, const FlatDocument &doc,
                          const DocumentScore &score, SummaryFormat format);

}  // namespace corpsum

#endif  // CORPSUM_SELECTION_H_
