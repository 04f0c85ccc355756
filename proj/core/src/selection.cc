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

#include "corpsum/selection.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "corpsum/error.h"
#include "corpsum/json_io.h"

namespace corpsum {

ResourcefulnessReport RankDocuments(const DocumentScore &corpus,
                                    std::span<const DocumentScore> docs) {
  if (docs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "selection", "no candidate documents");
  }
  ResourcefulnessReport report;
  report.corpus_mean = DocumentMean(corpus);
  const DocumentMeanEntry *best = nullptr;
  report.entries.reserve(docs.size());
  for (const DocumentScore &doc : docs) {
    double mean = DocumentMean(doc);
    report.entries.push_back({doc.id, mean, mean - report.corpus_mean});
  }
  for (const DocumentMeanEntry &entry : report.entries) {
    if (entry.delta <= 0.0) continue;
    if (best == nullptr || entry.delta > best->delta ||
        (entry.delta == best->delta && entry.id < best->id)) {
      best = &entry;
    }
  }
  if (best != nullptr) report.chosen = best->id;
  return report;
}

size_t ComputeQuota(size_t n_sentences, double ratio) {
  if (n_sentences == 0) {
    throw Error(ErrorCode::kInvalidArgument, "selection", "document has no sentences");
  }
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "selection", "ratio must be in (0, 1]");
  }
  // The epsilon keeps products such as 10 * 0.3 = 3.0000000000000004 at 3.
  double raw = std::ceil(static_cast<double>(n_sentences) * ratio - 1e-9);
  size_t quota = raw < 1.0 ? 1 : static_cast<size_t>(raw);
  return std::clamp<size_t>(quota, 1, n_sentences);
}

const std::set<std::string> &DefaultConnectives() {
  static const std::set<std::string> connectives = {
      "such", "beyond", "although", "however", "moreover",
      "also", "this",   "these",    "those",   "that"};
  return connectives;
}

Summary::Summary(std::string doc_id, std::vector<size_t> selected, double threshold,
                 size_t quota, std::vector<size_t> backref_added)
    : doc_id_(std::move(doc_id)),
      selected_(std::move(selected)),
      threshold_(threshold),
      quota_(quota),
      backref_added_(std::move(backref_added)) {
  for (size_t i = 1; i < selected_.size(); ++i) {
    if (selected_[i] <= selected_[i - 1]) {
      throw Error(ErrorCode::kInvalidSummary, "selection",
                  "selected positions must be strictly ascending");
    }
  }
  for (size_t i = 0; i < backref_added_.size(); ++i) {
    if (i > 0 && backref_added_[i] <= backref_added_[i - 1]) {
      throw Error(ErrorCode::kInvalidSummary, "selection",
                  "back-reference positions must be strictly ascending");
    }
    if (!Contains(backref_added_[i])) {
      throw Error(ErrorCode::kInvalidSummary, "selection",
                  "back-reference position " + std::to_string(backref_added_[i]) +
                      " is not selected");
    }
  }
}

bool Summary::Contains(size_t position) const {
  return std::binary_search(selected_.begin(), selected_.end(), position);
}

bool Summary::IsBackref(size_t position) const {
  return std::binary_search(backref_added_.begin(), backref_added_.end(), position);
}

Summary SelectSummary(const DocumentScore &score, size_t quota,
                      const std::set<std::string> &connectives, double backref_factor) {
  const size_t n = score.sentences.size();
  if (quota < 1 || quota > n) {
    throw Error(ErrorCode::kInvalidArgument, "selection",
                "quota " + std::to_string(quota) + " outside [1, " +
                    std::to_string(n) + "]");
  }
  if (!(backref_factor > 0.0 && backref_factor <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "selection",
                "back-reference factor must be in (0, 1]");
  }

  std::vector<double> ranks;
  ranks.reserve(n);
  for (const ScoredSentence &s : score.sentences) ranks.push_back(s.rank);
  std::nth_element(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(quota - 1),
                   ranks.end(), std::greater<>());
  const double threshold = ranks[quota - 1];

  std::vector<bool> chosen(n, false);
  for (size_t i = 0; i < n; ++i) chosen[i] = score.sentences[i].rank >= threshold;

  std::vector<size_t> backref;
  const std::vector<bool> base = chosen;
  for (size_t i = 1; i < n; ++i) {
    if (!base[i] || chosen[i - 1]) continue;
    const ScoredSentence &s = score.sentences[i];
    if (connectives.count(s.lead) == 0) continue;
    if (score.sentences[i - 1].rank >= backref_factor * s.rank) {
      chosen[i - 1] = true;
      backref.push_back(i - 1);
    }
  }

  std::vector<size_t> selected;
  for (size_t i = 0; i < n; ++i) {
    if (chosen[i]) selected.push_back(i);
  }
  return Summary(score.id, std::move(selected), threshold, quota, std::move(backref));
}

std::string RenderSummary(const Summary &summary, const FlatDocument &doc,
                          const DocumentScore &score, SummaryFormat format) {
  std::vector<LocatedSentence> sentences = doc.Sentences();
  for (size_t position : summary.selected()) {
    if (position >= sentences.size() || position >= score.sentences.size()) {
      throw Error(ErrorCode::kPositionOutOfRange, "selection",
                  "position " + std::to_string(position) + " outside document of " +
                      std::to_string(sentences.size()) + " sentences");
    }
  }
  if (format == SummaryFormat::kJson) {
    return SummaryToJson(summary, doc, score).dump(2) + "\n";
  }
  std::string out;
  std::optional<size_t> paragraph;
  for (size_t position : summary.selected()) {
    const LocatedSentence &s = sentences[position];
    if (paragraph) out += *paragraph == s.paragraph ? " " : "\n\n";
    out += *s.text;
    paragraph = s.paragraph;
  }
  out.push_back('\n');
  return out;
}

}  // namespace corpsum
