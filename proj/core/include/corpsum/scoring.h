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

#ifndef CORPSUM_SCORING_H_
#define CORPSUM_SCORING_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "corpsum/corpus.h"
#include "corpsum/extraction.h"
#include "corpsum/linguistic.h"

namespace corpsum {

// Per-sentence scores.
//   s1   = (t_n / w_n) * sum of corpus tf over the sentence's nouns
//   s2   = sum of corpus tf over the nouns inside the subject
//   sw   = 100 * s1 / max s1 in the document   (0 when the max is 0)
//   suw  = 100 * s2 / max s2 in the document   (0 when the max is 0)
//   rank = sw + suw
struct ScoredSentence {
  size_t position = 0;
  size_t paragraph = 0;
  double s1 = 0.0;
  double s2 = 0.0;
  double sw = 0.0;
  double suw = 0.0;
  double rank = 0.0;
  size_t t_n = 0;
  size_t w_n = 1;
  // Case-folded first word, for the connective rule in selection.
  std::string lead;

  friend bool operator==(const ScoredSentence &, const ScoredSentence &) = default;
};

struct DocumentScore {
  std::string id;
  std::vector<ScoredSentence> sentences;
  double mean = 0.0;
  double max_s1 = 0.0;
  double max_s2 = 0.0;

  friend bool operator==(const DocumentScore &, const DocumentScore &) = default;
};

// A document after tokenising, tagging and subject extraction.
struct AnalyzedDocument {
  std::string id;
  std::vector<TaggedSentence> sentences;
  std::vector<size_t> paragraph_of;
};

double SentenceTermSum(const TaggedSentence &tagged, const TermFrequencyIndex &index);

// Throws Error(kDegenerateInput) when w_n is 0 or t_n exceeds w_n.
double SentenceWeight(size_t t_n, size_t w_n, double term_sum);

double SubjectWeight(const TaggedSentence &tagged, const TermFrequencyIndex &index);

// Throws Error(kEmptyDocument) for a document without sentences, and
// Error(kTaggerFailure) with the sentence position when tagging fails.
AnalyzedDocument AnalyzeDocument(const FlatDocument &doc, const Tagger &tagger);

DocumentScore ScoreAnalyzed(const AnalyzedDocument &doc, const TermFrequencyIndex &index);

DocumentScore ScoreDocument(const FlatDocument &doc, const TermFrequencyIndex &index,
                            const Tagger &tagger);

// Fills sw, suw, rank, the maxima and the mean from sentences whose s1 and
// s2 are already set.
DocumentScore Normalize(std::string id, std::vector<ScoredSentence> sentences);

// Mean s1 over all sentences.
double DocumentMean(const DocumentScore &score);

}  // namespace corpsum

#endif  // CORPSUM_SCORING_H_
