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

#include "corpsum/scoring.h"

#include <algorithm>

#include "corpsum/error.h"

namespace corpsum {

namespace {

// 100 * value / max, dividing first so the maximum maps to exactly 100.
double Scale(double value, double max) {
  return max > 0.0 ? 100.0 * (value / max) : 0.0;
}

}  // namespace

double SentenceTermSum(const TaggedSentence &tagged, const TermFrequencyIndex &index) {
  double sum = 0.0;
  for (size_t i : tagged.terms) sum += index.Lookup(tagged.tokens[i].text);
  return sum;
}

double SentenceWeight(size_t t_n, size_t w_n, double term_sum) {
  if (w_n == 0) {
    throw Error(ErrorCode::kDegenerateInput, "scoring", "sentence has no words");
  }
  if (t_n > w_n) {
    throw Error(ErrorCode::kDegenerateInput, "scoring",
                "more terms than words in a sentence");
  }
  return static_cast<double>(t_n) / static_cast<double>(w_n) * term_sum;
}

double SubjectWeight(const TaggedSentence &tagged, const TermFrequencyIndex &index) {
  if (!tagged.subject) return 0.0;
  double sum = 0.0;
  for (size_t i = tagged.subject->begin; i < tagged.subject->end; ++i) {
    if (IsNoun(tagged.tokens[i].tag)) sum += index.Lookup(tagged.tokens[i].text);
  }
  return sum;
}

AnalyzedDocument AnalyzeDocument(const FlatDocument &doc, const Tagger &tagger) {
  AnalyzedDocument out;
  out.id = doc.id;
  for (const LocatedSentence &s : doc.Sentences()) {
    try {
      out.sentences.push_back(tagger.Analyze(*s.text));
    } catch (const Error &e) {
      throw Error(ErrorCode::kTaggerFailure, "linguistic",
                  "sentence " + std::to_string(s.position) + ": " + e.what());
    }
    out.paragraph_of.push_back(s.paragraph);
  }
  if (out.sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "scoring",
                "document '" + doc.id + "' has no sentences");
  }
  return out;
}

DocumentScore Normalize(std::string id, std::vector<ScoredSentence> sentences) {
  if (sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "scoring",
                "document '" + id + "' has no sentences");
  }
  DocumentScore score;
  score.id = std::move(id);
  double total = 0.0;
  for (const ScoredSentence &s : sentences) {
    score.max_s1 = std::max(score.max_s1, s.s1);
    score.max_s2 = std::max(score.max_s2, s.s2);
    total += s.s1;
  }
  for (ScoredSentence &s : sentences) {
    s.sw = Scale(s.s1, score.max_s1);
    s.suw = Scale(s.s2, score.max_s2);
    s.rank = s.sw + s.suw;
  }
  score.mean = total / static_cast<double>(sentences.size());
  score.sentences = std::move(sentences);
  return score;
}

DocumentScore ScoreAnalyzed(const AnalyzedDocument &doc, const TermFrequencyIndex &index) {
  std::vector<ScoredSentence> sentences;
  sentences.reserve(doc.sentences.size());
  for (size_t i = 0; i < doc.sentences.size(); ++i) {
    const TaggedSentence &tagged = doc.sentences[i];
    ScoredSentence s;
    s.position = i;
    s.paragraph = i < doc.paragraph_of.size() ? doc.paragraph_of[i] : 0;
    s.t_n = tagged.terms.size();
    // A sentence of bare punctuation still counts as one word so that its
    // (zero) weight is defined.
    s.w_n = std::max<size_t>(tagged.WordCount(), 1);
    s.s1 = SentenceWeight(s.t_n, s.w_n, SentenceTermSum(tagged, index));
    s.s2 = SubjectWeight(tagged, index);
    s.lead = tagged.LeadWord();
    sentences.push_back(std::move(s));
  }
  return Normalize(doc.id, std::move(sentences));
}

DocumentScore ScoreDocument(const FlatDocument &doc, const TermFrequencyIndex &index,
                            const Tagger &tagger) {
  return ScoreAnalyzed(AnalyzeDocument(doc, tagger), index);
}

double DocumentMean(const DocumentScore &score) {
  if (score.sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "scoring", "mean of an empty document");
  }
  double total = 0.0;
  for (const ScoredSentence &s : score.sentences) total += s.s1;
  return total / static_cast<double>(score.sentences.size());
}

}  // namespace corpsum
