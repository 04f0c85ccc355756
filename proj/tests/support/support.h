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

// Shared helpers for the test suites: fixture paths, scratch directories,
// seeded generators for synthetic documents and corpora, and independent
// reference implementations used as oracles.

#ifndef CORPSUM_TESTS_SUPPORT_SUPPORT_H_
#define CORPSUM_TESTS_SUPPORT_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "corpsum/corpus.h"
#include "corpsum/scoring.h"
#include "corpsum/selection.h"

namespace corpsum::testing {

std::filesystem::path FixturePath(const std::string &relative);

// Creates a fresh directory under the system temp dir; removes it on exit.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path Write(const std::string &name, const std::string &contents) const;

 private:
  std::filesystem::path path_;
};

using Rng = std::mt19937_64;

// Seed for a named suite. CORPSUM_TEST_SEED in the environment shifts every
// suite, so a failing run can be reproduced or varied.
uint64_t SuiteSeed(uint64_t base);

size_t Uniform(Rng &rng, size_t lo, size_t hi);  // inclusive bounds
double UniformReal(Rng &rng, double lo, double hi);
bool Chance(Rng &rng, double p);

// One token of a synthetic sentence, with its tag label as it would appear
// in word_TAG input.
struct GenToken {
  std::string word;
  std::string tag;
};
using GenSentence = std::vector<GenToken>;

struct GenDocument {
  std::vector<std::vector<GenSentence>> paragraphs;

  std::vector<GenSentence> Flat() const;
  // Sentence-per-line word_TAG text, blank line between paragraphs.
  std::string ToPretagged() const;
};

// Random tag sequences over a small synthetic vocabulary. Nouns are drawn
// from `noun_vocab` words n0..n{noun_vocab-1}; some sentences open with a
// connective so the back-reference rule has work to do.
GenDocument RandomDocument(Rng &rng, size_t max_sentences = 24, size_t noun_vocab = 30);

// Raw counts for a random subset of the synthetic noun vocabulary.
std::map<std::string, int64_t> RandomCounts(Rng &rng, size_t noun_vocab = 30,
                                            int64_t max_count = 5000);

// Random short lowercase words joined into plain-text paragraphs. Each
// sentence ends with a period.
std::string RandomPlainText(Rng &rng, size_t max_paragraphs = 5);

// A DocumentScore with arbitrary rank values, for selection tests.
DocumentScore RandomRanks(Rng &rng, size_t n, const std::set<std::string> &connectives);

// ---- Oracles -------------------------------------------------------------

struct OracleSentence {
  double s1 = 0.0;
  double s2 = 0.0;
  double sw = 0.0;
  double suw = 0.0;
  double rank = 0.0;
  size_t t_n = 0;
  size_t w_n = 0;
  std::optional<std::pair<size_t, size_t>> subject;
};

struct OracleDocument {
  std::vector<OracleSentence> sentences;
  double mean = 0.0;
};

// Brute-force recomputation of sentence weight, subject weight, their
// normalizations and the rank, directly from tags and raw counts. The
// subject is found by trying every start position against a regular
// expression over a one-letter encoding of the tags.
std::optional<std::pair<size_t, size_t>> OracleSubject(const GenSentence &sentence);
OracleDocument OracleScore(const std::vector<GenSentence> &sentences,
                           const std::map<std::string, int64_t> &counts);

// Threshold and selection recomputed by sorting.
struct OracleSelection {
  double threshold = 0.0;
  std::vector<size_t> selected;
  std::vector<size_t> backref_added;
};
OracleSelection OracleSelect(const DocumentScore &score, size_t quota,
                             const std::set<std::string> &connectives, double factor);

std::set<size_t> OracleReference(const std::vector<std::set<size_t>> &extracts,
                                 size_t n_sentences);

// Relative closeness with an absolute floor of `tol` near zero.
bool Close(double a, double b, double tol);

}  // namespace corpsum::testing

#endif  // CORPSUM_TESTS_SUPPORT_SUPPORT_H_
