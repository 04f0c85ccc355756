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

#ifndef CORPSUM_EVALUATION_H_
#define CORPSUM_EVALUATION_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpsum/scoring.h"
#include "corpsum/selection.h"

namespace corpsum {

inline constexpr double kDefaultMajority = 0.5;

// Sentences one reviewer picked, 0-based.
struct HumanExtract {
  std::string reviewer;
  std::set<size_t> positions;
};

// One integer per line; blank and '#' lines ignored, duplicates collapsed.
// Throws Error(kFormatError) on anything else. Range checks happen later,
// once the document length is known.
HumanExtract ParseExtract(std::string_view text, std::string reviewer);
// The reviewer id is the file name without its extension.
HumanExtract ReadExtractFile(const std::filesystem::path &path);

// Positions picked by more than `majority` of the reviewers (strictly more
// than half by default). Throws Error(kRangeError) for positions >= n and
// Error(kEmptyReference) when nothing reaches the quorum.
std::set<size_t> BuildReference(std::span<const HumanExtract> extracts,
                                size_t n_sentences, double majority = kDefaultMajority);

struct EvalReport {
  size_t system_size = 0;
  size_t reference_size = 0;
  size_t overlap = 0;
  double precision = 0.0;
  double recall = 0.0;
  // Headline figure; equals recall against the reference.
  double performance = 0.0;
  std::map<std::string, size_t> per_reviewer_overlap;
  // Mean and sample standard deviation of the rank values in each summary.
  double sys_mean = 0.0;
  double ref_mean = 0.0;
  double sys_ssd = 0.0;
  double ref_ssd = 0.0;
  double mean_diff = 0.0;
  double ssd_diff = 0.0;
};

double Mean(std::span<const double> values);
// Divisor n - 1; 0 for fewer than two values.
double SampleStdDev(std::span<const double> values);

// Throws Error(kRangeError) when any position is outside `scores`.
EvalReport OverlapReport(const Summary &system, const std::set<size_t> &reference,
                         std::span<const HumanExtract> extracts,
                         const DocumentScore &scores);

// "reviewer<TAB>extract_size<TAB>overlap" rows under a header line.
std::string PerReviewerTsv(const EvalReport &report,
                           std::span<const HumanExtract> extracts);

}  // namespace corpsum

#endif  // CORPSUM_EVALUATION_H_
