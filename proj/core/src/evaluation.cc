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

#include "corpsum/evaluation.h"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "corpsum/error.h"
#include "corpsum/strings.h"

namespace corpsum {

namespace {

size_t CountShared(const std::vector<size_t> &sorted, const std::set<size_t> &other) {
  size_t n = 0;
  for (size_t p : sorted) n += other.count(p);
  return n;
}

void CheckRange(size_t position, size_t n, const std::string &what) {
  if (position >= n) {
    throw Error(ErrorCode::kRangeError, "evaluation",
                what + " position " + std::to_string(position) +
                    " exceeds document of " + std::to_string(n) + " sentences");
  }
}

std::vector<double> RanksOf(const DocumentScore &scores, const auto &positions) {
  std::vector<double> ranks;
  for (size_t p : positions) ranks.push_back(scores.sentences[p].rank);
  return ranks;
}

}  // namespace

HumanExtract ParseExtract(std::string_view text, std::string reviewer) {
  HumanExtract extract;
  extract.reviewer = std::move(reviewer);
  size_t pos = 0;
  size_t line_no = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto value = ParseInteger(line);
    if (!value || *value < 0) {
      throw Error(ErrorCode::kFormatError, "evaluation",
                  extract.reviewer + ":" + std::to_string(line_no) +
                      ": expected a sentence position, got '" + std::string(line) + "'");
    }
    extract.positions.insert(static_cast<size_t>(*value));
  }
  if (extract.positions.empty()) {
    throw Error(ErrorCode::kFormatError, "evaluation",
                extract.reviewer + ": extract selects no sentences");
  }
  return extract;
}

HumanExtract ReadExtractFile(const std::filesystem::path &path) {
  return ParseExtract(ReadFile(path), path.stem().string());
}

std::set<size_t> BuildReference(std::span<const HumanExtract> extracts,
                                size_t n_sentences, double majority) {
  if (extracts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "evaluation", "no human extracts");
  }
  if (!(majority >= 0.0 && majority < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "evaluation",
                "majority threshold must be in [0, 1)");
  }
  std::vector<size_t> votes(n_sentences, 0);
  for (const HumanExtract &extract : extracts) {
    for (size_t p : extract.positions) {
      CheckRange(p, n_sentences, "extract '" + extract.reviewer + "'");
      ++votes[p];
    }
  }
  const double quorum = majority * static_cast<double>(extracts.size());
  std::set<size_t> reference;
  for (size_t p = 0; p < n_sentences; ++p) {
    if (static_cast<double>(votes[p]) > quorum) reference.insert(p);
  }
  if (reference.empty()) {
    throw Error(ErrorCode::kEmptyReference, "evaluation",
                "no sentence was chosen by a majority of " +
                    std::to_string(extracts.size()) + " reviewers");
  }
  return reference;
}

double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double total = 0.0;
  for (double v : values) total += v;
  return total / static_cast<double>(values.size());
}

double SampleStdDev(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  // Deviations are taken from the first value before centering, so a
  // constant sequence gives exactly zero.
  const double shift = values[0];
  double total = 0.0;
  for (double v : values) total += v - shift;
  const double mean = total / static_cast<double>(values.size());
  double squares = 0.0;
  for (double v : values) squares += (v - shift - mean) * (v - shift - mean);
  return std::sqrt(squares / static_cast<double>(values.size() - 1));
}

EvalReport OverlapReport(const Summary &system, const std::set<size_t> &reference,
                         std::span<const HumanExtract> extracts,
                         const DocumentScore &scores) {
  const size_t n = scores.sentences.size();
  for (size_t p : system.selected()) CheckRange(p, n, "summary");
  for (size_t p : reference) CheckRange(p, n, "reference");
  for (const HumanExtract &extract : extracts) {
    for (size_t p : extract.positions) CheckRange(p, n, "extract '" + extract.reviewer + "'");
  }

  EvalReport report;
  report.system_size = system.size();
  report.reference_size = reference.size();
  report.overlap = CountShared(system.selected(), reference);
  report.precision = report.system_size == 0
                         ? 0.0
                         : static_cast<double>(report.overlap) /
                               static_cast<double>(report.system_size);
  report.recall = report.reference_size == 0
                      ? 0.0
                      : static_cast<double>(report.overlap) /
                            static_cast<double>(report.reference_size);
  report.performance = report.recall;
  for (const HumanExtract &extract : extracts) {
    report.per_reviewer_overlap[extract.reviewer] =
        CountShared(system.selected(), extract.positions);
  }

  std::vector<double> sys_ranks = RanksOf(scores, system.selected());
  std::vector<double> ref_ranks = RanksOf(scores, reference);
  report.sys_mean = Mean(sys_ranks);
  report.ref_mean = Mean(ref_ranks);
  report.sys_ssd = SampleStdDev(sys_ranks);
  report.ref_ssd = SampleStdDev(ref_ranks);
  report.mean_diff = std::fabs(report.sys_mean - report.ref_mean);
  report.ssd_diff = std::fabs(report.sys_ssd - report.ref_ssd);
  return report;
}

std::string PerReviewerTsv(const EvalReport &report,
                           std::span<const HumanExtract> extracts) {
  std::string out = "reviewer\textract_size\toverlap\n";
  for (const HumanExtract &extract : extracts) {
    auto it = report.per_reviewer_overlap.find(extract.reviewer);
    size_t overlap = it == report.per_reviewer_overlap.end() ? 0 : it->second;
    out += extract.reviewer + "\t" + std::to_string(extract.positions.size()) + "\t" +
           std::to_string(overlap) + "\n";
  }
  return out;
}

}  // namespace corpsum
