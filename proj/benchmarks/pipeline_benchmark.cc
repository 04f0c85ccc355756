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


// Throughput of each pipeline stage on the bundled DC-circuit fixture.

#include <benchmark/benchmark.h>

#include <string>

#include "corpsum/corpus.h"
#include "corpsum/extraction.h"
#include "corpsum/linguistic.h"
#include "corpsum/scoring.h"
#include "corpsum/selection.h"
#include "corpsum/strings.h"

namespace corpsum {
namespace {

const std::string &FixtureHtml() {
  static const std::string html =
      ReadFile(std::string(CORPSUM_FIXTURE_DIR) + "/docs/dc_circuits.html");
  return html;
}

const TermFrequencyIndex &FixtureIndex() {
  static const TermFrequencyIndex index =
      BuildIndex(LoadCorpus(std::string(CORPSUM_FIXTURE_DIR) + "/corpus"),
                 Tagger::Builtin());
  return index;
}

void BM_ExtractHtml(benchmark::State &state) {
  const std::string &html = FixtureHtml();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtractFlatText(html, {}, "dc"));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * html.size()));
}
BENCHMARK(BM_ExtractHtml);

void BM_TagDocument(benchmark::State &state) {
  const FlatDocument doc = ExtractFlatText(FixtureHtml(), {}, "dc");
  const Tagger tagger = Tagger::Builtin();
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnalyzeDocument(doc, tagger));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * doc.SentenceCount()));
}
BENCHMARK(BM_TagDocument);

void BM_BuildIndex(benchmark::State &state) {
  const CorpusSource source = LoadCorpus(std::string(CORPSUM_FIXTURE_DIR) + "/corpus");
  const Tagger tagger = Tagger::Builtin();
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildIndex(source, tagger));
  }
}
BENCHMARK(BM_BuildIndex);

void BM_ScoreAnalyzed(benchmark::State &state) {
  const AnalyzedDocument doc =
      AnalyzeDocument(ExtractFlatText(FixtureHtml(), {}, "dc"), Tagger::Builtin());
  const TermFrequencyIndex &index = FixtureIndex();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreAnalyzed(doc, index));
  }
}
BENCHMARK(BM_ScoreAnalyzed);

void BM_SelectSummary(benchmark::State &state) {
  const DocumentScore score = ScoreDocument(ExtractFlatText(FixtureHtml(), {}, "dc"),
                                            FixtureIndex(), Tagger::Builtin());
  const size_t quota = ComputeQuota(score.sentences.size(), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SelectSummary(score, quota));
  }
}
BENCHMARK(BM_SelectSummary);

}  // namespace
}  // namespace corpsum

BENCHMARK_MAIN();
