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

#include <gtest/gtest.h>

#include "corpsum/error.h"
#include "corpsum/strings.h"
#include "support/support.h"

namespace corpsum {
namespace {

using testing::FixturePath;
using testing::TempDir;

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

CorpusSource Source(std::vector<std::string> texts) {
  CorpusSource source;
  for (size_t i = 0; i < texts.size(); ++i) {
    source.documents.push_back({"d" + std::to_string(i), std::move(texts[i])});
  }
  return source;
}

TEST(TermFrequencyIndex, NormalizesByMaximumCount) {
  auto index = TermFrequencyIndex::FromCounts({{"circuit", 4}, {"voltage", 3}});
  EXPECT_EQ(index.Lookup("circuit"), 100.0);
  EXPECT_DOUBLE_EQ(index.Lookup("voltage"), 75.0);
  EXPECT_EQ(index.max_count(), 4);
  EXPECT_EQ(index.noun_tokens(), 7);
}

TEST(TermFrequencyIndex, TableOneValuesFromCountsOverTheMaximum) {
  // Every printed value is a multiple of 100/226.
  auto index = TermFrequencyIndex::FromCounts(
      {{"circuit", 226}, {"resistance", 170}, {"voltage", 165}, {"ohm", 23}, {"battery", 47}});
  EXPECT_EQ(index.Lookup("circuit"), 100.0);
  EXPECT_NEAR(index.Lookup("resistance"), 75.2212, 1e-4);
  EXPECT_NEAR(index.Lookup("voltage"), 73.0088, 1e-4);
  EXPECT_NEAR(index.Lookup("ohm"), 10.1769, 1e-4);
  EXPECT_NEAR(index.Lookup("battery"), 20.7964, 1e-4);
}

TEST(TermFrequencyIndex, SingleOccurrenceIsTheMaximum) {
  auto index = TermFrequencyIndex::FromCounts({{"wire", 1}});
  EXPECT_EQ(index.Lookup("wire"), 100.0);
}

TEST(TermFrequencyIndex, TiesAtTheMaximumAllScore100) {
  auto index = TermFrequencyIndex::FromCounts({{"a", 9}, {"b", 9}, {"c", 3}});
  EXPECT_EQ(index.Lookup("a"), 100.0);
  EXPECT_EQ(index.Lookup("b"), 100.0);
}

TEST(TermFrequencyIndex, LookupIsCaseFoldedAndTotal) {
  auto index = TermFrequencyIndex::FromCounts({{"Circuit", 2}, {"circuit", 2}, {"ohm", 1}});
  EXPECT_EQ(index.size(), 2u);
  EXPECT_EQ(index.Find("circuit")->count, 4);
  EXPECT_EQ(index.Lookup("CIRCUIT"), 100.0);
  EXPECT_EQ(index.Lookup("zebra"), 0.0);
  EXPECT_EQ(index.Find("zebra"), nullptr);
}

TEST(TermFrequencyIndex, RejectsBadCounts) {
  EXPECT_EQ(CodeOf([] { TermFrequencyIndex::FromCounts({}); }), ErrorCode::kEmptyCorpus);
  EXPECT_EQ(CodeOf([] { TermFrequencyIndex::FromCounts({{"x", 0}}); }),
            ErrorCode::kInvalidArgument);
}

TEST(TermFrequencyIndex, RankedOrdersByTfThenTerm) {
  auto index = TermFrequencyIndex::FromCounts({{"b", 2}, {"a", 2}, {"c", 5}, {"d", 1}});
  auto ranked = index.Ranked();
  ASSERT_EQ(ranked.size(), 4u);
  EXPECT_EQ(ranked[0].first, "c");
  EXPECT_EQ(ranked[1].first, "a");
  EXPECT_EQ(ranked[2].first, "b");
  EXPECT_EQ(ranked[3].first, "d");
}

TEST(BuildIndex, CountsEveryNounTokenCaseFolded) {
  CorpusSource source = Source({"The circuit has a circuit breaker.\n\nCircuit voltage drops.",
                                "A voltage source drives the circuit."});
  auto index = BuildIndex(source, Tagger::Builtin());
  EXPECT_EQ(index.document_count(), 2u);
  EXPECT_EQ(index.Find("circuit")->count, 4);
  EXPECT_EQ(index.Find("voltage")->count, 2);
  EXPECT_EQ(index.Find("breaker")->count, 1);
  EXPECT_EQ(index.Find("source")->count, 1);
  EXPECT_EQ(index.Lookup("circuit"), 100.0);
  // Only nouns become terms.
  EXPECT_EQ(index.Find("the"), nullptr);
  EXPECT_EQ(index.Find("drops"), nullptr);
  EXPECT_EQ(index.Find("drives"), nullptr);
  EXPECT_EQ(index.size(), 4u);
}

TEST(BuildIndex, PretaggedCorpusUsesTheGivenTags) {
  CorpusSource source = Source({"circuit_NN is_VBZ closed_JJ ._.\nOhm_NNP wins_VBZ ._."});
  source.documents[0].format = InputFormat::kLines;
  auto index = BuildIndex(source, Tagger::Pretagged());
  EXPECT_EQ(index.size(), 2u);
  EXPECT_EQ(index.Lookup("ohm"), 100.0);
  EXPECT_EQ(index.Lookup("closed"), 0.0);
}

TEST(BuildIndex, FixtureCorpusPeaksAtCircuit) {
  auto index = BuildIndex(LoadCorpus(FixturePath("corpus")), Tagger::Builtin());
  EXPECT_EQ(index.document_count(), 6u);
  EXPECT_EQ(index.Ranked().front().first, "circuit");
  EXPECT_EQ(index.Lookup("circuit"), 100.0);
}

TEST(BuildIndex, Errors) {
  EXPECT_EQ(CodeOf([] { BuildIndex(Source({}), Tagger::Builtin()); }), ErrorCode::kEmptyCorpus);
  EXPECT_EQ(CodeOf([] { BuildIndex(Source({"  \n "}), Tagger::Builtin()); }),
            ErrorCode::kEmptyCorpus);
  // Sentences without any noun leave nothing to index.
  EXPECT_EQ(CodeOf([] { BuildIndex(Source({"It is. They are."}), Tagger::Builtin()); }),
            ErrorCode::kEmptyCorpus);

  CorpusSource bad = Source({"circuit_NN is_VBZ\nbroken token_NN"});
  bad.documents[0].format = InputFormat::kLines;
  try {
    BuildIndex(bad, Tagger::Pretagged());
    FAIL() << "expected a tagger failure";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kTaggerFailure);
    EXPECT_NE(std::string(e.what()).find("d0"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("broken"), std::string::npos) << e.what();
  }
}

TEST(LoadCorpus, DirectoryReadsSortedTextFiles) {
  TempDir dir;
  dir.Write("b.txt", "Second wire.");
  dir.Write("a.txt", "First circuit.");
  dir.Write("notes.md", "Ignored resistor.");
  CorpusSource source = LoadCorpus(dir.path());
  ASSERT_EQ(source.documents.size(), 2u);
  EXPECT_EQ(source.documents[0].id, "a.txt");
  EXPECT_EQ(source.documents[1].id, "b.txt");
  EXPECT_EQ(source.documents[0].format, InputFormat::kPlain);
}

TEST(LoadCorpus, SingleFileHoldsOneSentencePerLine) {
  TempDir dir;
  auto path = dir.Write("lines.txt", "A circuit\nwithout periods\n\nstill splits\n");
  CorpusSource source = LoadCorpus(path);
  ASSERT_EQ(source.documents.size(), 1u);
  auto flat = FlattenCorpus(source);
  ASSERT_EQ(flat.size(), 1u);
  EXPECT_EQ(flat[0].SentenceCount(), 3u);
  EXPECT_EQ(flat[0].paragraphs.size(), 2u);
}

TEST(LoadCorpus, EmptyInputsAreEmptyCorpus) {
  TempDir dir;
  EXPECT_EQ(CodeOf([&] { LoadCorpus(dir.path()); }), ErrorCode::kEmptyCorpus);
  auto blank = dir.Write("blank.txt", " \n\t\n");
  EXPECT_EQ(CodeOf([&] { LoadCorpus(blank); }), ErrorCode::kEmptyCorpus);
  EXPECT_EQ(CodeOf([&] { LoadCorpus(dir.path() / "missing.txt"); }), ErrorCode::kIoError);
}

TEST(CorpusAsDocument, ConcatenatesAllParagraphs) {
  CorpusSource source = Source({"One wire. Two wires.", "Three.\n\nFour."});
  FlatDocument doc = CorpusAsDocument(source);
  EXPECT_EQ(doc.id, "corpus");
  EXPECT_EQ(doc.paragraphs.size(), 3u);
  EXPECT_EQ(doc.SentenceCount(), 4u);
}

TEST(IndexFile, WritesSortedTsvWithHeader) {
  auto index = TermFrequencyIndex::FromCounts({{"voltage", 3}, {"circuit", 4}}, 2);
  EXPECT_EQ(FormatIndex(index),
            "# corpsum-index documents=2 noun_tokens=7 terms=2\n"
            "circuit\t100.0\t4\n"
            "voltage\t75.0\t3\n");
}

TEST(IndexFile, RoundTrip) {
  TempDir dir;
  auto index = TermFrequencyIndex::FromCounts({{"circuit", 37}, {"current", 26}, {"ohm", 1}}, 6);
  SaveIndex(index, dir.path() / "i.tsv");
  EXPECT_EQ(LoadIndex(dir.path() / "i.tsv"), index);
  auto single = TermFrequencyIndex::FromCounts({{"circuit", 5}});
  EXPECT_EQ(ParseIndex(FormatIndex(single)), single);
}

TEST(IndexFile, HeaderIsOptional) {
  auto index = ParseIndex("circuit\t100.0\t4\nvoltage\t75.0\t3\n");
  EXPECT_EQ(index.noun_tokens(), 7);
  EXPECT_EQ(index.Lookup("voltage"), 75.0);
}

TEST(IndexFile, RejectsMalformedFiles) {
  auto format_error = [](std::string text) {
    return CodeOf([&] { ParseIndex(text); });
  };
  EXPECT_EQ(format_error("circuit\t100.0\t4\ncircuit\t100.0\t4\n"), ErrorCode::kFormatError);
  EXPECT_EQ(format_error("circuit\t90.0\t4\nvoltage\t67.5\t3\n"), ErrorCode::kFormatError);
  EXPECT_EQ(format_error("circuit\t100.0\n"), ErrorCode::kFormatError);
  EXPECT_EQ(format_error("circuit\t100.0\t4\textra\n"), ErrorCode::kFormatError);
  EXPECT_EQ(format_error("circuit\tabc\t4\n"), ErrorCode::kFormatError);
  EXPECT_EQ(format_error("circuit\t100.0\t0\n"), ErrorCode::kFormatError);
  EXPECT_EQ(format_error("circuit\t100.0\t4\nvoltage\t70.0\t3\n"), ErrorCode::kFormatError);
  EXPECT_EQ(format_error("# corpsum-index documents=1 noun_tokens=9 terms=1\ncircuit\t100.0\t4\n"),
            ErrorCode::kFormatError);
  EXPECT_EQ(format_error(""), ErrorCode::kFormatError);
  TempDir dir;
  EXPECT_EQ(CodeOf([&] { LoadIndex(dir.path() / "none.tsv"); }), ErrorCode::kIoError);
}

TEST(IndexFile, DeterministicAcrossBuilds) {
  CorpusSource source = LoadCorpus(FixturePath("corpus"));
  EXPECT_EQ(FormatIndex(BuildIndex(source, Tagger::Builtin())),
            FormatIndex(BuildIndex(source, Tagger::Builtin())));
}

}  // namespace
}  // namespace corpsum
