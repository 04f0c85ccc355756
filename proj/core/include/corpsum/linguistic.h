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

#ifndef CORPSUM_LINGUISTIC_H_
#define CORPSUM_LINGUISTIC_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace corpsum {

// Closed subset of the Penn Treebank tagset. Everything else, punctuation
// included, is kOther (written "X").
enum class Tag : uint8_t {
  kDT, kJJ, kNN, kNNS, kNNP, kNNPS, kIN, kVB, kVBZ, kVBP, kVBD, kVBN, kVBG,
  kMD, kCC, kWRB, kPRP, kRB, kCD, kOther,
};

std::string_view TagName(Tag tag);
// Unknown labels map to kOther.
Tag ParseTag(std::string_view label);

inline bool IsNoun(Tag t) {
  return t == Tag::kNN || t == Tag::kNNS || t == Tag::kNNP || t == Tag::kNNPS;
}
// Verbs that delimit a subject in the first pass.
inline bool IsFiniteVerb(Tag t) {
  return t == Tag::kVB || t == Tag::kVBZ || t == Tag::kVBP ||
         t == Tag::kVBD || t == Tag::kMD;
}
inline bool IsVerb(Tag t) {
  return IsFiniteVerb(t) || t == Tag::kVBG || t == Tag::kVBN;
}

struct Token {
  std::string text;
  Tag tag = Tag::kOther;

  friend bool operator==(const Token &, const Token &) = default;
};

// Half-open token range [begin, end).
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  friend bool operator==(const Span &, const Span &) = default;
};

struct TaggedSentence {
  std::vector<Token> tokens;
  std::optional<Span> subject;
  // Ascending indices of noun-tagged tokens.
  std::vector<size_t> terms;

  // Number of word tokens: tokens that are not bare punctuation.
  size_t WordCount() const;
  // Index of the first verb that bounds the subject, if any.
  std::optional<size_t> SubjectVerb() const;
  std::string SubjectText() const;
  // Case-folded first word token, used for connective matching.
  std::string LeadWord() const;
  // "word_TAG word_TAG ..." on one line.
  std::string ToPretagged() const;

  friend bool operator==(const TaggedSentence &, const TaggedSentence &) = default;
};

// Whitespace tokenisation with leading/trailing punctuation split off.
// Internal hyphens and apostrophes stay inside the word.
std::vector<std::string> Tokenize(std::string_view sentence);

// Word -> most frequent tag. Keys are lowercase.
class Lexicon {
 public:
  Lexicon() = default;

  // TSV "word<TAB>tag". Blank and '#' lines are skipped. Throws
  // Error(kFormatError) on malformed or duplicate lines.
  static Lexicon FromTsv(std::string_view tsv, std::string_view source = "lexicon");
  static Lexicon Load(const std::filesystem::path &path);
  // The lexicon compiled into the library.
  static std::shared_ptr<const Lexicon> Builtin();

  std::optional<Tag> Find(std::string_view lowercase_word) const;
  size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, Tag> entries_;
};

enum class TaggerMode { kBuiltin, kPretagged };

// Either the lexicon+suffix tagger or a passthrough for "word_TAG" input
// produced by an external tagger. Immutable and safe to share.
class Tagger {
 public:
  static Tagger Builtin(std::shared_ptr<const Lexicon> lexicon = Lexicon::Builtin());
  static Tagger Pretagged();

  TaggerMode mode() const { return mode_; }

  // Assigns tags and terms; the subject is left empty. In pretagged mode the
  // tokens must be "word_TAG" pairs, otherwise Error(kPretaggedFormat).
  TaggedSentence TagTokens(const std::vector<std::string> &tokens) const;

  // Tokenise (or split pairs), tag and extract the subject.
  TaggedSentence Analyze(std::string_view sentence) const;

  // Tag the builtin rules give `word` at sentence index `position`.
  Tag GuessTag(std::string_view word, size_t position) const;

 private:
  Tagger(TaggerMode mode, std::shared_ptr<const Lexicon> lexicon)
      : mode_(mode), lexicon_(std::move(lexicon)) {}

  TaggerMode mode_;
  std::shared_ptr<const Lexicon> lexicon_;
};

// Parses a "word_TAG word_TAG" line; the tag is the text after the last '_'.
TaggedSentence ParsePretagged(std::string_view line);

// Fills `subject` with the longest span NP (IN NP)* ending immediately before
// the first verb, where NP = DT? JJ* (NN|NNS|NNP|NNPS)+. Tokens and tags are
// not modified.
TaggedSentence ExtractSubject(TaggedSentence tagged);

}  // namespace corpsum

#endif  // CORPSUM_LINGUISTIC_H_
