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

#include "corpsum/linguistic.h"

#include <array>

#include "corpsum/error.h"
#include "corpsum/strings.h"
#include "lexicon_data.h"

namespace corpsum {

namespace {

struct TagLabel {
  Tag tag;
  std::string_view name;
};

constexpr std::array<TagLabel, 20> kTagLabels = {{
    {Tag::kDT, "DT"},   {Tag::kJJ, "JJ"},   {Tag::kNN, "NN"},
    {Tag::kNNS, "NNS"}, {Tag::kNNP, "NNP"}, {Tag::kNNPS, "NNPS"},
    {Tag::kIN, "IN"},   {Tag::kVB, "VB"},   {Tag::kVBZ, "VBZ"},
    {Tag::kVBP, "VBP"}, {Tag::kVBD, "VBD"}, {Tag::kVBN, "VBN"},
    {Tag::kVBG, "VBG"}, {Tag::kMD, "MD"},   {Tag::kCC, "CC"},
    {Tag::kWRB, "WRB"}, {Tag::kPRP, "PRP"}, {Tag::kRB, "RB"},
    {Tag::kCD, "CD"},   {Tag::kOther, "X"},
}};

// Opening marks split off the front of a word, closing marks off the back.
bool IsOpeningMark(std::string_view s, size_t at, size_t *len) {
  char c = s[at];
  if (c == '"' || c == '\'' || c == '(' || c == '[' || c == '{') {
    *len = 1;
    return true;
  }
  // U+2018 and U+201C
  if (at + 2 < s.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(s[at + 1]) == 0x80 &&
      (static_cast<unsigned char>(s[at + 2]) == 0x98 ||
       static_cast<unsigned char>(s[at + 2]) == 0x9C)) {
    *len = 3;
    return true;
  }
  return false;
}

// Checks for a closing mark that ends at `end` (exclusive).
bool IsClosingMark(std::string_view s, size_t end, size_t *len) {
  char c = s[end - 1];
  static constexpr std::string_view kClosers = ".,;:!?\"')]}";
  if (kClosers.find(c) != std::string_view::npos) {
    *len = 1;
    return true;
  }
  // U+2019 and U+201D
  if (end >= 3 && static_cast<unsigned char>(s[end - 3]) == 0xE2 &&
      static_cast<unsigned char>(s[end - 2]) == 0x80 &&
      (static_cast<unsigned char>(c) == 0x99 ||
       static_cast<unsigned char>(c) == 0x9D)) {
    *len = 3;
    return true;
  }
  return false;
}

bool IsNumeric(std::string_view word) {
  bool digit = false;
  for (char c : word) {
    if (IsDigit(c)) digit = true;
    else if (c != '.' && c != ',' && c != '%' && c != '-' && c != '+') return false;
  }
  return digit;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Returns the end of an NP starting at `i`, or npos.
size_t MatchNounPhrase(const std::vector<Token> &tokens, size_t i, size_t limit) {
  if (i < limit && tokens[i].tag == Tag::kDT) ++i;
  while (i < limit && tokens[i].tag == Tag::kJJ) ++i;
  size_t nouns = i;
  while (i < limit && IsNoun(tokens[i].tag)) ++i;
  return i == nouns ? std::string_view::npos : i;
}

// True if tokens[begin, limit) is exactly NP (IN NP)*.
bool MatchesSubject(const std::vector<Token> &tokens, size_t begin, size_t limit) {
  size_t i = MatchNounPhrase(tokens, begin, limit);
  while (i != std::string_view::npos && i < limit) {
    if (tokens[i].tag != Tag::kIN) return false;
    i = MatchNounPhrase(tokens, i + 1, limit);
  }
  return i == limit;
}

void FillTerms(TaggedSentence &sentence) {
  sentence.terms.clear();
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (IsNoun(sentence.tokens[i].tag)) sentence.terms.push_back(i);
  }
}

}  // namespace

std::string_view TagName(Tag tag) {
  for (const TagLabel &label : kTagLabels) {
    if (label.tag == tag) return label.name;
  }
  return "X";
}

Tag ParseTag(std::string_view label) {
  for (const TagLabel &entry : kTagLabels) {
    if (entry.name == label) return entry.tag;
  }
  return Tag::kOther;
}

size_t TaggedSentence::WordCount() const {
  size_t n = 0;
  for (const Token &t : tokens) {
    if (t.tag != Tag::kOther || HasWordCharacter(t.text)) ++n;
  }
  return n;
}

std::optional<size_t> TaggedSentence::SubjectVerb() const {
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (IsFiniteVerb(tokens[i].tag)) return i;
  }
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].tag == Tag::kVBG || tokens[i].tag == Tag::kVBN) return i;
  }
  return std::nullopt;
}

std::string TaggedSentence::SubjectText() const {
  std::string out;
  if (!subject) return out;
  for (size_t i = subject->begin; i < subject->end; ++i) {
    if (i > subject->begin) out.push_back(' ');
    out += tokens[i].text;
  }
  return out;
}

std::string TaggedSentence::LeadWord() const {
  for (const Token &t : tokens) {
    if (HasWordCharacter(t.text)) return ToLower(t.text);
  }
  return {};
}

std::string TaggedSentence::ToPretagged() const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i].text;
    out.push_back('_');
    out += TagName(tokens[i].tag);
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  for (const std::string &piece : SplitWhitespace(sentence)) {
    std::string_view word = piece;
    size_t len = 0;
    while (word.size() > 1 && IsOpeningMark(word, 0, &len) && len < word.size()) {
      out.emplace_back(word.substr(0, len));
      word.remove_prefix(len);
    }
    std::vector<std::string_view> trailing;
    while (word.size() > 1 && IsClosingMark(word, word.size(), &len) &&
           len < word.size()) {
      trailing.push_back(word.substr(word.size() - len));
      word.remove_suffix(len);
    }
    out.emplace_back(word);
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
      out.emplace_back(*it);
    }
  }
  return out;
}

Lexicon Lexicon::FromTsv(std::string_view tsv, std::string_view source) {
  Lexicon lexicon;
  size_t pos = 0;
  size_t line_no = 0;
  while (pos < tsv.size()) {
    size_t eol = tsv.find('\n', pos);
    if (eol == std::string_view::npos) eol = tsv.size();
    std::string_view line = tsv.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || line.front() == '#') continue;

    auto where = [&] { return std::string(source) + ":" + std::to_string(line_no); };
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 >= line.size()) {
      throw Error(ErrorCode::kFormatError, "linguistic",
                  where() + ": expected word<TAB>tag");
    }
    std::string word = ToLower(line.substr(0, tab));
    std::string_view label = Trim(line.substr(tab + 1));
    Tag tag = ParseTag(label);
    if (tag == Tag::kOther && label != "X") {
      throw Error(ErrorCode::kFormatError, "linguistic",
                  where() + ": unknown tag '" + std::string(label) + "'");
    }
    if (!lexicon.entries_.emplace(std::move(word), tag).second) {
      throw Error(ErrorCode::kFormatError, "linguistic",
                  where() + ": duplicate entry");
    }
  }
  return lexicon;
}

Lexicon Lexicon::Load(const std::filesystem::path &path) {
  return FromTsv(ReadFile(path), path.string());
}

std::shared_ptr<const Lexicon> Lexicon::Builtin() {
  static const std::shared_ptr<const Lexicon> builtin =
      std::make_shared<const Lexicon>(
          FromTsv(internal::BuiltinLexiconTsv(), "builtin lexicon"));
  return builtin;
}

std::optional<Tag> Lexicon::Find(std::string_view lowercase_word) const {
  auto it = entries_.find(std::string(lowercase_word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Tagger Tagger::Builtin(std::shared_ptr<const Lexicon> lexicon) {
  if (lexicon == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "linguistic", "null lexicon");
  }
  return Tagger(TaggerMode::kBuiltin, std::move(lexicon));
}

Tagger Tagger::Pretagged() { return Tagger(TaggerMode::kPretagged, nullptr); }

Tag Tagger::GuessTag(std::string_view word, size_t position) const {
  if (!HasWordCharacter(word)) return Tag::kOther;
  std::string lower = ToLower(word);
  if (auto known = lexicon_->Find(lower)) return *known;

  if (EndsWith(lower, "tion") || EndsWith(lower, "ness") ||
      EndsWith(lower, "ity") || EndsWith(lower, "ment")) {
    return Tag::kNN;
  }
  if (lower.size() > 3 && lower.back() == 's') {
    std::string_view stem(lower);
    stem.remove_suffix(1);
    auto singular = lexicon_->Find(stem);
    if (!singular && EndsWith(stem, "e")) {
      // boxes -> box
      singular = lexicon_->Find(stem.substr(0, stem.size() - 1));
    }
    if (singular == Tag::kNN) return Tag::kNNS;
  }
  if (lower.size() > 3 && EndsWith(lower, "ed")) return Tag::kVBD;
  if (lower.size() > 4 && EndsWith(lower, "ing")) return Tag::kVBG;
  if (lower.size() > 3 && EndsWith(lower, "ly")) return Tag::kRB;
  if (position > 0 && IsUpper(word.front())) return Tag::kNNP;
  if (IsNumeric(word)) return Tag::kCD;
  return Tag::kNN;
}

TaggedSentence Tagger::TagTokens(const std::vector<std::string> &tokens) const {
  TaggedSentence sentence;
  if (mode_ == TaggerMode::kPretagged) {
    std::string line;
    for (const std::string &t : tokens) {
      if (!line.empty()) line.push_back(' ');
      line += t;
    }
    return ParsePretagged(line);
  }
  sentence.tokens.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    sentence.tokens.push_back({tokens[i], GuessTag(tokens[i], i)});
  }
  FillTerms(sentence);
  return sentence;
}

TaggedSentence Tagger::Analyze(std::string_view sentence) const {
  if (mode_ == TaggerMode::kPretagged) {
    return ExtractSubject(ParsePretagged(sentence));
  }
  return ExtractSubject(TagTokens(Tokenize(sentence)));
}

TaggedSentence ParsePretagged(std::string_view line) {
  TaggedSentence sentence;
  for (const std::string &pair : SplitWhitespace(line)) {
    size_t sep = pair.rfind('_');
    if (sep == std::string::npos || sep == 0 || sep + 1 == pair.size()) {
      throw Error(ErrorCode::kPretaggedFormat, "linguistic",
                  "token '" + pair + "' is not of the form word_TAG");
    }
    sentence.tokens.push_back({pair.substr(0, sep), ParseTag(pair.substr(sep + 1))});
  }
  if (sentence.tokens.empty()) {
    throw Error(ErrorCode::kPretaggedFormat, "linguistic", "empty pretagged sentence");
  }
  FillTerms(sentence);
  return sentence;
}

TaggedSentence ExtractSubject(TaggedSentence tagged) {
  tagged.subject.reset();
  std::optional<size_t> verb = tagged.SubjectVerb();
  if (!verb || *verb == 0) return tagged;
  for (size_t begin = 0; begin < *verb; ++begin) {
    if (MatchesSubject(tagged.tokens, begin, *verb)) {
      tagged.subject = Span{begin, *verb};
      break;
    }
  }
  return tagged;
}

}  // namespace corpsum
