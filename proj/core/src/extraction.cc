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

#include "corpsum/extraction.h"

#include <algorithm>
#include <array>
#include <cstdint>

#include "corpsum/error.h"
#include "corpsum/strings.h"

namespace corpsum {

namespace {

constexpr std::array<std::string_view, 38> kBlockTags = {
    "address", "article", "aside",  "blockquote", "body",    "caption",
    "dd",      "div",     "dl",     "dt",         "fieldset", "figcaption",
    "figure",  "footer",  "form",   "h1",         "h2",      "h3",
    "h4",      "h5",      "h6",     "head",       "header",  "hr",
    "html",    "li",      "main",   "nav",        "ol",      "pre",
    "section", "table",   "tbody",  "td",         "th",      "thead",
    "title",   "tr"};

bool IsBlockTag(std::string_view name) {
  return std::find(kBlockTags.begin(), kBlockTags.end(), name) !=
             kBlockTags.end() ||
         name == "ul";
}

bool StartsWithNoCase(std::string_view text, size_t at, std::string_view prefix) {
  if (at + prefix.size() > text.size()) return false;
  for (size_t k = 0; k < prefix.size(); ++k) {
    char c = text[at + k];
    if (IsUpper(c)) c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[k]) return false;
  }
  return true;
}

size_t FindNoCase(std::string_view text, size_t from, std::string_view needle) {
  for (size_t i = from; i + needle.size() <= text.size(); ++i) {
    if (StartsWithNoCase(text, i, needle)) return i;
  }
  return std::string_view::npos;
}

// Returns the index one past the end of the tag starting at `start` ('<').
// A tag ends at '>' outside quotes; a stray '<' or end of input also ends an
// unclosed tag so that following markup is still recognised.
size_t SkipTag(std::string_view html, size_t start) {
  char quote = 0;
  for (size_t i = start + 1; i < html.size(); ++i) {
    char c = html[i];
    if (quote != 0) {
      if (c == quote) quote = 0;
      else if (c == '<') return i;  // runaway attribute value
      continue;
    }
    if (c == '"' || c == '\'') {
      // Only treat as a quote when it opens an attribute value.
      if (html[i - 1] == '=') quote = c;
      continue;
    }
    if (c == '>') return i + 1;
    if (c == '<') return i;
  }
  return html.size();
}

void AppendUtf8(std::string &out, uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool IsTerminator(char c, bool strict_period) {
  return c == '.' || (!strict_period && (c == '?' || c == '!'));
}

// Length of a closing quote/bracket at `at`, or 0.
size_t ClosingMarkLength(std::string_view s, size_t at) {
  char c = s[at];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  // U+2019 and U+201D
  if (at + 2 < s.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(s[at + 1]) == 0x80 &&
      (static_cast<unsigned char>(s[at + 2]) == 0x99 ||
       static_cast<unsigned char>(s[at + 2]) == 0x9D)) {
    return 3;
  }
  return 0;
}

void AddParagraph(FlatDocument &doc, std::string_view text,
                  const ExtractOptions &options) {
  std::vector<std::string> sentences =
      SplitSentences(CollapseWhitespace(text), options.strict_period);
  if (!sentences.empty()) doc.paragraphs.push_back(std::move(sentences));
}

void ExtractHtml(std::string_view html, const ExtractOptions &options,
                 FlatDocument &doc) {
  std::string current;
  auto flush = [&] {
    AddParagraph(doc, DecodeEntities(current), options);
    current.clear();
  };

  size_t i = 0;
  while (i < html.size()) {
    char c = html[i];
    if (c != '<') {
      current.push_back(c);
      ++i;
      continue;
    }
    if (html.compare(i, 4, "<!--") == 0) {
      size_t end = html.find("-->", i + 4);
      i = end == std::string_view::npos ? html.size() : end + 3;
      continue;
    }
    size_t j = i + 1;
    bool closing = false;
    if (j < html.size() && html[j] == '/') {
      closing = true;
      ++j;
    }
    if (j >= html.size() ||
        !(IsAlpha(html[j]) || html[j] == '!' || html[j] == '?')) {
      // Not markup, e.g. "a < b".
      current.push_back(c);
      ++i;
      continue;
    }
    size_t name_end = j;
    while (name_end < html.size() && IsAlnum(html[name_end])) ++name_end;
    std::string name = ToLower(html.substr(j, name_end - j));
    size_t tag_end = SkipTag(html, i);

    if (!closing && (name == "script" || name == "style")) {
      size_t close = FindNoCase(html, tag_end, "</" + name);
      i = close == std::string_view::npos ? html.size() : SkipTag(html, close);
      current.push_back(' ');
      continue;
    }
    if (name == "p") {
      flush();
    } else if (IsBlockTag(name)) {
      if (options.p_only) current.push_back(' ');
      else flush();
    } else if (name == "br") {
      current.push_back(' ');
    }
    i = tag_end;
  }
  flush();
}

void ExtractPlain(std::string_view text, const ExtractOptions &options,
                  FlatDocument &doc) {
  std::string block;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (Trim(line).empty()) {
      AddParagraph(doc, block, options);
      block.clear();
    } else {
      block.append(line);
      block.push_back('\n');
    }
    pos = eol + 1;
  }
  AddParagraph(doc, block, options);
}

void ExtractLines(std::string_view text, FlatDocument &doc) {
  Paragraph paragraph;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line = CollapseWhitespace(text.substr(pos, eol - pos));
    if (line.empty()) {
      if (!paragraph.empty()) doc.paragraphs.push_back(std::move(paragraph));
      paragraph.clear();
    } else {
      paragraph.push_back(std::move(line));
    }
    pos = eol + 1;
  }
  if (!paragraph.empty()) doc.paragraphs.push_back(std::move(paragraph));
}

}  // namespace

size_t FlatDocument::SentenceCount() const {
  size_t n = 0;
  for (const Paragraph &p : paragraphs) n += p.size();
  return n;
}

std::vector<LocatedSentence> FlatDocument::Sentences() const {
  std::vector<LocatedSentence> out;
  out.reserve(SentenceCount());
  for (size_t p = 0; p < paragraphs.size(); ++p) {
    for (const std::string &s : paragraphs[p]) {
      out.push_back({out.size(), p, &s});
    }
  }
  return out;
}

std::string DecodeEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back(text[i++]);
      continue;
    }
    std::string_view name = text.substr(i + 1, semi - i - 1);
    bool decoded = true;
    if (name == "amp") out.push_back('&');
    else if (name == "lt") out.push_back('<');
    else if (name == "gt") out.push_back('>');
    else if (name == "quot") out.push_back('"');
    else if (name == "apos") out.push_back('\'');
    else if (name == "nbsp") out.push_back(' ');
    else if (name.size() >= 2 && name[0] == '#') {
      uint32_t cp = 0;
      bool hex = name[1] == 'x' || name[1] == 'X';
      std::string_view digits = name.substr(hex ? 2 : 1);
      decoded = !digits.empty();
      for (char d : digits) {
        uint32_t v;
        if (IsDigit(d)) v = static_cast<uint32_t>(d - '0');
        else if (hex && d >= 'a' && d <= 'f') v = static_cast<uint32_t>(d - 'a' + 10);
        else if (hex && d >= 'A' && d <= 'F') v = static_cast<uint32_t>(d - 'A' + 10);
        else { decoded = false; break; }
        cp = cp * (hex ? 16 : 10) + v;
        if (cp > 0x10FFFF) { decoded = false; break; }
      }
      if (decoded) {
        if (cp == 0xA0) cp = ' ';
        AppendUtf8(out, cp);
      }
    } else {
      decoded = false;
    }
    if (decoded) {
      i = semi + 1;
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

std::vector<std::string> SplitSentences(std::string_view paragraph,
                                        bool strict_period) {
  std::vector<std::string> sentences;
  auto emit = [&](std::string_view piece) {
    std::string_view trimmed = Trim(piece);
    if (!trimmed.empty()) sentences.emplace_back(trimmed);
  };

  size_t start = 0;
  size_t i = 0;
  const size_t n = paragraph.size();
  while (i < n) {
    char c = paragraph[i];
    if (!IsTerminator(c, strict_period)) {
      ++i;
      continue;
    }
    size_t end = i + 1;
    while (end < n && IsTerminator(paragraph[end], strict_period)) ++end;
    while (end < n) {
      size_t mark = ClosingMarkLength(paragraph, end);
      if (mark == 0) break;
      end += mark;
    }
    // A boundary needs whitespace or end of text after it; this alone keeps
    // decimals such as "3.5" together.
    if (end < n && !IsSpace(paragraph[end])) {
      i = end;
      continue;
    }
    // "J. Smith": a lone period after a single capital letter.
    if (!strict_period && c == '.' && end == i + 1 && i >= 1 &&
        IsUpper(paragraph[i - 1]) && (i == 1 || !IsAlpha(paragraph[i - 2])) &&
        end < n) {
      i = end;
      continue;
    }
    emit(paragraph.substr(start, end - start));
    start = end;
    i = end;
  }
  emit(paragraph.substr(start));
  return sentences;
}

FlatDocument ExtractFlatText(std::string_view input,
                             const ExtractOptions &options, std::string id) {
  FlatDocument doc;
  doc.id = std::move(id);
  switch (options.format) {
    case InputFormat::kHtml: ExtractHtml(input, options, doc); break;
    case InputFormat::kPlain: ExtractPlain(input, options, doc); break;
    case InputFormat::kLines: ExtractLines(input, doc); break;
  }
  if (doc.paragraphs.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "extraction",
                "no visible text in document" +
                    (doc.id.empty() ? std::string() : " '" + doc.id + "'"));
  }
  return doc;
}

std::string RenderPlainText(const FlatDocument &doc) {
  std::string out;
  for (size_t p = 0; p < doc.paragraphs.size(); ++p) {
    if (p > 0) out += "\n\n";
    for (size_t s = 0; s < doc.paragraphs[p].size(); ++s) {
      if (s > 0) out.push_back(' ');
      out += doc.paragraphs[p][s];
    }
  }
  out.push_back('\n');
  return out;
}

}  // namespace corpsum
