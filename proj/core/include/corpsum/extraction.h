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

#ifndef CORPSUM_EXTRACTION_H_
#define CORPSUM_EXTRACTION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace corpsum {

// How raw document bytes are interpreted.
//   kHtml  - tolerant tag stripping; <p> and block tags separate paragraphs.
//   kPlain - flat text; blank lines separate paragraphs.
//   kLines - one sentence per line, blank lines separate paragraphs. Used for
//            pre-tagged input and sentence-per-line corpora.
enum class InputFormat { kHtml, kPlain, kLines };

struct ExtractOptions {
  InputFormat format = InputFormat::kHtml;
  // Only <p> separates paragraphs; other block tags are stripped like inline
  // tags (with a space so words do not glue together).
  bool p_only = false;
  // Split on '.' alone, without the single-initial guard.
  bool strict_period = false;
};

using Paragraph = std::vector<std::string>;

struct LocatedSentence {
  size_t position;   // global 0-based index in document order
  size_t paragraph;  // 0-based paragraph index
  const std::string *text;
};

// A document reduced to ordered paragraphs of ordered sentences. Every
// sentence is tag-free, whitespace-collapsed and non-empty.
struct FlatDocument {
  std::string id;
  std::vector<Paragraph> paragraphs;

  size_t SentenceCount() const;
  std::vector<LocatedSentence> Sentences() const;

  friend bool operator==(const FlatDocument &, const FlatDocument &) = default;
};

// Throws Error(kEmptyDocument) when no visible text survives.
FlatDocument ExtractFlatText(std::string_view input,
                             const ExtractOptions &options = {},
                             std::string id = {});

std::vector<std::string> SplitSentences(std::string_view paragraph,
                                        bool strict_period = false);

// Decodes &amp; &lt; &gt; &quot; &apos; &nbsp; and numeric references.
// Unknown entities are left as written.
std::string DecodeEntities(std::string_view text);

// Paragraphs separated by a blank line, sentences by a single space. The
// result re-extracts (kPlain) to an identical document.
std::string RenderPlainText(const FlatDocument &doc);

}  // namespace corpsum

#endif  // CORPSUM_EXTRACTION_H_
