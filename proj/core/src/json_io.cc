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

#include "corpsum/json_io.h"

#include <string>

#include "corpsum/error.h"

namespace corpsum {

using nlohmann::json;

namespace {

Error Malformed(const std::string &what) {
  return Error(ErrorCode::kFormatError, "json", what);
}

void CheckSchema(const json &j, const char *record) {
  if (!j.is_object()) throw Malformed(std::string(record) + ": expected an object");
  auto it = j.find("schema");
  if (it == j.end() || !it->is_number_integer() || it->get<int>() != kJsonSchema) {
    throw Malformed(std::string(record) + ": unsupported or missing schema");
  }
}

template <typename T>
T Field(const json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end()) throw Malformed(std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception &) {
    throw Malformed(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

json FlatDocumentToJson(const FlatDocument &doc) {
  return {{"schema", kJsonSchema}, {"doc", doc.id}, {"paragraphs", doc.paragraphs}};
}

json ScoresToJson(const DocumentScore &score) {
  json sentences = json::array();
  for (const ScoredSentence &s : score.sentences) {
    sentences.push_back({{"position", s.position},
                         {"paragraph", s.paragraph},
                         {"s1", s.s1},
                         {"s2", s.s2},
                         {"sw", s.sw},
                         {"suw", s.suw},
                         {"rank", s.rank},
                         {"t_n", s.t_n},
                         {"w_n", s.w_n},
                         {"lead", s.lead}});
  }
  return {{"schema", kJsonSchema},
          {"doc", score.id},
          {"mean", score.mean},
          {"max_s1", score.max_s1},
          {"max_s2", score.max_s2},
          {"sentences", std::move(sentences)}};
}

DocumentScore ScoresFromJson(const json &j) {
  CheckSchema(j, "scores");
  DocumentScore score;
  score.id = Field<std::string>(j, "doc");
  score.mean = Field<double>(j, "mean");
  score.max_s1 = Field<double>(j, "max_s1");
  score.max_s2 = Field<double>(j, "max_s2");
  const json sentences = Field<json>(j, "sentences");
  if (!sentences.is_array()) throw Malformed("'sentences' must be an array");
  for (const json &item : sentences) {
    ScoredSentence s;
    s.position = Field<size_t>(item, "position");
    s.paragraph = Field<size_t>(item, "paragraph");
    s.s1 = Field<double>(item, "s1");
    s.s2 = Field<double>(item, "s2");
    s.sw = Field<double>(item, "sw");
    s.suw = Field<double>(item, "suw");
    s.rank = Field<double>(item, "rank");
    s.t_n = Field<size_t>(item, "t_n");
    s.w_n = Field<size_t>(item, "w_n");
    s.lead = Field<std::string>(item, "lead");
    if (s.position != score.sentences.size()) {
      throw Malformed("scores must be listed in position order");
    }
    score.sentences.push_back(std::move(s));
  }
  return score;
}

json SummaryToJson(const Summary &summary, const FlatDocument &doc,
                   const DocumentScore &score) {
  std::vector<LocatedSentence> sentences = doc.Sentences();
  json selected = json::array();
  for (size_t position : summary.selected()) {
    if (position >= sentences.size() || position >= score.sentences.size()) {
      throw Error(ErrorCode::kPositionOutOfRange, "selection",
                  "position " + std::to_string(position) + " outside document");
    }
    selected.push_back({{"position", position},
                        {"paragraph", sentences[position].paragraph},
                        {"rank", score.sentences[position].rank},
                        {"backref", summary.IsBackref(position)},
                        {"text", *sentences[position].text}});
  }
  return {{"schema", kJsonSchema},
          {"doc", summary.doc_id()},
          {"sentence_count", sentences.size()},
          {"quota", summary.quota()},
          {"threshold", summary.threshold()},
          {"selected", std::move(selected)},
          {"backref_added", summary.backref_added()}};
}

Summary SummaryFromJson(const json &j) {
  CheckSchema(j, "summary");
  const json selected = Field<json>(j, "selected");
  if (!selected.is_array()) throw Malformed("'selected' must be an array");
  std::vector<size_t> positions;
  for (const json &item : selected) {
    positions.push_back(item.is_object() ? Field<size_t>(item, "position")
                                         : item.get<size_t>());
  }
  return Summary(Field<std::string>(j, "doc"), std::move(positions),
                 Field<double>(j, "threshold"), Field<size_t>(j, "quota"),
                 Field<std::vector<size_t>>(j, "backref_added"));
}

json ReportToJson(const ResourcefulnessReport &report) {
  json entries = json::array();
  for (const DocumentMeanEntry &e : report.entries) {
    entries.push_back({{"doc", e.id}, {"mean", e.mean}, {"delta", e.delta}});
  }
  return {{"schema", kJsonSchema},
          {"corpus_mean", report.corpus_mean},
          {"entries", std::move(entries)},
          {"chosen", report.chosen ? json(*report.chosen) : json(nullptr)}};
}

json ReportToJson(const EvalReport &report) {
  return {{"schema", kJsonSchema},
          {"system_size", report.system_size},
          {"reference_size", report.reference_size},
          {"overlap", report.overlap},
          {"precision", report.precision},
          {"recall", report.recall},
          {"performance", report.performance},
          {"per_reviewer_overlap", report.per_reviewer_overlap},
          {"sys_mean", report.sys_mean},
          {"ref_mean", report.ref_mean},
          {"sys_ssd", report.sys_ssd},
          {"ref_ssd", report.ref_ssd},
          {"mean_diff", report.mean_diff},
          {"ssd_diff", report.ssd_diff}};
}

json ParseJson(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw Malformed(std::string(source) + ": " + e.what());
  }
}

}  // namespace corpsum
