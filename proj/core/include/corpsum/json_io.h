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

#ifndef CORPSUM_JSON_IO_H_
#define CORPSUM_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "corpsum/evaluation.h"
#include "corpsum/extraction.h"
#include "corpsum/scoring.h"
#include "corpsum/selection.h"

// JSON forms of the pipeline records. Every top-level object carries
// "schema": kJsonSchema. Readers throw Error(kFormatError) on missing or
// mistyped fields and on an unknown schema.
namespace corpsum {

inline constexpr int kJsonSchema = 1;

nlohmann::json FlatDocumentToJson(const FlatDocument &doc);

nlohmann::json ScoresToJson(const DocumentScore &score);
DocumentScore ScoresFromJson(const nlohmann::json &json);

// `doc` supplies sentence text, `score` the ranks.
nlohmann::json SummaryToJson(const Summary &summary, const FlatDocument &doc,
                             const DocumentScore &score);
Summary SummaryFromJson(const nlohmann::json &json);

nlohmann::json ReportToJson(const ResourcefulnessReport &report);
nlohmann::json ReportToJson(const EvalReport &report);

// Parses text, turning parse errors into Error(kFormatError).
nlohmann::json ParseJson(std::string_view text, std::string_view source);

}  // namespace corpsum

#endif  // CORPSUM_JSON_IO_H_
