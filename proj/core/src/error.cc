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

#include "corpsum/error.h"

namespace corpsum {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyCorpus: return "empty corpus";
    case ErrorCode::kTaggerFailure: return "tagger failure";
    case ErrorCode::kFormatError: return "format error";
    case ErrorCode::kIoError: return "io error";
    case ErrorCode::kEmptyDocument: return "empty document";
    case ErrorCode::kPretaggedFormat: return "pretagged format error";
    case ErrorCode::kDegenerateInput: return "degenerate input";
    case ErrorCode::kPositionOutOfRange: return "position out of range";
    case ErrorCode::kInvalidSummary: return "invalid summary";
    case ErrorCode::kEmptyReference: return "empty reference";
    case ErrorCode::kRangeError: return "range error";
    case ErrorCode::kInvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, std::string module, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      module_(std::move(module)) {}

}  // namespace corpsum
