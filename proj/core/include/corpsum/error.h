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

#ifndef CORPSUM_ERROR_H_
#define CORPSUM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace corpsum {

enum class ErrorCode {
  kEmptyCorpus,
  kTaggerFailure,
  kFormatError,
  kIoError,
  kEmptyDocument,
  kPretaggedFormat,
  kDegenerateInput,
  kPositionOutOfRange,
  kInvalidSummary,
  kEmptyReference,
  kRangeError,
  kInvalidArgument,
};

// Stable lowercase name for an error code, e.g. "empty corpus".
std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as corpsum::Error. The module string
// names the pipeline stage that raised it ("corpus", "extraction", ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string &message);

  ErrorCode code() const { return code_; }
  const std::string &module() const { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace corpsum

#endif  // CORPSUM_ERROR_H_
