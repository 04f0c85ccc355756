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

#ifndef CORPSUM_STRINGS_H_
#define CORPSUM_STRINGS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Small ASCII-oriented string helpers shared by the pipeline stages. Bytes
// outside ASCII are passed through untouched, which keeps UTF-8 intact.
namespace corpsum {

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline bool IsDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAlpha(char c) { return IsUpper(c) || IsLower(c); }
inline bool IsAlnum(char c) { return IsAlpha(c) || IsDigit(c); }

std::string_view Trim(std::string_view s);
std::string ToLower(std::string_view s);

// Splits on runs of ASCII whitespace; never yields empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view s);

// Collapses whitespace runs to one space and trims both ends.
std::string CollapseWhitespace(std::string_view s);

// True if any byte is an ASCII letter or digit, or is part of a multi-byte
// UTF-8 sequence (treated as a letter).
bool HasWordCharacter(std::string_view s);

// Shortest decimal text that parses back to the same double; always contains
// a '.' or exponent so it reads as a real ("100.0", not "100").
std::string FormatDouble(double value);
std::optional<double> ParseDouble(std::string_view text);
std::optional<long long> ParseInteger(std::string_view text);

// Whole-file read/write. Paths of "-" mean standard input/output.
std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, std::string_view contents);

}  // namespace corpsum

#endif  // CORPSUM_STRINGS_H_
