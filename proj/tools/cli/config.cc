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

#include "cli/config.h"

#include <algorithm>

#include "corpsum/error.h"
#include "corpsum/strings.h"

namespace corpsum::cli {

namespace {

Error BadValue(std::string_view source, size_t line, const std::string &what) {
  return Error(ErrorCode::kInvalidArgument, "cli",
               std::string(source) + ":" + std::to_string(line) + ": " + what);
}

bool ParseBool(std::string_view value, bool *out) {
  std::string v = ToLower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") *out = true;
  else if (v == "false" || v == "0" || v == "no" || v == "off") *out = false;
  else return false;
  return true;
}

std::string Unquote(std::string_view value) {
  if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
      value.back() == value.front()) {
    value = value.substr(1, value.size() - 2);
  }
  return std::string(value);
}

}  // namespace

TaggerMode Config::tagger_mode() const {
  return tagger == "pretagged" ? TaggerMode::kPretagged : TaggerMode::kBuiltin;
}

void Config::Validate() const {
  auto fail = [](const std::string &what) {
    throw Error(ErrorCode::kInvalidArgument, "cli", what);
  };
  if (!(ratio > 0.0 && ratio <= 1.0)) fail("ratio must be in (0, 1]");
  if (!(backref_factor > 0.0 && backref_factor <= 1.0)) {
    fail("backref-factor must be in (0, 1]");
  }
  if (quota && *quota == 0) fail("quota must be at least 1");
  if (tagger != "builtin" && tagger != "pretagged") {
    fail("tagger must be 'builtin' or 'pretagged'");
  }
  if (!(majority >= 0.0 && majority < 1.0)) fail("majority-threshold must be in [0, 1)");
}

void ApplyConfigText(std::string_view text, std::string_view source, Config &config) {
  size_t pos = 0;
  size_t line_no = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#' || line.front() == '[') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw BadValue(source, line_no, "expected key = value");
    std::string key = ToLower(Trim(line.substr(0, eq)));
    std::replace(key.begin(), key.end(), '_', '-');
    std::string value = Unquote(Trim(line.substr(eq + 1)));

    auto real = [&] {
      auto v = ParseDouble(value);
      if (!v) throw BadValue(source, line_no, key + ": expected a number");
      return *v;
    };
    auto flag = [&] {
      bool b = false;
      if (!ParseBool(value, &b)) throw BadValue(source, line_no, key + ": expected a boolean");
      return b;
    };
    if (key == "ratio") {
      config.ratio = real();
    } else if (key == "quota") {
      auto v = ParseInteger(value);
      if (!v || *v < 1) throw BadValue(source, line_no, "quota: expected a positive integer");
      config.quota = static_cast<size_t>(*v);
    } else if (key == "backref-factor") {
      config.backref_factor = real();
    } else if (key == "connectives") {
      config.connectives_file = value;
    } else if (key == "tagger") {
      config.tagger = value;
    } else if (key == "lexicon") {
      config.lexicon = value;
    } else if (key == "strict-period") {
      config.strict_period = flag();
    } else if (key == "p-only") {
      config.p_only = flag();
    } else if (key == "majority-threshold") {
      config.majority = real();
    } else if (key == "format") {
      config.format = value;
    } else {
      throw BadValue(source, line_no, "unknown key '" + key + "'");
    }
  }
}

void ApplyConfigFile(const std::filesystem::path &path, Config &config) {
  ApplyConfigText(ReadFile(path), path.string(), config);
}

std::set<std::string> ReadConnectives(const std::filesystem::path &path) {
  std::set<std::string> words;
  const std::string text = ReadFile(path);
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view word = Trim(std::string_view(text).substr(pos, eol - pos));
    pos = eol + 1;
    if (word.empty() || word.front() == '#') continue;
    words.insert(ToLower(word));
  }
  if (words.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cli",
                "connectives file " + path.string() + " is empty");
  }
  return words;
}

}  // namespace corpsum::cli
