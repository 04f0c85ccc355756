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

#include "support.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <stdexcept>

#ifndef CORPSUM_FIXTURE_DIR
#error "CORPSUM_FIXTURE_DIR must point at data/fixtures"
#endif

namespace corpsum::testing {

namespace fs = std::filesystem;

fs::path FixturePath(const std::string &relative) {
  return fs::path(CORPSUM_FIXTURE_DIR) / relative;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  for (int attempt = 0; attempt < 100; ++attempt) {
    fs::path candidate = fs::temp_directory_path() /
                         ("corpsum-test-" + std::to_string(rd()) + "-" +
                          std::to_string(counter++));
    if (fs::create_directory(candidate)) {
      path_ = candidate;
      return;
    }
  }
  throw std::runtime_error("cannot create a temporary directory");
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

fs::path TempDir::Write(const std::string &name, const std::string &contents) const {
  fs::path p = path_ / name;
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << contents;
  return p;
}

uint64_t SuiteSeed(uint64_t base) {
  const char *env = std::getenv("CORPSUM_TEST_SEED");
  if (env == nullptr || *env == '\0') return base;
  return base ^ std::strtoull(env, nullptr, 10);
}

size_t Uniform(Rng &rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

double UniformReal(Rng &rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool Chance(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<GenSentence> GenDocument::Flat() const {
  std::vector<GenSentence> out;
  for (const auto &p : paragraphs) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string GenDocument::ToPretagged() const {
  std::string out;
  for (size_t p = 0; p < paragraphs.size(); ++p) {
    if (p > 0) out += "\n";
    for (const GenSentence &s : paragraphs[p]) {
      for (size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ' ';
        out += s[i].word + "_" + s[i].tag;
      }
      out += '\n';
    }
  }
  return out;
}

namespace {

const char *Pick(Rng &rng, std::initializer_list<const char *> options) {
  size_t i = Uniform(rng, 0, options.size() - 1);
  return *(options.begin() + i);
}

GenToken RandomToken(Rng &rng, size_t noun_vocab) {
  const std::string k = std::to_string(Uniform(rng, 0, noun_vocab - 1));
  const std::string j = std::to_string(Uniform(rng, 0, 9));
  switch (Uniform(rng, 0, 17)) {
    case 0: case 1: return {Pick(rng, {"the", "a", "all", "an"}), "DT"};
    case 2: return {"j" + j, "JJ"};
    case 3: case 4: case 5: return {"n" + k, "NN"};
    case 6: return {"n" + k + "s", "NNS"};
    case 7: return {"N" + k, "NNP"};
    case 8: return {"N" + k + "s", "NNPS"};
    case 9: case 10: return {Pick(rng, {"of", "in", "on", "for"}), "IN"};
    case 11: return {"v" + j + "s", "VBZ"};
    case 12: return {Pick(rng, {"is", "was", "are", "can"}),
                     Pick(rng, {"VBZ", "VBD", "VBP", "MD"})};
    case 13: return {"g" + j + "ing", Pick(rng, {"VBG", "VBN"})};
    case 14: return {Pick(rng, {"and", "or"}), "CC"};
    case 15: return {Pick(rng, {"quickly", "often"}), "RB"};
    case 16: return {Pick(rng, {"it", "they"}), "PRP"};
    default: return {Pick(rng, {",", ";", "12", "where"}), Pick(rng, {",", ":", "CD", "WRB"})};
  }
}

}  // namespace

GenDocument RandomDocument(Rng &rng, size_t max_sentences, size_t noun_vocab) {
  GenDocument doc;
  size_t n = Uniform(rng, 1, max_sentences);
  doc.paragraphs.emplace_back();
  for (size_t i = 0; i < n; ++i) {
    if (i > 0 && Chance(rng, 0.2)) doc.paragraphs.emplace_back();
    GenSentence s;
    if (Chance(rng, 0.25)) {
      s.push_back({Pick(rng, {"However", "this", "These", "also", "Moreover", "such", "that"}),
                   Pick(rng, {"RB", "DT", "JJ"})});
      if (Chance(rng, 0.5)) s.push_back({",", ","});
    }
    size_t len = Uniform(rng, 1, 14);
    for (size_t t = 0; t < len; ++t) s.push_back(RandomToken(rng, noun_vocab));
    if (Chance(rng, 0.8)) s.push_back({".", "."});
    // Keep at least one word token so the sentence is not bare punctuation.
    if (std::none_of(s.begin(), s.end(), [](const GenToken &t) {
          return std::isalnum(static_cast<unsigned char>(t.word[0]));
        })) {
      s.insert(s.begin(), {"n0", "NN"});
    }
    doc.paragraphs.back().push_back(std::move(s));
  }
  return doc;
}

std::map<std::string, int64_t> RandomCounts(Rng &rng, size_t noun_vocab, int64_t max_count) {
  std::map<std::string, int64_t> counts;
  for (size_t k = 0; k < noun_vocab; ++k) {
    if (Chance(rng, 0.75)) counts["n" + std::to_string(k)] = Uniform(rng, 1, max_count);
    if (Chance(rng, 0.4)) counts["n" + std::to_string(k) + "s"] = Uniform(rng, 1, max_count);
  }
  if (counts.empty()) counts["n0"] = 1;
  return counts;
}

std::string RandomPlainText(Rng &rng, size_t max_paragraphs) {
  std::string out;
  size_t paragraphs = Uniform(rng, 1, max_paragraphs);
  for (size_t p = 0; p < paragraphs; ++p) {
    if (p > 0) out += Chance(rng, 0.5) ? "\n\n" : "\n \n\n";
    size_t sentences = Uniform(rng, 1, 6);
    for (size_t s = 0; s < sentences; ++s) {
      if (s > 0) out += Chance(rng, 0.2) ? "\n" : " ";
      size_t words = Uniform(rng, 1, 10);
      for (size_t w = 0; w < words; ++w) {
        if (w > 0) out += Chance(rng, 0.1) ? ",  " : " ";
        if (Chance(rng, 0.08)) {
          out += std::to_string(Uniform(rng, 0, 99)) + "." + std::to_string(Uniform(rng, 0, 9));
          continue;
        }
        size_t letters = Uniform(rng, 2, 8);
        for (size_t l = 0; l < letters; ++l) {
          char c = static_cast<char>('a' + Uniform(rng, 0, 25));
          if (w == 0 && l == 0) c = static_cast<char>(c - 'a' + 'A');
          out += c;
        }
      }
      out += Pick(rng, {".", ".", ".", "?", "!"});
    }
  }
  if (Chance(rng, 0.5)) out += "\n";
  return out;
}

DocumentScore RandomRanks(Rng &rng, size_t n, const std::set<std::string> &connectives) {
  std::vector<std::string> leads(connectives.begin(), connectives.end());
  leads.push_back("the");
  leads.push_back("a");
  DocumentScore score;
  score.id = "random";
  for (size_t i = 0; i < n; ++i) {
    ScoredSentence s;
    s.position = i;
    s.paragraph = i / 4;
    double r = UniformReal(rng, 0.0, 200.0);
    // Coarse values sometimes, so ties at the threshold occur.
    if (Chance(rng, 0.3)) r = std::round(r / 25.0) * 25.0;
    s.sw = r / 2;
    s.suw = r - s.sw;
    s.rank = s.sw + s.suw;
    s.s1 = s.sw;
    s.lead = Chance(rng, 0.35) ? leads[Uniform(rng, 0, leads.size() - 1)] : "the";
    score.sentences.push_back(s);
  }
  return score;
}

// ---- Oracles -------------------------------------------------------------

namespace {

char Letter(const std::string &tag) {
  if (tag == "DT") return 'D';
  if (tag == "JJ") return 'J';
  if (tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS") return 'N';
  if (tag == "IN") return 'P';
  if (tag == "VB" || tag == "VBZ" || tag == "VBP" || tag == "VBD" || tag == "MD") return 'V';
  if (tag == "VBG" || tag == "VBN") return 'G';
  return 'o';
}

bool KnownTag(const std::string &tag) {
  static const std::set<std::string> known = {
      "DT", "JJ", "NN", "NNS", "NNP", "NNPS", "IN", "VB", "VBZ", "VBP", "VBD",
      "VBN", "VBG", "MD", "CC", "WRB", "PRP", "RB", "CD"};
  return known.count(tag) > 0;
}

std::string Lower(std::string s) {
  for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::optional<std::pair<size_t, size_t>> OracleSubject(const GenSentence &sentence) {
  std::string letters;
  for (const GenToken &t : sentence) letters += Letter(t.tag);
  size_t verb = letters.find('V');
  if (verb == std::string::npos) verb = letters.find('G');
  if (verb == std::string::npos) return std::nullopt;
  static const std::regex subject("D?J*N+(PD?J*N+)*");
  for (size_t start = 0; start < verb; ++start) {
    if (std::regex_match(letters.substr(start, verb - start), subject)) {
      return std::make_pair(start, verb);
    }
  }
  return std::nullopt;
}

OracleDocument OracleScore(const std::vector<GenSentence> &sentences,
                           const std::map<std::string, int64_t> &counts) {
  int64_t max_count = 0;
  std::map<std::string, int64_t> folded;
  for (const auto &[term, count] : counts) folded[Lower(term)] += count;
  for (const auto &[term, count] : folded) max_count = std::max(max_count, count);
  auto tf = [&](const std::string &word) {
    auto it = folded.find(Lower(word));
    if (it == folded.end()) return 0.0;
    return static_cast<double>(it->second) * 100.0 / static_cast<double>(max_count);
  };

  OracleDocument doc;
  double max_s1 = 0.0, max_s2 = 0.0, total = 0.0;
  for (const GenSentence &s : sentences) {
    OracleSentence o;
    o.subject = OracleSubject(s);
    double sum = 0.0, subject_sum = 0.0;
    for (size_t i = 0; i < s.size(); ++i) {
      bool word = std::any_of(s[i].word.begin(), s[i].word.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c));
      });
      if (KnownTag(s[i].tag) || word) ++o.w_n;
      if (Letter(s[i].tag) != 'N') continue;
      ++o.t_n;
      sum += tf(s[i].word);
      if (o.subject && i >= o.subject->first && i < o.subject->second) {
        subject_sum += tf(s[i].word);
      }
    }
    o.s1 = o.w_n == 0 ? 0.0 : sum * static_cast<double>(o.t_n) / static_cast<double>(o.w_n);
    o.s2 = subject_sum;
    max_s1 = std::max(max_s1, o.s1);
    max_s2 = std::max(max_s2, o.s2);
    total += o.s1;
    doc.sentences.push_back(o);
  }
  for (OracleSentence &o : doc.sentences) {
    o.sw = max_s1 > 0 ? o.s1 / max_s1 * 100.0 : 0.0;
    o.suw = max_s2 > 0 ? o.s2 / max_s2 * 100.0 : 0.0;
    o.rank = o.sw + o.suw;
  }
  doc.mean = sentences.empty() ? 0.0 : total / static_cast<double>(sentences.size());
  return doc;
}

OracleSelection OracleSelect(const DocumentScore &score, size_t quota,
                             const std::set<std::string> &connectives, double factor) {
  std::vector<double> ranks;
  for (const ScoredSentence &s : score.sentences) ranks.push_back(s.rank);
  std::sort(ranks.begin(), ranks.end(), std::greater<>());
  OracleSelection out;
  out.threshold = ranks.at(quota - 1);
  const size_t n = score.sentences.size();
  std::vector<bool> base(n), chosen(n);
  for (size_t i = 0; i < n; ++i) {
    base[i] = chosen[i] = score.sentences[i].rank >= out.threshold;
  }
  for (size_t i = 1; i < n; ++i) {
    if (!base[i] || base[i - 1]) continue;
    if (!connectives.count(score.sentences[i].lead)) continue;
    if (score.sentences[i - 1].rank >= factor * score.sentences[i].rank) {
      chosen[i - 1] = true;
      out.backref_added.push_back(i - 1);
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (chosen[i]) out.selected.push_back(i);
  }
  return out;
}

std::set<size_t> OracleReference(const std::vector<std::set<size_t>> &extracts,
                                 size_t n_sentences) {
  std::vector<size_t> votes(n_sentences, 0);
  for (const auto &e : extracts) {
    for (size_t p : e) ++votes.at(p);
  }
  std::set<size_t> out;
  for (size_t p = 0; p < n_sentences; ++p) {
    if (2 * votes[p] > extracts.size()) out.insert(p);
  }
  return out;
}

bool Close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace corpsum::testing
