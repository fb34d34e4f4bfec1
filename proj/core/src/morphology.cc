// Copyright 2026 The gecsynth Authors.
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

#include "gecsynth/morphology.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "gecsynth/corpus.h"
#include "gecsynth/error.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

constexpr std::u32string_view kFrontVowels = U"eiöü";
constexpr std::u32string_view kBackVowels = U"aıou";
constexpr std::u32string_view kRoundedVowels = U"oöuü";
constexpr std::u32string_view kVoiceless = U"çfhkpsşt";

bool is_vowel(char32_t cp) {
  return kFrontVowels.find(cp) != std::u32string_view::npos ||
         kBackVowels.find(cp) != std::u32string_view::npos;
}

char32_t last_vowel(std::u32string_view stem) {
  for (auto it = stem.rbegin(); it != stem.rend(); ++it) {
    if (is_vowel(*it)) return *it;
  }
  return 0;
}

bool contains(std::u32string_view set, char32_t cp) {
  return cp != 0 && set.find(cp) != std::u32string_view::npos;
}

StemPredicate make_atom(std::string_view atom) {
  if (atom == "any") return [](std::u32string_view) { return true; };
  if (atom == "vowel-final") {
    return [](std::u32string_view s) { return !s.empty() && is_vowel(s.back()); };
  }
  if (atom == "consonant-final") {
    return [](std::u32string_view s) {
      return !s.empty() && text::is_letter(s.back()) && !is_vowel(s.back());
    };
  }
  if (atom == "voiceless-final") {
    return [](std::u32string_view s) {
      return !s.empty() && contains(kVoiceless, s.back());
    };
  }
  if (atom == "voiced-final") {
    return [](std::u32string_view s) {
      return !s.empty() && text::is_letter(s.back()) &&
             !contains(kVoiceless, s.back());
    };
  }
  if (atom == "front") {
    return [](std::u32string_view s) { return contains(kFrontVowels, last_vowel(s)); };
  }
  if (atom == "back") {
    return [](std::u32string_view s) { return contains(kBackVowels, last_vowel(s)); };
  }
  if (atom == "rounded") {
    return [](std::u32string_view s) { return contains(kRoundedVowels, last_vowel(s)); };
  }
  if (atom == "unrounded") {
    return [](std::u32string_view s) {
      const char32_t v = last_vowel(s);
      return v != 0 && !contains(kRoundedVowels, v);
    };
  }
  throw ConfigError("unknown suffix predicate '" + std::string(atom) + "'");
}

constexpr const char* kDefaultRules =
    "# plural\n"
    "ler\tfront\n"
    "lar\tback\n"
    "# dative\n"
    "e\tfront+consonant-final\n"
    "a\tback+consonant-final\n"
    "ye\tfront+vowel-final\n"
    "ya\tback+vowel-final\n"
    "# locative\n"
    "de\tfront+voiced-final\n"
    "da\tback+voiced-final\n"
    "te\tfront+voiceless-final\n"
    "ta\tback+voiceless-final\n"
    "# ablative\n"
    "den\tfront+voiced-final\n"
    "dan\tback+voiced-final\n"
    "ten\tfront+voiceless-final\n"
    "tan\tback+voiceless-final\n"
    "# accusative\n"
    "i\tfront+unrounded+consonant-final\n"
    "ı\tback+unrounded+consonant-final\n"
    "ü\tfront+rounded+consonant-final\n"
    "u\tback+rounded+consonant-final\n";

}  // namespace

StemPredicate make_stem_predicate(std::string_view name) {
  std::vector<StemPredicate> atoms;
  std::size_t begin = 0;
  while (begin <= name.size()) {
    std::size_t end = name.find('+', begin);
    if (end == std::string_view::npos) end = name.size();
    atoms.push_back(make_atom(name.substr(begin, end - begin)));
    begin = end + 1;
  }
  if (atoms.size() == 1) return std::move(atoms.front());
  return [atoms = std::move(atoms)](std::u32string_view stem) {
    return std::all_of(atoms.begin(), atoms.end(),
                       [stem](const StemPredicate& p) { return p(stem); });
  };
}

AnalyzabilityOracle::AnalyzabilityOracle(std::vector<std::string> words,
                                         std::vector<SuffixRule> rules,
                                         std::size_t max_depth)
    : rules_(std::move(rules)), max_depth_(max_depth) {
  for (const std::string& word : words) {
    std::string folded = text::fold(normalize(word));
    if (!folded.empty()) lexicon_.insert(std::move(folded));
  }
  suffixes_.reserve(rules_.size());
  for (const SuffixRule& rule : rules_) {
    suffixes_.push_back(text::decode(text::fold(rule.suffix)));
  }
}

bool AnalyzabilityOracle::is_analyzable(std::string_view word) const {
  const std::string folded = text::fold(word);
  if (folded.empty()) return false;
  if (lexicon_.contains(folded)) return true;
  return derivable(text::decode(folded), max_depth_);
}

bool AnalyzabilityOracle::derivable(std::u32string_view word,
                                    std::size_t depth) const {
  if (depth == 0) return false;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const std::u32string& suffix = suffixes_[r];
    if (suffix.empty() || word.size() <= suffix.size() ||
        !word.ends_with(suffix)) {
      continue;
    }
    const std::u32string_view stem = word.substr(0, word.size() - suffix.size());
    if (!rules_[r].applies(stem)) continue;
    if (lexicon_.contains(text::encode(stem)) || derivable(stem, depth - 1)) {
      return true;
    }
  }
  return false;
}

std::vector<SuffixRule> read_suffix_rules(std::istream& in) {
  std::vector<SuffixRule> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw DataError("expected suffix<TAB>predicate", line_no);
    }
    std::string suffix = normalize(line.substr(0, tab));
    std::string predicate = line.substr(tab + 1);
    try {
      rules.push_back({suffix, predicate, make_stem_predicate(predicate)});
    } catch (const ConfigError& e) {
      throw DataError(e.what(), line_no);
    }
  }
  return rules;
}

std::vector<SuffixRule> load_suffix_rules(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read suffix rules " + path.string());
  return read_suffix_rules(in);
}

std::vector<SuffixRule> default_suffix_rules() {
  std::istringstream in(kDefaultRules);
  return read_suffix_rules(in);
}

AnalyzabilityOracle load_lexicon(const std::filesystem::path& path,
                                 std::vector<SuffixRule> rules,
                                 std::size_t max_depth) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read lexicon " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string word = normalize(line);
    if (!word.empty()) words.push_back(std::move(word));
  }
  return AnalyzabilityOracle(std::move(words), std::move(rules), max_depth);
}

}  // namespace gecsynth
