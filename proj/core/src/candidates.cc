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

#include "gecsynth/candidates.h"

#include <algorithm>
#include <set>

#include "gecsynth/text.h"

namespace gecsynth {

AmbiguousPairTable::AmbiguousPairTable()
    : groups_{U"cç", U"gğ", U"iı", U"oö", U"sş", U"uü",
              U"CÇ", U"GĞ", U"Iİ", U"OÖ", U"SŞ", U"UÜ"} {}

std::u32string_view AmbiguousPairTable::group_of(char32_t cp) const {
  for (const std::u32string& group : groups_) {
    if (group.find(cp) != std::u32string::npos) return group;
  }
  return {};
}

const AmbiguousPairTable& ambiguous_pairs() {
  static const AmbiguousPairTable table;
  return table;
}

std::u32string_view spelling_alphabet() {
  static const std::u32string alphabet = U"abcçdefgğhıijklmnoöprsştuüvyz'";
  return alphabet;
}

CandidateSet deasciify_candidates(std::string_view word, const Analyzer& analyzer,
                                  const CandidateOptions& options) {
  CandidateSet result{std::string(word), {}, Generator::kDeasciifier};
  const std::u32string source = text::decode(word);
  std::vector<std::size_t> positions;
  std::vector<std::u32string_view> groups;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto group = ambiguous_pairs().group_of(source[i]);
    if (!group.empty()) {
      positions.push_back(i);
      groups.push_back(group);
    }
  }
  if (positions.empty()) return result;
  if (positions.size() > options.deasciify_cap) {
    result.capped = true;
    return result;
  }

  // Mixed-radix counter over the group members at each ambiguous position.
  std::vector<std::size_t> choice(positions.size(), 0);
  std::set<std::string> accepted;
  std::u32string variant = source;
  while (true) {
    for (std::size_t p = 0; p < positions.size(); ++p) {
      variant[positions[p]] = groups[p][choice[p]];
    }
    if (variant != source) {
      std::string candidate = text::encode(variant);
      if (analyzer.is_analyzable(candidate)) accepted.insert(std::move(candidate));
    }
    std::size_t p = 0;
    while (p < choice.size() && ++choice[p] == groups[p].size()) choice[p++] = 0;
    if (p == choice.size()) break;
  }
  result.candidates.assign(accepted.begin(), accepted.end());
  return result;
}

std::vector<std::string> single_edits(std::string_view word) {
  const std::u32string source = text::decode(word);
  const std::u32string_view alphabet = spelling_alphabet();
  std::set<std::u32string> edits;
  for (std::size_t i = 0; i + 1 < source.size(); ++i) {
    std::u32string swapped = source;
    std::swap(swapped[i], swapped[i + 1]);
    edits.insert(std::move(swapped));
  }
  for (std::size_t i = 0; i < source.size(); ++i) {
    edits.insert(source.substr(0, i) + source.substr(i + 1));
  }
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (char32_t letter : alphabet) {
      std::u32string replaced = source;
      replaced[i] = letter;
      edits.insert(std::move(replaced));
    }
  }
  for (std::size_t i = 0; i <= source.size(); ++i) {
    for (char32_t letter : alphabet) {
      std::u32string inserted = source;
      inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(i), letter);
      edits.insert(std::move(inserted));
    }
  }
  edits.erase(source);
  edits.erase(std::u32string());

  std::vector<std::string> out;
  out.reserve(edits.size());
  for (const std::u32string& edit : edits) out.push_back(text::encode(edit));
  std::sort(out.begin(), out.end());
  return out;
}

CandidateSet spell_candidates(std::string_view word, const Analyzer& analyzer) {
  CandidateSet result{std::string(word), {}, Generator::kSpellChecker};
  for (std::string& candidate : single_edits(word)) {
    if (analyzer.is_analyzable(candidate)) {
      result.candidates.push_back(std::move(candidate));
    }
  }
  return result;
}

Resolution resolve(std::string_view word, const Analyzer& analyzer,
                   const CandidateOptions& options) {
  if (word.empty() || analyzer.is_analyzable(word)) return {};
  const CandidateSet deasciified = deasciify_candidates(word, analyzer, options);
  if (deasciified.capped) return {std::nullopt, true};
  const auto make_entry = [&](const std::string& correction, Provenance provenance) {
    return SpellingEntry{{std::string(word)}, {correction}, provenance, 0};
  };
  if (deasciified.candidates.size() == 1) {
    return {make_entry(deasciified.candidates.front(), Provenance::kDeasciifier)};
  }
  if (!deasciified.candidates.empty()) return {};
  const CandidateSet spelled = spell_candidates(word, analyzer);
  if (spelled.candidates.size() == 1) {
    return {make_entry(spelled.candidates.front(), Provenance::kSpellChecker)};
  }
  return {};
}

std::optional<SpellingEntry> resolve_unique(std::string_view word,
                                            const Analyzer& analyzer,
                                            const CandidateOptions& options) {
  return resolve(word, analyzer, options).entry;
}

}  // namespace gecsynth
