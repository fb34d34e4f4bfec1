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

#ifndef GECSYNTH_CANDIDATES_H_
#define GECSYNTH_CANDIDATES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gecsynth/lexicon.h"
#include "gecsynth/morphology.h"

namespace gecsynth {

enum class Generator { kDeasciifier, kSpellChecker };

struct CandidateSet {
  std::string source;
  std::vector<std::string> candidates;  // distinct, sorted, all analyzable
  Generator generator = Generator::kDeasciifier;
  // Set when the deasciifier skipped the word for having too many ambiguous
  // positions; candidates is then empty.
  bool capped = false;
};

// Characters typed interchangeably on ASCII keyboards: {c,ç} {g,ğ} {i,ı}
// {o,ö} {s,ş} {u,ü} and their upper-case counterparts.
class AmbiguousPairTable {
 public:
  AmbiguousPairTable();

  // Members of the group containing cp, or empty if cp is unambiguous.
  std::u32string_view group_of(char32_t cp) const;
  const std::vector<std::u32string>& groups() const { return groups_; }

 private:
  std::vector<std::u32string> groups_;
};

const AmbiguousPairTable& ambiguous_pairs();

inline constexpr std::size_t kDefaultDeasciifyCap = 12;

// The 29-letter Turkish alphabet followed by the apostrophe.
std::u32string_view spelling_alphabet();

struct CandidateOptions {
  std::size_t deasciify_cap = kDefaultDeasciifyCap;
};

// Every variant of `word` obtained by swapping characters within their
// ambiguity group, minus `word` itself, filtered by the analyzer.
CandidateSet deasciify_candidates(std::string_view word, const Analyzer& analyzer,
                                  const CandidateOptions& options = {});

// All strings at Damerau-Levenshtein distance exactly one from `word`
// (transposition, deletion, substitution, insertion over the spelling
// alphabet), sorted and unfiltered.
std::vector<std::string> single_edits(std::string_view word);

// single_edits filtered by the analyzer.
CandidateSet spell_candidates(std::string_view word, const Analyzer& analyzer);

struct Resolution {
  std::optional<SpellingEntry> entry;
  bool capped = false;
};

// Corrects a non-analyzable word when exactly one candidate survives. The
// deasciifier runs first; the spell checker is consulted only when the
// deasciifier has no candidate at all. Analyzable words resolve to nothing.
Resolution resolve(std::string_view word, const Analyzer& analyzer,
                   const CandidateOptions& options = {});

std::optional<SpellingEntry> resolve_unique(std::string_view word,
                                            const Analyzer& analyzer,
                                            const CandidateOptions& options = {});

}  // namespace gecsynth

#endif  // GECSYNTH_CANDIDATES_H_
