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

#ifndef GECSYNTH_MORPHOLOGY_H_
#define GECSYNTH_MORPHOLOGY_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace gecsynth {

// Decides whether a surface word is well formed. Candidate generators accept
// only words that pass. Implementations must be pure and thread-safe.
class Analyzer {
 public:
  virtual ~Analyzer() = default;
  virtual bool is_analyzable(std::string_view word) const = 0;
};

using StemPredicate = std::function<bool(std::u32string_view stem)>;

// Builds a predicate from a name such as "front+voiceless-final". Atoms:
// any, vowel-final, consonant-final, voiced-final, voiceless-final, front,
// back, rounded, unrounded. Atoms joined by '+' must all hold. Throws
// ConfigError on an unknown atom.
StemPredicate make_stem_predicate(std::string_view name);

struct SuffixRule {
  std::string suffix;
  std::string predicate_name;
  StemPredicate applies;
};

inline constexpr std::size_t kDefaultSuffixDepth = 4;

// Wordlist plus suffix rules. A word is analyzable when it is a listed surface
// form, or a listed stem followed by up to `max_depth` suffixes where each
// suffix's predicate holds for everything to its left.
class AnalyzabilityOracle final : public Analyzer {
 public:
  AnalyzabilityOracle() = default;
  AnalyzabilityOracle(std::vector<std::string> words,
                      std::vector<SuffixRule> rules,
                      std::size_t max_depth = kDefaultSuffixDepth);

  bool is_analyzable(std::string_view word) const override;

  std::size_t lexicon_size() const { return lexicon_.size(); }
  const std::vector<SuffixRule>& rules() const { return rules_; }
  std::size_t max_depth() const { return max_depth_; }

 private:
  bool derivable(std::u32string_view word, std::size_t depth) const;

  std::unordered_set<std::string> lexicon_;  // folded
  std::vector<SuffixRule> rules_;
  std::vector<std::u32string> suffixes_;  // decoded, parallel to rules_
  std::size_t max_depth_ = kDefaultSuffixDepth;
};

// `suffix<TAB>predicate-name` per line; '#' starts a comment line.
std::vector<SuffixRule> read_suffix_rules(std::istream& in);
std::vector<SuffixRule> load_suffix_rules(const std::filesystem::path& path);

// The small plural/case-ending set shipped in data/suffix_rules.tsv.
std::vector<SuffixRule> default_suffix_rules();

// Word-per-line lexicon. Duplicates collapse. Unreadable files throw
// ConfigError.
AnalyzabilityOracle load_lexicon(const std::filesystem::path& path,
                                 std::vector<SuffixRule> rules = {},
                                 std::size_t max_depth = kDefaultSuffixDepth);

}  // namespace gecsynth

#endif  // GECSYNTH_MORPHOLOGY_H_
