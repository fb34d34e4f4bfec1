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

#ifndef GECSYNTH_LEXICON_H_
#define GECSYNTH_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gecsynth {

using TokenSeq = std::vector<std::string>;

enum class Provenance { kManual, kDeasciifier, kSpellChecker, kLlm };

std::string_view to_string(Provenance provenance);
std::optional<Provenance> parse_provenance(std::string_view name);

// Longest key (in tokens) accepted on either side of an entry.
inline constexpr std::size_t kMaxKeyTokens = 5;

struct SpellingEntry {
  TokenSeq incorrect;
  TokenSeq correct;
  Provenance provenance = Provenance::kManual;
  std::uint32_t iteration = 0;

  friend bool operator==(const SpellingEntry&, const SpellingEntry&) = default;
};

// Empty when the entry is well formed, otherwise the reason it is not.
std::optional<std::string> validate(const SpellingEntry& entry);

struct DictionaryMatch {
  const SpellingEntry* entry = nullptr;
  std::size_t length = 0;
  // The key matched only after Turkish case folding.
  bool case_folded = false;
};

struct MergeResult;

// Incorrect -> correct pairs keyed by the space-joined incorrect tokens.
// The first entry seen for a key is kept; later ones count as conflicts.
class SpellingDictionary {
 public:
  SpellingDictionary() = default;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool contains(std::string_view key) const;
  const SpellingEntry* find(std::string_view key) const;
  std::size_t max_key_tokens() const { return max_key_tokens_; }

  // Canonical order: byte-lexicographic by key.
  const std::map<std::string, SpellingEntry, std::less<>>& entries() const {
    return entries_;
  }

  enum class InsertStatus { kAdded, kConflict, kRejected };
  InsertStatus insert(SpellingEntry entry);

  // Copy-on-write merge: *this is unchanged.
  MergeResult merge(std::span<const SpellingEntry> batch) const;

  // Longest exact key starting at tokens[start]. When no exact key matches,
  // retries with case-folded keys.
  std::optional<DictionaryMatch> lookup_longest(
      std::span<const std::string> tokens, std::size_t start) const;

 private:
  std::map<std::string, SpellingEntry, std::less<>> entries_;
  // folded key -> smallest original key with that folding
  std::map<std::string, std::string, std::less<>> folded_;
  std::size_t max_key_tokens_ = 0;
};

struct MergeResult {
  SpellingDictionary dictionary;
  std::size_t added = 0;
  std::size_t conflicts = 0;
  std::size_t rejected = 0;
};

struct RowIssue {
  std::size_t line = 0;
  std::string message;
};

struct DictionaryLoad {
  SpellingDictionary dictionary;
  std::vector<RowIssue> conflicts;  // duplicate keys; first row kept
  std::vector<RowIssue> rejected;   // malformed rows, skipped
};

// `incorrect<TAB>correct<TAB>provenance<TAB>iteration` per line.
DictionaryLoad read_dictionary(std::istream& in);
DictionaryLoad load_dictionary(const std::filesystem::path& path);
void write_dictionary(const SpellingDictionary& dictionary, std::ostream& out);
void save_dictionary(const SpellingDictionary& dictionary,
                     const std::filesystem::path& path);

}  // namespace gecsynth

#endif  // GECSYNTH_LEXICON_H_
