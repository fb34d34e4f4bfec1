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

#include "gecsynth/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "gecsynth/corpus.h"
#include "gecsynth/error.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

std::optional<std::string> validate_side(const TokenSeq& tokens,
                                         std::string_view side) {
  if (tokens.empty()) return std::string(side) + " side is empty";
  if (tokens.size() > kMaxKeyTokens) {
    return std::string(side) + " side has more than " +
           std::to_string(kMaxKeyTokens) + " tokens";
  }
  for (const std::string& token : tokens) {
    if (token.empty()) return std::string(side) + " side has an empty token";
    for (char32_t cp : text::decode(token)) {
      if (text::is_space(cp) || text::is_control(cp)) {
        return std::string(side) + " token contains whitespace";
      }
    }
  }
  return std::nullopt;
}

TokenSeq split_field(std::string_view field) {
  TokenSeq tokens;
  std::string normalized = normalize(field);
  std::size_t begin = 0;
  while (begin < normalized.size()) {
    std::size_t end = normalized.find(' ', begin);
    if (end == std::string::npos) end = normalized.size();
    tokens.push_back(normalized.substr(begin, end - begin));
    begin = end + 1;
  }
  return tokens;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = line.find('\t', begin);
    fields.push_back(line.substr(begin, end == std::string_view::npos
                                            ? std::string_view::npos
                                            : end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return fields;
}

}  // namespace

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kManual:
      return "manual";
    case Provenance::kDeasciifier:
      return "deasciifier";
    case Provenance::kSpellChecker:
      return "spellchecker";
    case Provenance::kLlm:
      return "llm";
  }
  return "manual";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
  if (name == "manual") return Provenance::kManual;
  if (name == "deasciifier") return Provenance::kDeasciifier;
  if (name == "spellchecker") return Provenance::kSpellChecker;
  if (name == "llm") return Provenance::kLlm;
  return std::nullopt;
}

std::optional<std::string> validate(const SpellingEntry& entry) {
  if (auto problem = validate_side(entry.incorrect, "incorrect")) return problem;
  if (auto problem = validate_side(entry.correct, "correct")) return problem;
  if (entry.incorrect == entry.correct) {
    return std::string("correction equals the incorrect side");
  }
  return std::nullopt;
}

bool SpellingDictionary::contains(std::string_view key) const {
  return entries_.find(key) != entries_.end();
}

const SpellingEntry* SpellingDictionary::find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

SpellingDictionary::InsertStatus SpellingDictionary::insert(SpellingEntry entry) {
  if (validate(entry)) return InsertStatus::kRejected;
  std::string key = join(entry.incorrect, " ");
  if (entries_.contains(key)) return InsertStatus::kConflict;
  max_key_tokens_ = std::max(max_key_tokens_, entry.incorrect.size());
  auto [slot, added] = folded_.try_emplace(text::fold(key), key);
  if (!added && key < slot->second) slot->second = key;
  entries_.emplace(std::move(key), std::move(entry));
  return InsertStatus::kAdded;
}

MergeResult SpellingDictionary::merge(std::span<const SpellingEntry> batch) const {
  MergeResult result{*this};
  for (const SpellingEntry& entry : batch) {
    switch (result.dictionary.insert(entry)) {
      case InsertStatus::kAdded:
        ++result.added;
        break;
      case InsertStatus::kConflict:
        ++result.conflicts;
        break;
      case InsertStatus::kRejected:
        ++result.rejected;
        break;
    }
  }
  return result;
}

std::optional<DictionaryMatch> SpellingDictionary::lookup_longest(
    std::span<const std::string> tokens, std::size_t start) const {
  if (start >= tokens.size() || entries_.empty()) return std::nullopt;
  const std::size_t longest =
      std::min(max_key_tokens_, tokens.size() - start);
  for (std::size_t k = longest; k >= 1; --k) {
    const std::string key = join(tokens.subspan(start, k), " ");
    if (const SpellingEntry* entry = find(key)) {
      return DictionaryMatch{entry, k, false};
    }
  }
  for (std::size_t k = longest; k >= 1; --k) {
    const std::string key = text::fold(join(tokens.subspan(start, k), " "));
    auto it = folded_.find(key);
    if (it != folded_.end()) {
      return DictionaryMatch{find(it->second), k, true};
    }
  }
  return std::nullopt;
}

DictionaryLoad read_dictionary(std::istream& in) {
  DictionaryLoad load;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      load.rejected.push_back(
          {line_no, "expected 4 tab-separated fields, got " +
                        std::to_string(fields.size())});
      continue;
    }
    if (std::any_of(fields.begin(), fields.end(),
                    [](std::string_view f) { return normalize(f).empty(); })) {
      load.rejected.push_back({line_no, "empty field"});
      continue;
    }
    const auto provenance = parse_provenance(fields[2]);
    if (!provenance) {
      load.rejected.push_back(
          {line_no, "unknown provenance '" + std::string(fields[2]) + "'"});
      continue;
    }
    std::uint32_t iteration = 0;
    const auto [ptr, ec] = std::from_chars(
        fields[3].data(), fields[3].data() + fields[3].size(), iteration);
    if (ec != std::errc() || ptr != fields[3].data() + fields[3].size()) {
      load.rejected.push_back(
          {line_no, "bad iteration '" + std::string(fields[3]) + "'"});
      continue;
    }
    SpellingEntry entry{split_field(fields[0]), split_field(fields[1]),
                        *provenance, iteration};
    if (auto problem = validate(entry)) {
      load.rejected.push_back({line_no, *problem});
      continue;
    }
    const std::string key = join(entry.incorrect, " ");
    if (load.dictionary.insert(std::move(entry)) ==
        SpellingDictionary::InsertStatus::kConflict) {
      load.conflicts.push_back(
          {line_no, "duplicate key '" + key + "'; keeping the first entry"});
    }
  }
  return load;
}

DictionaryLoad load_dictionary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read dictionary " + path.string());
  return read_dictionary(in);
}

void write_dictionary(const SpellingDictionary& dictionary, std::ostream& out) {
  for (const auto& [key, entry] : dictionary.entries()) {
    out << key << '\t' << join(entry.correct, " ") << '\t'
        << to_string(entry.provenance) << '\t' << entry.iteration << '\n';
  }
}

void save_dictionary(const SpellingDictionary& dictionary,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write dictionary " + path.string());
  write_dictionary(dictionary, out);
}

}  // namespace gecsynth
