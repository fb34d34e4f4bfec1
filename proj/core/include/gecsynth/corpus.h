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

#ifndef GECSYNTH_CORPUS_H_
#define GECSYNTH_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gecsynth {

using DocId = std::uint32_t;

struct Document {
  DocId id = 0;
  std::string text;

  friend bool operator==(const Document&, const Document&) = default;
};

// NFC, drops control characters, collapses whitespace runs to one space and
// trims. Idempotent.
std::string normalize(std::string_view raw);

// Maximal runs of letters, digits and apostrophes are one token; any other
// non-space character is a token of its own.
std::vector<std::string> tokenize_words(std::string_view text);

// Inverse of tokenize_words up to spacing: tokens joined by single spaces,
// with closing punctuation attached to the left and opening punctuation to
// the right.
std::string detokenize(std::span<const std::string> tokens);

std::string join(std::span<const std::string> tokens, std::string_view sep);

// Rule-based sentence splitter. A boundary is a run of . ! ? … followed by
// whitespace and then an uppercase letter or digit, unless the word ending in
// the terminator is a listed abbreviation.
class SentenceSplitter {
 public:
  // Uses the bundled Turkish abbreviation list.
  SentenceSplitter();
  explicit SentenceSplitter(std::set<std::string> abbreviations);

  // One abbreviation per line, e.g. "Dr." (the trailing period is optional).
  static SentenceSplitter from_file(const std::filesystem::path& path);

  std::vector<std::string> split(std::string_view text) const;

  const std::set<std::string>& abbreviations() const { return abbreviations_; }

 private:
  bool is_abbreviation(std::u32string_view word) const;

  std::set<std::string> abbreviations_;  // folded, without trailing period
};

std::vector<std::string> split_sentences(std::string_view text);

// Exact duplicates after normalization are dropped; first occurrence wins.
// Returns the normalized strings.
std::vector<std::string> dedup(std::span<const std::string> sentences);

// Folded surface word -> ascending ids of the documents containing it.
class WordIndex {
 public:
  using Postings = std::vector<DocId>;

  WordIndex() = default;

  // Returns an empty span for unknown words. Expects a folded key.
  std::span<const DocId> postings(std::string_view word) const;
  bool contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, Postings, std::less<>>& entries() const {
    return entries_;
  }

  // `word<TAB>id,id,id` per line, sorted by word.
  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static WordIndex read(std::istream& in);
  static WordIndex load(const std::filesystem::path& path);

  // Union of two indexes; postings of the same word are merged in order.
  static WordIndex merge(const WordIndex& a, const WordIndex& b);

  friend bool operator==(const WordIndex&, const WordIndex&) = default;

 private:
  friend WordIndex build_word_index(std::span<const Document>, unsigned);
  std::map<std::string, Postings, std::less<>> entries_;
};

// Every letter-bearing token of every document, folded. workers = 0 means
// one per hardware thread; the result does not depend on it.
WordIndex build_word_index(std::span<const Document> corpus,
                           unsigned workers = 1);

// One document per non-empty normalized line. Files ending in .jsonl read the
// "text" field of each JSON object instead.
std::vector<Document> load_corpus(const std::filesystem::path& path);
std::vector<Document> read_corpus_lines(std::istream& in);

}  // namespace gecsynth

#endif  // GECSYNTH_CORPUS_H_
