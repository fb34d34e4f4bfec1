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

#include "gecsynth/corpus.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "gecsynth/error.h"
#include "gecsynth/parallel.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

bool is_word_char(char32_t cp) {
  return text::is_letter(cp) || text::is_digit(cp) || text::is_apostrophe(cp);
}

bool is_terminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == U'…';
}

// Quotes and brackets that may trail a terminator inside the same sentence.
bool is_closer(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U')' || cp == U']' ||
         cp == U'»' || cp == U'”' || cp == U'’';
}

bool attaches_left(std::string_view token) {
  static const std::unordered_set<std::string_view> kClosing = {
      ".", ",", ";", ":", "!", "?", ")", "]", "}", "…", "%", "»", "”"};
  return kClosing.contains(token);
}

bool attaches_right(std::string_view token) {
  static const std::unordered_set<std::string_view> kOpening = {
      "(", "[", "{", "«", "“"};
  return kOpening.contains(token);
}

std::string trim_spaces(std::u32string_view cps) {
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && text::is_space(cps[begin])) ++begin;
  while (end > begin && text::is_space(cps[end - 1])) --end;
  return text::encode(cps.substr(begin, end - begin));
}

const char* const kDefaultAbbreviations[] = {
    "alb", "apt", "av", "bkz", "bl", "blv", "bşk", "cad", "cilt", "dr",
    "doç", "gen", "hz", "ing", "jr", "kor", "ltd", "mah", "müh", "no",
    "nu", "op", "org", "ord", "örn", "prof", "sn", "sok", "st", "şti",
    "tel", "tic", "vb", "vd", "vs", "yay", "yrd", "yzb"};

}  // namespace

std::string normalize(std::string_view raw) {
  std::u32string cleaned;
  cleaned.reserve(raw.size());
  for (char32_t cp : text::decode(raw)) {
    if (text::is_space(cp)) {
      cleaned.push_back(U' ');
    } else if (!text::is_control(cp)) {
      cleaned.push_back(cp);
    }
  }
  const std::u32string composed = text::decode(text::nfc(text::encode(cleaned)));
  std::u32string out;
  out.reserve(composed.size());
  for (char32_t cp : composed) {
    if (text::is_space(cp)) {
      if (!out.empty() && out.back() != U' ') out.push_back(U' ');
    } else {
      out.push_back(cp);
    }
  }
  if (!out.empty() && out.back() == U' ') out.pop_back();
  return text::encode(out);
}

std::vector<std::string> tokenize_words(std::string_view input) {
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t cp : text::decode(input)) {
    if (is_word_char(cp)) {
      text::append(current, cp);
      continue;
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
    if (!text::is_space(cp)) {
      std::string single;
      text::append(single, cp);
      tokens.push_back(std::move(single));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string detokenize(std::span<const std::string> tokens) {
  std::string out;
  bool glue_next = true;
  for (const std::string& token : tokens) {
    if (!glue_next && !attaches_left(token)) out.push_back(' ');
    out += token;
    glue_next = attaches_right(token);
  }
  return out;
}

std::string join(std::span<const std::string> tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += sep;
    out += tokens[i];
  }
  return out;
}

SentenceSplitter::SentenceSplitter() {
  for (const char* abbreviation : kDefaultAbbreviations) {
    abbreviations_.insert(abbreviation);
  }
}

SentenceSplitter::SentenceSplitter(std::set<std::string> abbreviations) {
  for (const std::string& a : abbreviations) {
    std::string key = text::fold(normalize(a));
    while (!key.empty() && key.back() == '.') key.pop_back();
    if (!key.empty()) abbreviations_.insert(std::move(key));
  }
}

SentenceSplitter SentenceSplitter::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read abbreviation list " + path.string());
  std::set<std::string> abbreviations;
  std::string line;
  while (std::getline(in, line)) {
    std::string entry = normalize(line);
    if (!entry.empty() && entry.front() != '#') abbreviations.insert(entry);
  }
  return SentenceSplitter(std::move(abbreviations));
}

bool SentenceSplitter::is_abbreviation(std::u32string_view word) const {
  return !word.empty() && abbreviations_.contains(text::fold(text::encode(word)));
}

std::vector<std::string> SentenceSplitter::split(std::string_view input) const {
  const std::u32string cps = text::decode(input);
  const std::size_t n = cps.size();
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!is_terminator(cps[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < n && is_terminator(cps[end])) ++end;
    const bool single_period = end - i == 1 && cps[i] == U'.';
    while (end < n && is_closer(cps[end])) ++end;
    std::size_t next = end;
    while (next < n && text::is_space(cps[next])) ++next;
    const bool boundary = next > end && next < n &&
                          (text::is_upper(cps[next]) || text::is_digit(cps[next]));
    if (boundary && single_period) {
      std::size_t word_begin = i;
      while (word_begin > start && is_word_char(cps[word_begin - 1])) --word_begin;
      if (is_abbreviation(std::u32string_view(cps).substr(word_begin, i - word_begin))) {
        i = end;
        continue;
      }
    }
    if (boundary) {
      std::string sentence =
          trim_spaces(std::u32string_view(cps).substr(start, end - start));
      if (!sentence.empty()) sentences.push_back(std::move(sentence));
      start = next;
    }
    i = end;
  }
  std::string tail = trim_spaces(std::u32string_view(cps).substr(start));
  if (!tail.empty()) sentences.push_back(std::move(tail));
  return sentences;
}

std::vector<std::string> split_sentences(std::string_view input) {
  static const SentenceSplitter splitter;
  return splitter.split(input);
}

std::vector<std::string> dedup(std::span<const std::string> sentences) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const std::string& s : sentences) {
    std::string normalized = normalize(s);
    if (seen.insert(normalized).second) out.push_back(std::move(normalized));
  }
  return out;
}

std::span<const DocId> WordIndex::postings(std::string_view word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) return {};
  return it->second;
}

bool WordIndex::contains(std::string_view word) const {
  return entries_.find(word) != entries_.end();
}

void WordIndex::write(std::ostream& out) const {
  for (const auto& [word, ids] : entries_) {
    out << word << '\t';
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) out << ',';
      out << ids[i];
    }
    out << '\n';
  }
}

void WordIndex::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write index " + path.string());
  write(out);
}

WordIndex WordIndex::read(std::istream& in) {
  WordIndex index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw DataError("expected word<TAB>ids", line_no);
    }
    Postings ids;
    std::stringstream fields(line.substr(tab + 1));
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long value = std::stoul(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        ids.push_back(static_cast<DocId>(value));
      } catch (const std::exception&) {
        throw DataError("bad document id '" + field + "'", line_no);
      }
      if (ids.size() > 1 && ids[ids.size() - 2] >= ids.back()) {
        throw DataError("ids not strictly increasing", line_no);
      }
    }
    if (ids.empty()) throw DataError("empty posting list", line_no);
    auto [it, inserted] =
        index.entries_.emplace(line.substr(0, tab), std::move(ids));
    if (!inserted) throw DataError("duplicate word '" + it->first + "'", line_no);
  }
  return index;
}

WordIndex WordIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read index " + path.string());
  return read(in);
}

WordIndex WordIndex::merge(const WordIndex& a, const WordIndex& b) {
  WordIndex out = a;
  for (const auto& [word, ids] : b.entries_) {
    Postings& target = out.entries_[word];
    Postings merged;
    merged.reserve(target.size() + ids.size());
    std::set_union(target.begin(), target.end(), ids.begin(), ids.end(),
                   std::back_inserter(merged));
    target = std::move(merged);
  }
  return out;
}

WordIndex build_word_index(std::span<const Document> corpus, unsigned workers) {
  if (workers == 0) workers = default_workers();
  const std::size_t shards =
      std::min<std::size_t>(workers, std::max<std::size_t>(corpus.size(), 1));
  std::vector<WordIndex> partial(shards);
  parallel_for(shards, workers, [&](std::size_t s) {
    const std::size_t begin = corpus.size() * s / shards;
    const std::size_t end = corpus.size() * (s + 1) / shards;
    auto& entries = partial[s].entries_;
    for (std::size_t d = begin; d < end; ++d) {
      const Document& doc = corpus[d];
      for (const std::string& token : tokenize_words(doc.text)) {
        if (!text::has_letter(token)) continue;
        WordIndex::Postings& ids = entries[text::fold(token)];
        if (ids.empty() || ids.back() != doc.id) ids.push_back(doc.id);
      }
    }
    // Ids within a shard follow corpus order; sort in case ids are not
    // monotone in position.
    for (auto& [word, ids] : entries) {
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
  });
  WordIndex index;
  for (const WordIndex& part : partial) index = WordIndex::merge(index, part);
  return index;
}

std::vector<Document> read_corpus_lines(std::istream& in) {
  std::vector<Document> docs;
  std::string line;
  while (std::getline(in, line)) {
    std::string text = normalize(line);
    if (text.empty()) continue;
    docs.push_back({static_cast<DocId>(docs.size()), std::move(text)});
  }
  return docs;
}

std::vector<Document> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read corpus " + path.string());
  if (path.extension() != ".jsonl") return read_corpus_lines(in);

  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (normalize(line).empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!record.is_object() || !record.contains("text") ||
        !record["text"].is_string()) {
      throw DataError("missing string field \"text\"", line_no);
    }
    std::string text = normalize(record["text"].get<std::string>());
    if (text.empty()) continue;
    docs.push_back({static_cast<DocId>(docs.size()), std::move(text)});
  }
  return docs;
}

}  // namespace gecsynth
