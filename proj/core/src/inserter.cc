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

#include "gecsynth/inserter.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "gecsynth/corpus.h"
#include "gecsynth/error.h"
#include "gecsynth/parallel.h"
#include "gecsynth/text.h"

namespace gecsynth {

ParallelPair clean_insert(std::string_view sentence,
                          const SpellingDictionary& dictionary) {
  ParallelPair pair{std::string(sentence), {}, {}};
  const std::vector<std::string> tokens = tokenize_words(sentence);
  std::vector<std::string> output;
  output.reserve(tokens.size());

  std::size_t i = 0;
  while (i < tokens.size()) {
    const auto match = dictionary.lookup_longest(tokens, i);
    if (!match) {
      output.push_back(tokens[i++]);
      continue;
    }
    // Dictionary tokens may not be stable under the tokenizer ("a.b"), so the
    // replacement is re-tokenized to keep edits consistent with the output.
    std::vector<std::string> replacement;
    for (const std::string& token : match->entry->correct) {
      for (std::string& piece : tokenize_words(token)) {
        replacement.push_back(std::move(piece));
      }
    }
    if (match->case_folded && !replacement.empty() &&
        text::starts_with_upper(tokens[i])) {
      replacement.front() = text::capitalize_first(replacement.front());
    }
    const std::span<const std::string> matched(tokens.data() + i, match->length);
    if (!std::equal(matched.begin(), matched.end(), replacement.begin(),
                    replacement.end())) {
      pair.edits.push_back(EditSpan{static_cast<int>(i),
                                    static_cast<int>(i + match->length),
                                    replacement, "", 0});
    }
    output.insert(output.end(), replacement.begin(), replacement.end());
    i += match->length;
  }

  pair.corrected = pair.edits.empty() ? pair.source : detokenize(output);
  return pair;
}

std::vector<ParallelPair> build_parallel_corpus(
    std::span<const std::string> sentences, const SpellingDictionary& dictionary,
    unsigned workers) {
  std::vector<ParallelPair> pairs(sentences.size());
  parallel_for(sentences.size(), workers, [&](std::size_t i) {
    pairs[i] = clean_insert(sentences[i], dictionary);
  });
  return pairs;
}

void write_parallel_tsv(std::span<const ParallelPair> pairs, std::ostream& out) {
  for (const ParallelPair& pair : pairs) {
    out << pair.source << '\t' << pair.corrected << '\n';
  }
}

std::vector<SentencePair> read_parallel_tsv(std::istream& in) {
  std::vector<SentencePair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw DataError("expected source<TAB>corrected", line_no);
    }
    pairs.push_back({normalize(line.substr(0, tab)), normalize(line.substr(tab + 1))});
  }
  return pairs;
}

std::vector<SentencePair> load_parallel_tsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read parallel corpus " + path.string());
  return read_parallel_tsv(in);
}

}  // namespace gecsynth
