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

#ifndef GECSYNTH_INSERTER_H_
#define GECSYNTH_INSERTER_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecsynth/edit.h"
#include "gecsynth/lexicon.h"

namespace gecsynth {

struct ParallelPair {
  std::string source;
  std::string corrected;
  std::vector<EditSpan> edits;  // offsets into tokenize_words(source)

  friend bool operator==(const ParallelPair&, const ParallelPair&) = default;
};

// Single left-to-right pass: at each token the longest dictionary key is
// replaced and the scan resumes after it, so inserted text is never
// re-examined. A key matched only after case folding keeps the source's
// initial capital. Without any match the source is returned unchanged.
ParallelPair clean_insert(std::string_view sentence,
                          const SpellingDictionary& dictionary);

// One pair per sentence, in input order, including pairs without edits.
std::vector<ParallelPair> build_parallel_corpus(
    std::span<const std::string> sentences, const SpellingDictionary& dictionary,
    unsigned workers = 1);

// `source<TAB>corrected` per line.
void write_parallel_tsv(std::span<const ParallelPair> pairs, std::ostream& out);

struct SentencePair {
  std::string source;
  std::string corrected;
};
std::vector<SentencePair> read_parallel_tsv(std::istream& in);
std::vector<SentencePair> load_parallel_tsv(const std::filesystem::path& path);

}  // namespace gecsynth

#endif  // GECSYNTH_INSERTER_H_
