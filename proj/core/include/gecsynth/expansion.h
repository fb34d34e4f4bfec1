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

#ifndef GECSYNTH_EXPANSION_H_
#define GECSYNTH_EXPANSION_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "gecsynth/candidates.h"
#include "gecsynth/corpus.h"
#include "gecsynth/lexicon.h"
#include "gecsynth/morphology.h"

namespace gecsynth {

// One row of the dictionary growth table.
struct IterationReport {
  std::size_t iteration = 0;        // 1-based
  std::size_t dict_size = 0;        // entries when the iteration started
  std::size_t extracted_texts = 0;  // documents newly extracted
  std::size_t distinct_words = 0;   // harvested words sent to the correctors
  std::size_t dict_delta = 0;       // entries added

  friend bool operator==(const IterationReport&, const IterationReport&) = default;
};

inline constexpr std::size_t kDefaultMaxIterations = 50;

struct ExpansionOptions {
  std::size_t max_iterations = kDefaultMaxIterations;
  CandidateOptions candidates;
  unsigned workers = 1;  // 0: one per hardware thread
};

struct IterationResult {
  SpellingDictionary dictionary;
  IterationReport report;
  std::vector<DocId> extracted;  // newly extracted ids, ascending
  std::size_t capped_words = 0;  // skipped by the deasciifier cap
};

// Read-only inputs shared by every iteration of a run.
struct ExpansionInputs {
  const WordIndex& index;
  std::span<const Document> corpus;
  const Analyzer& analyzer;
};

// Ids of documents containing at least one key of `dictionary`. Single-token
// keys use their postings directly; longer keys start from the first token's
// postings and are confirmed by scanning the document.
std::vector<DocId> documents_with_keys(const SpellingDictionary& dictionary,
                                       const ExpansionInputs& inputs);

// One pass of extract -> harvest -> correct -> merge. Documents listed in
// `already_extracted` (ascending) are not extracted again. New entries are
// stamped with `iteration`. Throws Error when the dictionary is empty.
IterationResult expand_once(const SpellingDictionary& dictionary,
                            const ExpansionInputs& inputs,
                            std::span<const DocId> already_extracted,
                            std::size_t iteration,
                            const ExpansionOptions& options = {});

struct ExpansionRun {
  std::vector<IterationReport> reports;
  SpellingDictionary final_dictionary;
  std::vector<DocId> extracted_ids;  // ascending, accumulated over the run
  bool converged = false;            // false when max_iterations cut it short
  std::size_t capped_words = 0;
};

// Repeats expand_once until an iteration adds nothing or the cap is hit.
ExpansionRun expand_to_fixpoint(const SpellingDictionary& seed,
                                const ExpansionInputs& inputs,
                                const ExpansionOptions& options = {});

// `iteration<TAB>dict_size<TAB>extracted_texts<TAB>distinct_words<TAB>dict_delta`
// with that header line first.
void write_report(std::span<const IterationReport> reports, std::ostream& out);
void save_report(std::span<const IterationReport> reports,
                 const std::filesystem::path& path);
std::vector<IterationReport> read_report(std::istream& in);

}  // namespace gecsynth

#endif  // GECSYNTH_EXPANSION_H_
