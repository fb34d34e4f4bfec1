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

#ifndef GECSYNTH_GECSCORE_H_
#define GECSYNTH_GECSCORE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecsynth/edit.h"

namespace gecsynth {

// ---------------------------------------------------------------------------
// Alignment

enum class AlignKind { kMatch, kTranspose, kSubstitute, kDelete, kInsert };

// One step of a token alignment. Deletions consume only a source token,
// insertions only a target token, transpositions two of each.
struct AlignOp {
  AlignKind kind;
  std::size_t src = 0;  // first source token consumed
  std::size_t tgt = 0;  // first target token consumed

  friend bool operator==(const AlignOp&, const AlignOp&) = default;
};

// Costs are in half units: a substitution between tokens that differ only
// by case costs 1, every other non-match costs 2.
inline constexpr int kHalfCostMatch = 0;
inline constexpr int kHalfCostCaseSubstitution = 1;
inline constexpr int kHalfCostEdit = 2;

int op_half_cost(const AlignOp& op, std::span<const std::string> src,
                 std::span<const std::string> tgt);

// Minimum-cost Damerau alignment. Ties prefer match, then transposition,
// substitution, deletion, insertion.
std::vector<AlignOp> align(std::span<const std::string> src,
                           std::span<const std::string> tgt);

double alignment_cost(std::span<const AlignOp> ops,
                      std::span<const std::string> src,
                      std::span<const std::string> tgt);

// Maximal runs of non-match ops become one edit each. error_type is left
// empty.
std::vector<EditSpan> extract_edits(std::span<const AlignOp> alignment,
                                    std::span<const std::string> src,
                                    std::span<const std::string> tgt);

// ---------------------------------------------------------------------------
// Classification

inline constexpr std::string_view kPunct = "PUNCT";
inline constexpr std::string_view kOrth = "ORTH";
inline constexpr std::string_view kWordOrder = "WO";
inline constexpr std::string_view kSpell = "SPELL";
inline constexpr std::string_view kOther = "OTHER";

// First rule that fires: PUNCT (every changed token is punctuation), ORTH
// (differs only in case or spacing), WO (same tokens reordered), SPELL (one
// token for one, character distance <= 3 or only deasciification swaps),
// otherwise OTHER.
std::string classify(const EditSpan& edit, std::span<const std::string> src);

// Character-level optimal string alignment distance.
std::size_t char_distance(std::string_view a, std::string_view b);

// align + extract_edits + classify.
std::vector<EditSpan> annotate(std::span<const std::string> src,
                               std::span<const std::string> tgt);

// ---------------------------------------------------------------------------
// M2 files

struct M2Document {
  std::vector<std::string> source_tokens;
  std::vector<EditSpan> edits;  // noop lines are not stored

  friend bool operator==(const M2Document&, const M2Document&) = default;
};

// Document-level problems that do not stop parsing.
struct M2Issue {
  std::size_t document = 0;  // 0-based
  std::size_t line = 0;      // 1-based
  std::string message;
};

struct M2Parse {
  std::vector<M2Document> documents;
  std::vector<M2Issue> rejected;  // documents dropped for bad offsets
};

// `S tokens`, one `A start end|||type|||replacement|||REQUIRED|||-NONE-|||id`
// line per edit (or the noop line), then one blank line.
void write_m2(std::span<const M2Document> documents, std::ostream& out);
void save_m2(std::span<const M2Document> documents,
             const std::filesystem::path& path);

// Throws DataError with the line number on malformed lines.
M2Parse read_m2(std::istream& in);
M2Parse parse_m2(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Scoring

enum class ScoreMode { kSpanCorrection, kSpanDetection, kTokenDetection };

std::optional<ScoreMode> parse_score_mode(std::string_view name);
std::string_view to_string(ScoreMode mode);

struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  Counts& operator+=(const Counts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct Scores {
  Counts counts;
  double precision = 1.0;
  double recall = 1.0;
  double f_half = 1.0;
};

struct ScoreOptions {
  // Precision (recall) when there are no hypothesis (gold) units.
  double empty_denominator = 1.0;
  unsigned workers = 1;
};

Scores scores_from_counts(const Counts& counts, const ScoreOptions& options = {});

// Counts for one document pair, annotator 0 only.
Counts count_document(const M2Document& gold, const M2Document& hyp,
                      ScoreMode mode);

// Throws DataError naming the first document index whose source differs.
Scores score(std::span<const M2Document> gold, std::span<const M2Document> hyp,
             ScoreMode mode, const ScoreOptions& options = {});

// `TP FP FN Precision Recall F0.5` header and one tab-separated row with
// four-decimal reals.
std::string format_scores(const Scores& scores);

// ---------------------------------------------------------------------------
// Tweets evaluation set

// Removes every Unicode punctuation character and re-collapses whitespace.
std::string strip_punctuation(std::string_view sentence);

struct TweetSets {
  std::vector<std::string> gold;
  std::vector<std::string> hyp;
};

// Gold sentences get a Turkish-aware capital first letter; hypotheses lose
// their punctuation. Throws DataError when the lists differ in length.
TweetSets postprocess_tweets(std::span<const std::string> gold,
                             std::span<const std::string> hyp);

}  // namespace gecsynth

#endif  // GECSYNTH_GECSCORE_H_
