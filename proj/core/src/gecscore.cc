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

#include "gecsynth/gecscore.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "gecsynth/candidates.h"
#include "gecsynth/corpus.h"
#include "gecsynth/error.h"
#include "gecsynth/parallel.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

std::size_t src_width(AlignKind kind) {
  switch (kind) {
    case AlignKind::kTranspose:
      return 2;
    case AlignKind::kInsert:
      return 0;
    default:
      return 1;
  }
}

std::size_t tgt_width(AlignKind kind) {
  switch (kind) {
    case AlignKind::kTranspose:
      return 2;
    case AlignKind::kDelete:
      return 0;
    default:
      return 1;
  }
}

int substitution_half_cost(std::string_view a, std::string_view b) {
  return text::fold(a) == text::fold(b) ? kHalfCostCaseSubstitution
                                        : kHalfCostEdit;
}

std::vector<std::string_view> split_fields(std::string_view line,
                                           std::string_view sep) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = line.find(sep, begin);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, end - begin));
    begin = end + sep.size();
  }
}

std::vector<std::string> split_spaces(std::string_view s) {
  std::vector<std::string> tokens;
  for (std::string_view piece : split_fields(s, " ")) {
    if (!piece.empty()) tokens.emplace_back(piece);
  }
  return tokens;
}

bool parse_int(std::string_view s, int& value) {
  if (s.empty()) return false;
  std::size_t used = 0;
  try {
    value = std::stoi(std::string(s), &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == s.size();
}

bool deasciification_only(std::string_view a, std::string_view b) {
  const std::u32string x = text::decode(a);
  const std::u32string y = text::decode(b);
  if (x.size() != y.size() || x == y) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == y[i]) continue;
    const auto group = ambiguous_pairs().group_of(x[i]);
    if (group.empty() || group.find(y[i]) == std::u32string_view::npos) {
      return false;
    }
  }
  return true;
}

std::string concat(std::span<const std::string> tokens) {
  std::string out;
  for (const std::string& t : tokens) out += t;
  return out;
}

}  // namespace

int op_half_cost(const AlignOp& op, std::span<const std::string> src,
                 std::span<const std::string> tgt) {
  switch (op.kind) {
    case AlignKind::kMatch:
      return kHalfCostMatch;
    case AlignKind::kSubstitute:
      return substitution_half_cost(src[op.src], tgt[op.tgt]);
    default:
      return kHalfCostEdit;
  }
}

std::vector<AlignOp> align(std::span<const std::string> src,
                           std::span<const std::string> tgt) {
  const std::size_t n = src.size();
  const std::size_t m = tgt.size();
  const std::size_t width = m + 1;
  std::vector<int> cost((n + 1) * width, 0);
  auto at = [&](std::size_t i, std::size_t j) -> int& { return cost[i * width + j]; };

  // Folding is the expensive part of a substitution; do it once per token.
  std::vector<std::string> src_folded, tgt_folded;
  src_folded.reserve(n);
  tgt_folded.reserve(m);
  for (const auto& t : src) src_folded.push_back(text::fold(t));
  for (const auto& t : tgt) tgt_folded.push_back(text::fold(t));
  const auto sub_cost = [&](std::size_t i, std::size_t j) {
    return src_folded[i] == tgt_folded[j] ? kHalfCostCaseSubstitution : kHalfCostEdit;
  };

  const auto can_transpose = [&](std::size_t i, std::size_t j) {
    return i >= 2 && j >= 2 && src[i - 2] == tgt[j - 1] &&
           src[i - 1] == tgt[j - 2] && src[i - 1] != src[i - 2];
  };

  for (std::size_t i = 1; i <= n; ++i) at(i, 0) = at(i - 1, 0) + kHalfCostEdit;
  for (std::size_t j = 1; j <= m; ++j) at(0, j) = at(0, j - 1) + kHalfCostEdit;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      int best = std::min(at(i - 1, j), at(i, j - 1)) + kHalfCostEdit;
      if (src[i - 1] == tgt[j - 1]) {
        best = std::min(best, at(i - 1, j - 1));
      } else {
        best = std::min(best, at(i - 1, j - 1) + sub_cost(i - 1, j - 1));
      }
      if (can_transpose(i, j)) best = std::min(best, at(i - 2, j - 2) + kHalfCostEdit);
      at(i, j) = best;
    }
  }

  std::vector<AlignOp> ops;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const int here = at(i, j);
    if (i > 0 && j > 0 && src[i - 1] == tgt[j - 1] && at(i - 1, j - 1) == here) {
      ops.push_back({AlignKind::kMatch, i - 1, j - 1});
      --i, --j;
    } else if (can_transpose(i, j) && at(i - 2, j - 2) + kHalfCostEdit == here) {
      ops.push_back({AlignKind::kTranspose, i - 2, j - 2});
      i -= 2, j -= 2;
    } else if (i > 0 && j > 0 && src[i - 1] != tgt[j - 1] &&
               at(i - 1, j - 1) + sub_cost(i - 1, j - 1) == here) {
      ops.push_back({AlignKind::kSubstitute, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && at(i - 1, j) + kHalfCostEdit == here) {
      ops.push_back({AlignKind::kDelete, i - 1, j});
      --i;
    } else {
      ops.push_back({AlignKind::kInsert, i, j - 1});
      --j;
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

double alignment_cost(std::span<const AlignOp> ops,
                      std::span<const std::string> src,
                      std::span<const std::string> tgt) {
  int half = 0;
  for (const AlignOp& op : ops) half += op_half_cost(op, src, tgt);
  return half / 2.0;
}

std::vector<EditSpan> extract_edits(std::span<const AlignOp> alignment,
                                    std::span<const std::string> src,
                                    std::span<const std::string> tgt) {
  std::vector<EditSpan> edits;
  bool open = false;
  std::size_t src_begin = 0, src_end = 0, tgt_begin = 0, tgt_end = 0;
  const auto close = [&] {
    if (!open) return;
    edits.push_back(EditSpan{
        static_cast<int>(src_begin), static_cast<int>(src_end),
        std::vector<std::string>(tgt.begin() + static_cast<std::ptrdiff_t>(tgt_begin),
                                 tgt.begin() + static_cast<std::ptrdiff_t>(tgt_end)),
        "", 0});
    open = false;
  };
  for (const AlignOp& op : alignment) {
    if (op.kind == AlignKind::kMatch) {
      close();
      continue;
    }
    if (!open) {
      open = true;
      src_begin = op.src;
      tgt_begin = op.tgt;
    }
    src_end = op.src + src_width(op.kind);
    tgt_end = op.tgt + tgt_width(op.kind);
  }
  close();
  (void)src;
  return edits;
}

std::size_t char_distance(std::string_view a, std::string_view b) {
  const std::u32string x = text::decode(a);
  const std::u32string y = text::decode(b);
  const std::size_t n = x.size(), m = y.size();
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = x[i - 1] == y[j - 1] ? 0 : 1;
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + sub});
      if (i > 1 && j > 1 && x[i - 1] == y[j - 2] && x[i - 2] == y[j - 1]) {
        d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
      }
    }
  }
  return d[n][m];
}

std::string classify(const EditSpan& edit, std::span<const std::string> src) {
  if (edit.is_noop()) return "noop";
  const std::span<const std::string> orig =
      src.subspan(static_cast<std::size_t>(edit.start),
                  static_cast<std::size_t>(edit.end - edit.start));
  const std::span<const std::string> cor(edit.replacement);

  const bool any_token = !orig.empty() || !cor.empty();
  const auto punct = [](const std::string& t) { return text::is_all_punct(t); };
  if (any_token && std::all_of(orig.begin(), orig.end(), punct) &&
      std::all_of(cor.begin(), cor.end(), punct)) {
    return std::string(kPunct);
  }

  if (!orig.empty() && !cor.empty() &&
      text::fold(concat(orig)) == text::fold(concat(cor))) {
    return std::string(kOrth);
  }

  if (orig.size() >= 2 && orig.size() == cor.size()) {
    std::vector<std::string> a(orig.begin(), orig.end());
    std::vector<std::string> b(cor.begin(), cor.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) return std::string(kWordOrder);
  }

  if (orig.size() == 1 && cor.size() == 1 &&
      (char_distance(orig[0], cor[0]) <= 3 ||
       deasciification_only(orig[0], cor[0]))) {
    return std::string(kSpell);
  }
  return std::string(kOther);
}

std::vector<EditSpan> annotate(std::span<const std::string> src,
                               std::span<const std::string> tgt) {
  std::vector<EditSpan> edits = extract_edits(align(src, tgt), src, tgt);
  for (EditSpan& edit : edits) edit.error_type = classify(edit, src);
  return edits;
}

void write_m2(std::span<const M2Document> documents, std::ostream& out) {
  const auto write_edit = [&out](const EditSpan& e) {
    out << "A " << e.start << ' ' << e.end << "|||" << e.error_type << "|||"
        << join(e.replacement, " ") << "|||REQUIRED|||-NONE-|||" << e.annotator
        << '\n';
  };
  for (const M2Document& doc : documents) {
    out << "S " << join(doc.source_tokens, " ") << '\n';
    if (doc.edits.empty()) {
      out << "A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n";
    }
    for (const EditSpan& e : doc.edits) write_edit(e);
    out << '\n';
  }
}

void save_m2(std::span<const M2Document> documents,
             const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write M2 file " + path.string());
  write_m2(documents, out);
}

M2Parse read_m2(std::istream& in) {
  M2Parse result;
  std::optional<M2Document> current;
  std::optional<M2Issue> problem;
  std::size_t doc_index = 0;
  const auto finish = [&] {
    if (!current) return;
    if (problem) {
      result.rejected.push_back(*problem);
    } else {
      result.documents.push_back(std::move(*current));
    }
    current.reset();
    problem.reset();
    ++doc_index;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish();
      continue;
    }
    if (line == "S" || line.starts_with("S ")) {
      finish();
      current = M2Document{split_spaces(std::string_view(line).substr(1)), {}};
      continue;
    }
    if (!line.starts_with("A ")) {
      throw DataError("expected an S or A line", line_no);
    }
    if (!current) throw DataError("edit line before any S line", line_no);

    const auto fields = split_fields(std::string_view(line).substr(2), "|||");
    if (fields.size() != 6) {
      throw DataError("edit line needs 6 |||-separated fields", line_no);
    }
    const auto offsets = split_spaces(fields[0]);
    EditSpan edit;
    if (offsets.size() != 2 || !parse_int(offsets[0], edit.start) ||
        !parse_int(offsets[1], edit.end)) {
      throw DataError("bad edit offsets '" + std::string(fields[0]) + "'", line_no);
    }
    if (!parse_int(fields[5], edit.annotator)) {
      throw DataError("bad annotator id '" + std::string(fields[5]) + "'", line_no);
    }
    if (edit.is_noop()) continue;
    edit.error_type = std::string(fields[1]);
    if (fields[2] != "-NONE-") edit.replacement = split_spaces(fields[2]);

    const int size = static_cast<int>(current->source_tokens.size());
    if (edit.start < 0 || edit.start > edit.end || edit.end > size) {
      if (!problem) {
        problem = M2Issue{doc_index, line_no,
                          "edit [" + std::to_string(edit.start) + ", " +
                              std::to_string(edit.end) + ") outside " +
                              std::to_string(size) + " source tokens"};
      }
      continue;
    }
    current->edits.push_back(std::move(edit));
  }
  finish();
  return result;
}

M2Parse parse_m2(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read M2 file " + path.string());
  return read_m2(in);
}

std::optional<ScoreMode> parse_score_mode(std::string_view name) {
  if (name == "span-correction") return ScoreMode::kSpanCorrection;
  if (name == "span-detection") return ScoreMode::kSpanDetection;
  if (name == "token-detection") return ScoreMode::kTokenDetection;
  return std::nullopt;
}

std::string_view to_string(ScoreMode mode) {
  switch (mode) {
    case ScoreMode::kSpanCorrection:
      return "span-correction";
    case ScoreMode::kSpanDetection:
      return "span-detection";
    case ScoreMode::kTokenDetection:
      return "token-detection";
  }
  return "span-correction";
}

Scores scores_from_counts(const Counts& counts, const ScoreOptions& options) {
  Scores s{counts};
  const double tp = static_cast<double>(counts.tp);
  s.precision = counts.tp + counts.fp == 0
                    ? options.empty_denominator
                    : tp / static_cast<double>(counts.tp + counts.fp);
  s.recall = counts.tp + counts.fn == 0
                 ? options.empty_denominator
                 : tp / static_cast<double>(counts.tp + counts.fn);
  const double denominator = 0.25 * s.precision + s.recall;
  s.f_half = denominator == 0.0 ? 0.0 : 1.25 * s.precision * s.recall / denominator;
  return s;
}

Counts count_document(const M2Document& gold, const M2Document& hyp,
                      ScoreMode mode) {
  using Unit = std::tuple<int, int, std::vector<std::string>>;
  const auto units = [mode](const M2Document& doc) {
    std::map<Unit, std::size_t> out;
    for (const EditSpan& e : doc.edits) {
      if (e.annotator != 0 || e.is_noop()) continue;
      switch (mode) {
        case ScoreMode::kSpanCorrection:
          ++out[{e.start, e.end, e.replacement}];
          break;
        case ScoreMode::kSpanDetection:
          ++out[{e.start, e.end, {}}];
          break;
        case ScoreMode::kTokenDetection:
          if (e.start == e.end) {
            out[{e.start, e.start, {}}] = 1;
          }
          for (int t = e.start; t < e.end; ++t) out[{t, t + 1, {}}] = 1;
          break;
      }
    }
    return out;
  };
  const auto gold_units = units(gold);
  const auto hyp_units = units(hyp);

  Counts counts;
  std::size_t gold_total = 0;
  for (const auto& [unit, n] : gold_units) gold_total += n;
  for (const auto& [unit, n] : hyp_units) {
    auto it = gold_units.find(unit);
    const std::size_t matched = it == gold_units.end() ? 0 : std::min(n, it->second);
    counts.tp += matched;
    counts.fp += n - matched;
  }
  counts.fn = gold_total - counts.tp;
  return counts;
}

Scores score(std::span<const M2Document> gold, std::span<const M2Document> hyp,
             ScoreMode mode, const ScoreOptions& options) {
  if (gold.size() != hyp.size()) {
    throw DataError("gold has " + std::to_string(gold.size()) +
                    " documents but hypothesis has " + std::to_string(hyp.size()));
  }
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].source_tokens != hyp[i].source_tokens) {
      throw DataError("source sentences differ at document index " +
                      std::to_string(i));
    }
  }
  std::vector<Counts> per_doc(gold.size());
  parallel_for(gold.size(), options.workers, [&](std::size_t i) {
    per_doc[i] = count_document(gold[i], hyp[i], mode);
  });
  Counts total;
  for (const Counts& c : per_doc) total += c;
  return scores_from_counts(total, options);
}

std::string format_scores(const Scores& scores) {
  char row[256];
  std::snprintf(row, sizeof(row), "%zu\t%zu\t%zu\t%.4f\t%.4f\t%.4f\n",
                scores.counts.tp, scores.counts.fp, scores.counts.fn,
                scores.precision, scores.recall, scores.f_half);
  return std::string("TP\tFP\tFN\tPrecision\tRecall\tF0.5\n") + row;
}

std::string strip_punctuation(std::string_view sentence) {
  std::string out;
  out.reserve(sentence.size());
  for (char32_t cp : text::decode(sentence)) {
    if (!text::is_punct(cp)) text::append(out, cp);
  }
  return normalize(out);
}

TweetSets postprocess_tweets(std::span<const std::string> gold,
                             std::span<const std::string> hyp) {
  if (gold.size() != hyp.size()) {
    throw DataError("gold has " + std::to_string(gold.size()) +
                    " sentences but hypothesis has " + std::to_string(hyp.size()));
  }
  TweetSets out;
  out.gold.reserve(gold.size());
  out.hyp.reserve(hyp.size());
  for (const std::string& s : gold) out.gold.push_back(text::capitalize_first(s));
  for (const std::string& s : hyp) out.hyp.push_back(strip_punctuation(s));
  return out;
}

}  // namespace gecsynth
