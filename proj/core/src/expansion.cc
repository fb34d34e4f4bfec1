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

#include "gecsynth/expansion.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "gecsynth/error.h"
#include "gecsynth/parallel.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

constexpr const char* kReportHeader =
    "iteration\tdict_size\textracted_texts\tdistinct_words\tdict_delta";

const Document& document_at(std::span<const Document> corpus, DocId id) {
  if (id >= corpus.size() || corpus[id].id != id) {
    throw ConfigError("index refers to document " + std::to_string(id) +
                      " which is not at that corpus position");
  }
  return corpus[id];
}

std::vector<std::string> folded_tokens(const Document& doc) {
  std::vector<std::string> tokens = tokenize_words(doc.text);
  for (std::string& token : tokens) token = text::fold(token);
  return tokens;
}

bool contains_phrase(std::span<const std::string> tokens,
                     std::span<const std::string> phrase) {
  return std::search(tokens.begin(), tokens.end(), phrase.begin(),
                     phrase.end()) != tokens.end();
}

}  // namespace

std::vector<DocId> documents_with_keys(const SpellingDictionary& dictionary,
                                       const ExpansionInputs& inputs) {
  std::vector<DocId> hits;
  for (const auto& [key, entry] : dictionary.entries()) {
    std::vector<std::string> phrase;
    phrase.reserve(entry.incorrect.size());
    for (const std::string& token : entry.incorrect) {
      phrase.push_back(text::fold(token));
    }
    const auto postings = inputs.index.postings(phrase.front());
    if (phrase.size() == 1) {
      hits.insert(hits.end(), postings.begin(), postings.end());
      continue;
    }
    for (DocId id : postings) {
      if (contains_phrase(folded_tokens(document_at(inputs.corpus, id)), phrase)) {
        hits.push_back(id);
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

IterationResult expand_once(const SpellingDictionary& dictionary,
                            const ExpansionInputs& inputs,
                            std::span<const DocId> already_extracted,
                            std::size_t iteration,
                            const ExpansionOptions& options) {
  if (dictionary.empty()) throw Error("nothing to expand: the dictionary is empty");

  IterationResult result;
  result.report.iteration = iteration;
  result.report.dict_size = dictionary.size();

  const std::vector<DocId> hits = documents_with_keys(dictionary, inputs);
  std::set_difference(hits.begin(), hits.end(), already_extracted.begin(),
                      already_extracted.end(), std::back_inserter(result.extracted));
  result.report.extracted_texts = result.extracted.size();

  std::set<std::string> harvested;
  for (DocId id : result.extracted) {
    for (std::string& token : folded_tokens(document_at(inputs.corpus, id))) {
      if (text::has_letter(token)) harvested.insert(std::move(token));
    }
  }
  std::vector<std::string> words(harvested.begin(), harvested.end());

  // Analyzability and resolution are pure, so both run per word in parallel;
  // the merge below walks words in sorted order.
  std::vector<char> keep(words.size(), 0);
  std::vector<Resolution> resolutions(words.size());
  parallel_for(words.size(), options.workers, [&](std::size_t i) {
    if (dictionary.contains(words[i]) ||
        inputs.analyzer.is_analyzable(words[i])) {
      return;
    }
    keep[i] = 1;
    resolutions[i] = resolve(words[i], inputs.analyzer, options.candidates);
  });

  std::vector<SpellingEntry> batch;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!keep[i]) continue;
    ++result.report.distinct_words;
    if (resolutions[i].capped) ++result.capped_words;
    if (resolutions[i].entry) {
      SpellingEntry entry = std::move(*resolutions[i].entry);
      entry.iteration = static_cast<std::uint32_t>(iteration);
      batch.push_back(std::move(entry));
    }
  }

  MergeResult merged = dictionary.merge(batch);
  result.report.dict_delta = merged.added;
  result.dictionary = std::move(merged.dictionary);
  return result;
}

ExpansionRun expand_to_fixpoint(const SpellingDictionary& seed,
                                const ExpansionInputs& inputs,
                                const ExpansionOptions& options) {
  if (options.max_iterations == 0) {
    throw ConfigError("max_iterations must be at least 1");
  }
  ExpansionRun run;
  run.final_dictionary = seed;
  for (std::size_t i = 1; i <= options.max_iterations; ++i) {
    IterationResult step = expand_once(run.final_dictionary, inputs,
                                       run.extracted_ids, i, options);
    std::vector<DocId> accumulated;
    accumulated.reserve(run.extracted_ids.size() + step.extracted.size());
    std::merge(run.extracted_ids.begin(), run.extracted_ids.end(),
               step.extracted.begin(), step.extracted.end(),
               std::back_inserter(accumulated));
    run.extracted_ids = std::move(accumulated);
    run.final_dictionary = std::move(step.dictionary);
    run.capped_words += step.capped_words;
    run.reports.push_back(step.report);
    if (step.report.dict_delta == 0) {
      run.converged = true;
      break;
    }
  }
  return run;
}

void write_report(std::span<const IterationReport> reports, std::ostream& out) {
  out << kReportHeader << '\n';
  for (const IterationReport& r : reports) {
    out << r.iteration << '\t' << r.dict_size << '\t' << r.extracted_texts
        << '\t' << r.distinct_words << '\t' << r.dict_delta << '\n';
  }
}

void save_report(std::span<const IterationReport> reports,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write report " + path.string());
  write_report(reports, out);
}

std::vector<IterationReport> read_report(std::istream& in) {
  std::vector<IterationReport> reports;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == kReportHeader) continue;
    std::istringstream fields(line);
    IterationReport r;
    if (!(fields >> r.iteration >> r.dict_size >> r.extracted_texts >>
          r.distinct_words >> r.dict_delta)) {
      throw DataError("malformed report row", line_no);
    }
    reports.push_back(r);
  }
  return reports;
}

}  // namespace gecsynth
