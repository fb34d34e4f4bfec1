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

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "gecsynth/corpus.h"
#include "gecsynth/error.h"
#include "gecsynth/expansion.h"
#include "oracles.h"

namespace gecsynth {
namespace {

struct World {
  std::vector<Document> corpus;
  WordIndex index;
  AnalyzabilityOracle oracle;
  ExpansionInputs inputs() const { return {index, corpus, oracle}; }
};

World make_world(std::vector<std::string> texts, std::vector<std::string> lexicon) {
  World w;
  for (DocId id = 0; id < texts.size(); ++id) w.corpus.push_back({id, normalize(texts[id])});
  w.index = build_word_index(w.corpus);
  w.oracle = AnalyzabilityOracle(std::move(lexicon), {});
  return w;
}

SpellingDictionary seed(std::initializer_list<std::pair<TokenSeq, TokenSeq>> pairs) {
  SpellingDictionary d;
  for (const auto& [a, b] : pairs) d.insert({a, b, Provenance::kManual, 0});
  return d;
}

std::vector<SpellingEntry> entries_of(const SpellingDictionary& d) {
  std::vector<SpellingEntry> out;
  for (const auto& [k, e] : d.entries()) out.push_back(e);
  return out;
}

TEST_SUITE("expansion") {

TEST_CASE("expand_once on the five-step example") {
  const World w = make_world({"a x", "y"}, {"z"});
  const IterationResult r = expand_once(seed({{{"a"}, {"b"}}}), w.inputs(), {}, 1);
  CHECK(r.extracted == std::vector<DocId>{0});
  CHECK(r.report == IterationReport{1, 1, 1, 1, 1});
  const SpellingEntry* x = r.dictionary.find("x");
  REQUIRE(x);
  CHECK(x->correct == TokenSeq{"z"});
  CHECK(x->provenance == Provenance::kSpellChecker);
  CHECK(x->iteration == 1);
}

TEST_CASE("keys without hits extract nothing") {
  const World w = make_world({"b c"}, {"z"});
  const IterationResult r = expand_once(seed({{{"a"}, {"b"}}}), w.inputs(), {}, 1);
  CHECK(r.report.extracted_texts == 0);
  CHECK(r.report.dict_delta == 0);
}

TEST_CASE("an empty dictionary is an error") {
  const World w = make_world({"a"}, {});
  CHECK_THROWS_AS(expand_once(SpellingDictionary{}, w.inputs(), {}, 1), Error);
}

TEST_CASE("multi-token keys extract by phrase") {
  const World w = make_world({"yapa bilirim cay", "yapa gel", "bilirim yapa"}, {"çay"});
  const auto d = seed({{{"yapa", "bilirim"}, {"yapabilirim"}}});
  CHECK(documents_with_keys(d, w.inputs()) == std::vector<DocId>{0});
  const IterationResult r = expand_once(d, w.inputs(), {}, 1);
  CHECK(r.report == IterationReport{1, 1, 1, 3, 1});
  CHECK(r.dictionary.find("cay")->provenance == Provenance::kDeasciifier);
}

TEST_CASE("seed at its fixpoint gives one report") {
  const World w = make_world({"a b"}, {"b"});
  const ExpansionRun run = expand_to_fixpoint(seed({{{"a"}, {"b"}}}), w.inputs());
  REQUIRE(run.reports.size() == 1);
  CHECK(run.reports[0].dict_delta == 0);
  CHECK(run.converged);
}

TEST_CASE("three growth iterations then convergence") {
  const World w = make_world({"kahwe cay", "cay seker", "seker guzel", "guzel", "bos"},
                             {"çay", "şeker", "güzel"});
  const auto s = seed({{{"kahwe"}, {"kahve"}}});
  const ExpansionRun run = expand_to_fixpoint(s, w.inputs());
  const std::vector<IterationReport> expected = {
      {1, 1, 1, 1, 1}, {2, 2, 1, 1, 1}, {3, 3, 1, 1, 1}, {4, 4, 1, 0, 0}};
  CHECK(run.reports == expected);
  CHECK(run.converged);
  CHECK(run.extracted_ids == std::vector<DocId>{0, 1, 2, 3});
  CHECK(run.final_dictionary.find("guzel")->iteration == 3);

  const auto reference = testing::reference_fixpoint(w.corpus, entries_of(s), w.oracle);
  REQUIRE(reference.size() == run.reports.size());
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const auto& r = run.reports[i];
    CHECK(reference[i] ==
          testing::ReferenceRow{r.dict_size, r.extracted_texts, r.distinct_words, r.dict_delta});
  }
  // Stability: one more pass over a converged dictionary adds nothing.
  CHECK(expand_once(run.final_dictionary, w.inputs(), {}, 5).report.dict_delta == 0);
}

TEST_CASE("iteration cap flags a non-converged run") {
  const World w = make_world({"kahwe cay", "cay seker", "seker guzel"},
                             {"çay", "şeker", "güzel"});
  ExpansionOptions options;
  options.max_iterations = 2;
  const ExpansionRun run = expand_to_fixpoint(seed({{{"kahwe"}, {"kahve"}}}), w.inputs(), options);
  CHECK(run.reports.size() == 2);
  CHECK_FALSE(run.converged);
  options.max_iterations = 0;
  CHECK_THROWS_AS(expand_to_fixpoint(seed({{{"a"}, {"b"}}}), w.inputs(), options), ConfigError);
}

TEST_CASE("toy fixtures reproduce the frozen report and dictionary") {
  const auto dir = testing::data_dir() / "toy";
  World w;
  w.corpus = load_corpus(dir / "corpus.txt");
  w.index = build_word_index(w.corpus);
  w.oracle = load_lexicon(dir / "lexicon.txt", load_suffix_rules(testing::data_dir() / "suffix_rules.tsv"));
  const DictionaryLoad s = load_dictionary(dir / "seed_dictionary.tsv");
  REQUIRE(s.rejected.empty());
  for (unsigned workers : {1u, 4u}) {
    ExpansionOptions options;
    options.workers = workers;
    const ExpansionRun run = expand_to_fixpoint(s.dictionary, w.inputs(), options);
    std::ostringstream report, dict;
    write_report(run.reports, report);
    write_dictionary(run.final_dictionary, dict);
    std::ifstream expected_report(dir / "expected_report.tsv");
    std::ifstream expected_dict(dir / "expected_dictionary.tsv");
    CHECK(report.str() == std::string(std::istreambuf_iterator<char>(expected_report), {}));
    CHECK(dict.str() == std::string(std::istreambuf_iterator<char>(expected_dict), {}));
  }
}

TEST_CASE("superset dictionaries extract at least as many documents") {
  std::mt19937 rng(8);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::string> texts;
    for (int d = 0; d < 40; ++d) {
      texts.push_back(testing::random_word(rng, U"abc", 1, 2) + " " +
                      testing::random_word(rng, U"abc", 1, 2));
    }
    const World w = make_world(texts, {});
    SpellingDictionary small, large;
    for (int k = 0; k < 6; ++k) {
      SpellingEntry e{{testing::random_word(rng, U"abc", 1, 2)}, {"zz"}, Provenance::kManual, 0};
      if (k < 3) small.insert(e);
      large.insert(e);
    }
    if (small.empty()) continue;
    CHECK(documents_with_keys(small, w.inputs()).size() <=
          documents_with_keys(large, w.inputs()).size());
  }
}

TEST_CASE("report TSV round-trips") {
  const std::vector<IterationReport> reports = {{1, 30, 14, 20, 10}, {2, 40, 0, 0, 0}};
  std::ostringstream out;
  write_report(reports, out);
  CHECK(out.str() ==
        "iteration\tdict_size\textracted_texts\tdistinct_words\tdict_delta\n"
        "1\t30\t14\t20\t10\n2\t40\t0\t0\t0\n");
  std::istringstream in(out.str());
  CHECK(read_report(in) == reports);
}

}  // TEST_SUITE
}  // namespace
}  // namespace gecsynth
