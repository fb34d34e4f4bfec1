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

#include "gecsynth/error.h"
#include "gecsynth/morphology.h"
#include "oracles.h"

namespace gecsynth {
namespace {

std::vector<SuffixRule> rules(std::initializer_list<std::pair<const char*, const char*>> spec) {
  std::string tsv;
  for (const auto& [s, p] : spec) tsv += std::string(s) + "\t" + p + "\n";
  std::istringstream in(tsv);
  return read_suffix_rules(in);
}

// Every way to peel suffixes off the right end of `word`, by brute force.
bool brute_force_derivable(const std::string& word, const std::set<std::string>& lexicon,
                           const std::vector<std::string>& suffixes, std::size_t depth) {
  if (lexicon.count(word)) return true;
  if (depth == 0) return false;
  for (const auto& s : suffixes) {
    if (word.size() > s.size() && word.ends_with(s) &&
        brute_force_derivable(word.substr(0, word.size() - s.size()), lexicon, suffixes,
                              depth - 1)) {
      return true;
    }
  }
  return false;
}

TEST_SUITE("morphology") {

TEST_CASE("direct membership and empty lexicon") {
  const AnalyzabilityOracle oracle({"yüzüne"}, {});
  CHECK(oracle.is_analyzable("yüzüne"));
  CHECK(oracle.is_analyzable("Yüzüne"));
  CHECK_FALSE(AnalyzabilityOracle({}, {}).is_analyzable("qqq"));
}

TEST_CASE("evlerden derives from ev + ler + den") {
  const AnalyzabilityOracle oracle({"ev"}, rules({{"ler", "any"}, {"den", "any"}}));
  CHECK(oracle.is_analyzable("evlerden"));
  CHECK(oracle.is_analyzable("evler"));
  CHECK(oracle.is_analyzable("evden"));
  CHECK_FALSE(oracle.is_analyzable("evlerdenx"));
  CHECK_FALSE(oracle.is_analyzable("ler"));
}

TEST_CASE("suffix depth is bounded") {
  const AnalyzabilityOracle shallow({"ev"}, rules({{"ler", "any"}}), 2);
  CHECK(shallow.is_analyzable("evlerler"));
  CHECK_FALSE(shallow.is_analyzable("evlerlerler"));
}

TEST_CASE("predicates gate suffixes") {
  const auto r = rules({{"ler", "front"}, {"lar", "back"}, {"ya", "back+vowel-final"},
                        {"ta", "back+voiceless-final"}, {"da", "back+voiced-final"}});
  const AnalyzabilityOracle oracle({"ev", "masa", "kitap", "okul"}, r);
  CHECK(oracle.is_analyzable("evler"));
  CHECK_FALSE(oracle.is_analyzable("evlar"));
  CHECK(oracle.is_analyzable("masalar"));
  CHECK(oracle.is_analyzable("masaya"));
  CHECK_FALSE(oracle.is_analyzable("kitapya"));
  CHECK(oracle.is_analyzable("kitapta"));
  CHECK_FALSE(oracle.is_analyzable("kitapda"));
  CHECK(oracle.is_analyzable("okulda"));
  CHECK_THROWS_AS(make_stem_predicate("sideways"), ConfigError);
}

TEST_CASE("default rules cover plural and case endings") {
  const AnalyzabilityOracle oracle({"ev", "kitap", "göz"}, default_suffix_rules());
  for (const char* w : {"evler", "evlerde", "evlerden", "kitaplar", "kitapta", "gözü", "eve"}) {
    CHECK_MESSAGE(oracle.is_analyzable(w), w);
  }
  for (const char* w : {"evlar", "kitapda", "gözı"}) CHECK_MESSAGE(!oracle.is_analyzable(w), w);
  std::ifstream shipped(testing::data_dir() / "suffix_rules.tsv");
  REQUIRE(shipped);
  const auto from_file = read_suffix_rules(shipped);
  const auto built_in = default_suffix_rules();
  REQUIRE(from_file.size() == built_in.size());
  for (std::size_t i = 0; i < built_in.size(); ++i) {
    CHECK(from_file[i].suffix == built_in[i].suffix);
    CHECK(from_file[i].predicate_name == built_in[i].predicate_name);
  }
}

TEST_CASE("agrees with brute-force decomposition when predicates are trivial") {
  std::mt19937 rng(17);
  const std::vector<std::string> suffixes = {"a", "ab", "ba", "bb"};
  const auto r = rules({{"a", "any"}, {"ab", "any"}, {"ba", "any"}, {"bb", "any"}});
  std::set<std::string> lexicon;
  for (int k = 0; k < 20; ++k) lexicon.insert(testing::random_word(rng, U"ab", 1, 3));
  const AnalyzabilityOracle oracle({lexicon.begin(), lexicon.end()}, r, 3);
  for (int k = 0; k < 3000; ++k) {
    const std::string w = testing::random_word(rng, U"ab", 1, 9);
    CHECK(oracle.is_analyzable(w) == brute_force_derivable(w, lexicon, suffixes, 3));
  }
}

TEST_CASE("load_lexicon collapses duplicates and rejects missing files") {
  const auto path = std::filesystem::temp_directory_path() / "gecsynth_lex.txt";
  std::ofstream(path) << "ev\nkedi\nev\n";
  CHECK(load_lexicon(path).lexicon_size() == 2);
  std::ofstream(path, std::ios::trunc).flush();
  const auto empty = load_lexicon(path, default_suffix_rules());
  CHECK(empty.lexicon_size() == 0);
  CHECK_FALSE(empty.is_analyzable("evler"));
  CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.txt"), ConfigError);
}

TEST_CASE("self-acceptance of the toy lexicon and of a generated 50k lexicon") {
  std::ifstream toy(testing::data_dir() / "toy" / "lexicon.txt");
  std::vector<std::string> toy_words;
  for (std::string line; std::getline(toy, line);) toy_words.push_back(line);
  REQUIRE(toy_words.size() >= 400);
  const AnalyzabilityOracle toy_oracle(toy_words, default_suffix_rules());
  for (const auto& w : toy_words) CHECK(toy_oracle.is_analyzable(w));

  std::mt19937 rng(50000);
  std::set<std::string> big;
  while (big.size() < 50000) big.insert(testing::random_word(rng, testing::turkish_letters(), 2, 10));
  const std::vector<std::string> words(big.begin(), big.end());
  const AnalyzabilityOracle oracle(words, default_suffix_rules());
  CHECK(oracle.lexicon_size() == 50000);
  std::size_t rejected = 0;
  for (const auto& w : words) rejected += !oracle.is_analyzable(w);
  CHECK(rejected == 0);
}

TEST_CASE("verdicts are monotone in the lexicon and pure") {
  std::mt19937 rng(23);
  std::vector<std::string> small, large;
  for (int k = 0; k < 200; ++k) {
    const auto w = testing::random_word(rng, U"aeılr", 1, 4);
    large.push_back(w);
    if (k % 2 == 0) small.push_back(w);
  }
  const AnalyzabilityOracle a(small, default_suffix_rules());
  const AnalyzabilityOracle b(large, default_suffix_rules());
  for (int k = 0; k < 5000; ++k) {
    const auto w = testing::random_word(rng, U"aeılrd", 1, 9);
    if (a.is_analyzable(w)) CHECK(b.is_analyzable(w));
  }
  const bool first = b.is_analyzable("alerler");
  bool stable = true;
  for (int k = 0; k < 10000; ++k) stable = stable && b.is_analyzable("alerler") == first;
  CHECK(stable);
}

}  // TEST_SUITE
}  // namespace
}  // namespace gecsynth
