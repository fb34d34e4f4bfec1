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

#include <random>
#include <sstream>

#include "gecsynth/corpus.h"
#include "gecsynth/inserter.h"
#include "oracles.h"

namespace gecsynth {
namespace {

using Tokens = std::vector<std::string>;

SpellingDictionary dict(std::initializer_list<std::pair<TokenSeq, TokenSeq>> pairs) {
  SpellingDictionary d;
  for (const auto& [a, b] : pairs) d.insert({a, b, Provenance::kManual, 0});
  return d;
}

TEST_SUITE("inserter") {

TEST_CASE("herşey becomes her şey") {
  const ParallelPair p = clean_insert("herşey iyi", dict({{{"herşey"}, {"her", "şey"}}}));
  CHECK(p.source == "herşey iyi");
  CHECK(p.corrected == "her şey iyi");
  REQUIRE(p.edits.size() == 1);
  CHECK(p.edits[0].start == 0);
  CHECK(p.edits[0].end == 1);
  CHECK(p.edits[0].replacement == Tokens{"her", "şey"});
}

TEST_CASE("no hits is the identity") {
  const ParallelPair p = clean_insert("Bugün hava güzel.", dict({{{"herşey"}, {"her", "şey"}}}));
  CHECK(p.corrected == p.source);
  CHECK(p.edits.empty());
}

TEST_CASE("inserted text is not re-scanned") {
  const auto d = dict({{{"a"}, {"b"}}, {{"b"}, {"c"}}});
  CHECK(clean_insert("a", d).corrected == "b");
  CHECK(clean_insert("a b", d).corrected == "b c");
  const auto loop = dict({{{"x"}, {"y"}}, {{"y"}, {"x"}}});
  CHECK(clean_insert("x y x", loop).corrected == "y x y");
}

TEST_CASE("longest phrase wins and punctuation re-attaches") {
  const auto d = dict({{{"yapa"}, {"yap"}}, {{"yapa", "bilirim"}, {"yapabilirim"}}});
  const ParallelPair p = clean_insert("Bunu yapa bilirim, yapa.", d);
  CHECK(p.corrected == "Bunu yapabilirim, yap.");
  REQUIRE(p.edits.size() == 2);
  CHECK(p.edits[0].start == 1);
  CHECK(p.edits[0].end == 3);
  CHECK(p.edits[1].start == 4);
}

TEST_CASE("case-folded match keeps the initial capital") {
  const auto d = dict({{{"yuzune"}, {"yüzüne"}}, {{"matrixten"}, {"Matrix'ten"}}});
  CHECK(clean_insert("Yuzune baktı.", d).corrected == "Yüzüne baktı.");
  CHECK(clean_insert("o yuzune baktı", d).corrected == "o yüzüne baktı");
  CHECK(clean_insert("Matrixten çıktı", d).corrected == "Matrix'ten çıktı");
  const auto turkish = dict({{{"iyimi"}, {"iyi", "mi"}}});
  CHECK(clean_insert("İyimi", turkish).corrected == "İyi mi");
}

TEST_CASE("parallel corpus keeps every sentence in order") {
  const auto d = dict({{{"herşey"}, {"her", "şey"}}});
  const Tokens sentences = {"bir", "herşey iyi", "üç"};
  const auto pairs = build_parallel_corpus(sentences, d, 2);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].edits.empty());
  CHECK_FALSE(pairs[1].edits.empty());
  CHECK(pairs[2].edits.empty());
  CHECK(pairs[2].source == "üç");
  CHECK(build_parallel_corpus({}, d).empty());

  std::ostringstream out;
  write_parallel_tsv(pairs, out);
  CHECK(out.str() == "bir\tbir\nherşey iyi\ther şey iyi\nüç\tüç\n");
  std::istringstream in(out.str());
  const auto read = read_parallel_tsv(in);
  REQUIRE(read.size() == 3);
  CHECK(read[1].corrected == "her şey iyi");
}

TEST_CASE("fuzzed sentences reconstruct, match the reference and are deterministic") {
  std::mt19937 rng(1000);
  const std::u32string alphabet = U"abAB";
  std::vector<SpellingEntry> entries;
  SpellingDictionary d;
  for (int k = 0; k < 30; ++k) {
    TokenSeq key, fix;
    for (int t = 1 + static_cast<int>(rng() % 2); t > 0; --t) {
      key.push_back(testing::random_word(rng, alphabet, 1, 2));
    }
    for (int t = 1 + static_cast<int>(rng() % 3); t > 0; --t) {
      fix.push_back(rng() % 6 == 0 ? "," : testing::random_word(rng, U"abcd", 1, 3));
    }
    d.insert(SpellingEntry{key, fix, Provenance::kManual, 0});
  }
  // Canonical key order, so the reference breaks folded ties the same way.
  for (const auto& [key, e] : d.entries()) entries.push_back(e);
  for (int n = 0; n < 1000; ++n) {
    std::string sentence;
    for (int t = 0; t < 8; ++t) {
      if (!sentence.empty()) sentence += rng() % 5 == 0 ? ", " : " ";
      sentence += testing::random_word(rng, alphabet, 1, 2);
    }
    sentence += ".";
    const ParallelPair p = clean_insert(sentence, d);
    const Tokens src = tokenize_words(p.source);
    CHECK(apply_edits(src, p.edits) == tokenize_words(p.corrected));
    CHECK(tokenize_words(p.corrected) == testing::reference_substitute(src, entries));
    CHECK(clean_insert(sentence, d) == p);
    long delta = 0;
    for (std::size_t i = 0; i < p.edits.size(); ++i) {
      if (i > 0) CHECK(p.edits[i - 1].end <= p.edits[i].start);
      delta += static_cast<long>(p.edits[i].replacement.size()) -
               (p.edits[i].end - p.edits[i].start);
    }
    CHECK(static_cast<long>(tokenize_words(p.corrected).size()) ==
          static_cast<long>(src.size()) + delta);
  }
}

TEST_CASE("idempotent when no correction contains a key") {
  const auto d = dict({{{"herşey"}, {"her", "şey"}}, {{"broblem"}, {"problem"}}});
  for (const char* s : {"herşey broblem", "Broblem yok.", "her şey"}) {
    const std::string once = clean_insert(s, d).corrected;
    CHECK(clean_insert(once, d).corrected == once);
  }
}

}  // TEST_SUITE
}  // namespace
}  // namespace gecsynth
