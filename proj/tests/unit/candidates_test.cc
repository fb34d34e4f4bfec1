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

#include "gecsynth/candidates.h"
#include "gecsynth/text.h"
#include "oracles.h"

namespace gecsynth {
namespace {

using Words = std::vector<std::string>;

AnalyzabilityOracle toy_oracle() {
  std::ifstream in(testing::data_dir() / "toy" / "lexicon.txt");
  std::vector<std::string> words;
  for (std::string line; std::getline(in, line);) words.push_back(line);
  return AnalyzabilityOracle(words, default_suffix_rules());
}

// Accepts everything.
class Anything : public Analyzer {
 public:
  bool is_analyzable(std::string_view) const override { return true; }
};

TEST_SUITE("candidates") {

TEST_CASE("ambiguous pair table") {
  const auto& table = ambiguous_pairs();
  CHECK(table.groups().size() == 12);
  CHECK(table.group_of(U'ş') == U"sş");
  CHECK(table.group_of(U'İ') == U"Iİ");
  CHECK(table.group_of(U'ı') == table.group_of(U'i'));
  CHECK(table.group_of(U'ı').size() == 2);
  CHECK(table.group_of(U'x').empty());
  std::set<char32_t> seen;
  for (const auto& g : table.groups()) {
    CHECK(g.size() >= 2);
    for (char32_t c : g) CHECK(seen.insert(c).second);
  }
  CHECK(spelling_alphabet().size() == 30);
}

TEST_CASE("deasciify examples") {
  const AnalyzabilityOracle lexicon({"yüzüne"}, {});
  CHECK(deasciify_candidates("yuzune", lexicon).candidates == Words{"yüzüne"});
  CHECK(deasciify_candidates("qqq", lexicon).candidates.empty());
  const AnalyzabilityOracle masa({"masa", "maşa"}, {});
  CHECK(deasciify_candidates("masa", masa).candidates == Words{"maşa"});
}

TEST_CASE("deasciify enumerates the full product minus the word") {
  const Anything any;
  const CandidateSet set = deasciify_candidates("cogu", any);
  CHECK(set.candidates.size() == 15);  // 2^4 - 1
  CHECK(std::is_sorted(set.candidates.begin(), set.candidates.end()));
  CHECK(std::find(set.candidates.begin(), set.candidates.end(), "çoğu") != set.candidates.end());
  CHECK(std::find(set.candidates.begin(), set.candidates.end(), "cogu") == set.candidates.end());
}

TEST_CASE("deasciify cap skips the word") {
  const Anything any;
  const CandidateSet capped = deasciify_candidates("cogucogucogu", any, {.deasciify_cap = 11});
  CHECK(capped.capped);
  CHECK(capped.candidates.empty());
  CHECK_FALSE(deasciify_candidates("cogu", any, {.deasciify_cap = 4}).capped);
  const Resolution r = resolve("cogucogucogu", AnalyzabilityOracle({}, {}), {.deasciify_cap = 11});
  CHECK(r.capped);
  CHECK_FALSE(r.entry);
}

TEST_CASE("spell candidates examples") {
  const AnalyzabilityOracle lexicon({"problem", "orijinalinde"}, {});
  CHECK(spell_candidates("broblem", lexicon).candidates == Words{"problem"});
  CHECK(spell_candidates("orjinalinde", lexicon).candidates == Words{"orijinalinde"});
  const auto raw = single_edits("abc");
  CHECK(std::is_sorted(raw.begin(), raw.end()));
  for (const auto& c : raw) {
    CHECK(testing::damerau_distance(U"abc", text::decode(c)) == 1);
  }
  CHECK(std::find(raw.begin(), raw.end(), "bac") != raw.end());
  CHECK(std::find(raw.begin(), raw.end(), "ab'c") != raw.end());
}

TEST_CASE("spell candidates match an independent edit enumeration") {
  std::mt19937 rng(1000);
  const std::u32string alphabet = U"abcçdefgğhıijklmnoöprsştuüvyz'";
  for (int n = 0; n < 300; ++n) {
    const std::string w = testing::random_word(rng, alphabet, 1, 7);
    const auto raw = single_edits(w);
    const auto expected = testing::edits1(w, alphabet);
    CHECK(std::set<std::string>(raw.begin(), raw.end()) == expected);
    CHECK(raw.size() == expected.size());
  }
}

TEST_CASE("resolve precedence and uniqueness") {
  const AnalyzabilityOracle toy = toy_oracle();
  auto r = resolve_unique("yuzune", toy);
  REQUIRE(r);
  CHECK(r->correct == TokenSeq{"yüzüne"});
  CHECK(r->provenance == Provenance::kDeasciifier);
  r = resolve_unique("broblem", toy);
  REQUIRE(r);
  CHECK(r->correct == TokenSeq{"problem"});
  CHECK(r->provenance == Provenance::kSpellChecker);
  r = resolve_unique("orjinalinde", toy);
  REQUIRE(r);
  CHECK(r->correct == TokenSeq{"orijinalinde"});

  const AnalyzabilityOracle two({"masa", "maşa", "kaşı", "kası"}, {});
  CHECK_FALSE(resolve_unique("kasi", two));  // two deasciified variants
  CHECK_FALSE(resolve_unique("masa", two));  // already analyzable

  // The spell checker is not consulted when the deasciifier found several.
  const AnalyzabilityOracle mixed({"kaşı", "kası", "kasir"}, {});
  CHECK_FALSE(resolve_unique("kasi", mixed));
  // ...and wins when the deasciifier found none.
  const AnalyzabilityOracle spell_only({"kasir"}, {});
  CHECK(resolve_unique("kasi", spell_only)->correct == TokenSeq{"kasir"});
  const AnalyzabilityOracle ambiguous_spell({"kasir", "kasik"}, {});
  CHECK_FALSE(resolve_unique("kasi", ambiguous_spell));
}

TEST_CASE("resolve agrees with the reference resolver") {
  const AnalyzabilityOracle toy = toy_oracle();
  std::mt19937 rng(31);
  std::ifstream in(testing::data_dir() / "toy" / "lexicon.txt");
  std::vector<std::string> words;
  for (std::string line; std::getline(in, line);) words.push_back(line);
  for (int n = 0; n < 400; ++n) {
    // Corrupt a lexicon word by one random edit or by stripping diacritics.
    std::u32string w = text::decode(words[rng() % words.size()]);
    const std::size_t pos = rng() % w.size();
    switch (rng() % 3) {
      case 0: w.erase(pos, 1); break;
      case 1: w[pos] = U"aeiklmnr"[rng() % 8]; break;
      default:
        for (auto& c : w) {
          if (c == U'ş') c = U's';
          if (c == U'ü') c = U'u';
          if (c == U'ç') c = U'c';
        }
    }
    if (w.empty()) continue;
    const std::string word = text::encode(w);
    const auto got = resolve_unique(word, toy);
    const auto want = testing::reference_resolve(word, toy);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->correct == want->correct);
      CHECK(got->provenance == want->provenance);
      CHECK(toy.is_analyzable(got->correct[0]));
      CHECK(got->correct != got->incorrect);
    }
  }
}

}  // TEST_SUITE
}  // namespace
}  // namespace gecsynth
