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

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "gecsynth/corpus.h"
#include "gecsynth/text.h"
#include "oracles.h"

namespace gecsynth {
namespace {

using Tokens = std::vector<std::string>;

std::vector<Document> docs(std::initializer_list<const char*> texts) {
  std::vector<Document> out;
  DocId id = 0;
  for (const char* t : texts) out.push_back({id++, t});
  return out;
}

std::string sorted_non_space(std::string_view s) {
  std::u32string cps;
  for (char32_t c : text::decode(s)) {
    if (!text::is_space(c)) cps.push_back(c);
  }
  std::sort(cps.begin(), cps.end());
  return text::encode(cps);
}

TEST_SUITE("corpus") {

TEST_CASE("normalize collapses whitespace and composes") {
  CHECK(normalize("a  b ") == "a b");
  CHECK(normalize("") == "");
  CHECK(normalize("u\xCC\x88") == "\xC3\xBC");  // u + U+0308 -> ü
  CHECK(normalize("\t a\r\n\tb\x07 ") == "a b");
  CHECK(normalize("\xEF\xBB\xBFmerhaba") == "merhaba");
}

TEST_CASE("normalize is idempotent on random strings") {
  std::mt19937 rng(7);
  const std::u32string alphabet = U"aıiİIüü \t\n.,'  x\u0007";
  for (int n = 0; n < 2000; ++n) {
    const std::string s = testing::random_word(rng, alphabet, 0, 20);
    const std::string once = normalize(s);
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("tokenize_words") {
  CHECK(tokenize_words("Matrix'ten güzel.") == Tokens{"Matrix'ten", "güzel", "."});
  CHECK(tokenize_words("").empty());
  CHECK(tokenize_words("herşey iyi") == Tokens{"herşey", "iyi"});
  CHECK(tokenize_words("a,b?!") == Tokens{"a", ",", "b", "?", "!"});
  CHECK(tokenize_words("3.5 kg") == Tokens{"3", ".", "5", "kg"});
  CHECK(tokenize_words("Ankara’da") == Tokens{"Ankara’da"});
}

TEST_CASE("detokenize re-attaches punctuation") {
  CHECK(detokenize(Tokens{"Geldim", ",", "gittim", "."}) == "Geldim, gittim.");
  CHECK(detokenize(Tokens{"(", "bak", ")", "!"}) == "(bak)!");
  CHECK(detokenize(Tokens{}) == "");
}

TEST_CASE("split_sentences") {
  CHECK(split_sentences("Geldim. Gittim.") == Tokens{"Geldim.", "Gittim."});
  CHECK(split_sentences("Dr. Ali geldi.") == Tokens{"Dr. Ali geldi."});
  CHECK(split_sentences("merhaba") == Tokens{"merhaba"});
  CHECK(split_sentences("Ne? Evet! 3 kişi geldi… Sonra gittiler.") ==
        Tokens{"Ne?", "Evet!", "3 kişi geldi…", "Sonra gittiler."});
  CHECK(split_sentences("geldim. ve gittim.") == Tokens{"geldim. ve gittim."});
  CHECK(split_sentences("\"Geldim.\" Sonra gittim.") ==
        Tokens{"\"Geldim.\"", "Sonra gittim."});
  CHECK(split_sentences("").empty());
}

TEST_CASE("splitter abbreviations are configurable") {
  SentenceSplitter none(std::set<std::string>{});
  CHECK(none.split("Dr. Ali geldi.") == Tokens{"Dr.", "Ali geldi."});
  SentenceSplitter custom(std::set<std::string>{"vb"});
  CHECK(custom.split("Elma vb. Armut.") == Tokens{"Elma vb. Armut."});
  const auto path = std::filesystem::temp_directory_path() / "gecsynth_abbrev.txt";
  std::ofstream(path) << "Sn.\n# comment\nvs\n";
  const SentenceSplitter loaded = SentenceSplitter::from_file(path);
  CHECK(loaded.split("Sn. Yılmaz geldi.") == Tokens{"Sn. Yılmaz geldi."});
  CHECK(loaded.split("Elma vs. Armut.") == Tokens{"Elma vs. Armut."});
  CHECK(loaded.split("Dr. Ali geldi.") == Tokens{"Dr.", "Ali geldi."});
}

TEST_CASE("splitter preserves non-space characters") {
  std::mt19937 rng(11);
  const std::u32string alphabet = U"abcÇİIı .!?…\"'0";
  for (int n = 0; n < 2000; ++n) {
    const std::string s = normalize(testing::random_word(rng, alphabet, 0, 40));
    const auto parts = split_sentences(s);
    std::string joined;
    for (const auto& p : parts) joined += p + " ";
    CHECK(sorted_non_space(joined) == sorted_non_space(s));
    for (const auto& p : parts) CHECK(!p.empty());
  }
}

TEST_CASE("dedup") {
  CHECK(dedup(Tokens{"a", "b", "a"}) == Tokens{"a", "b"});
  CHECK(dedup(Tokens{}).empty());
  CHECK(dedup(Tokens{"a ", "a"}) == Tokens{"a"});
  std::mt19937 rng(3);
  for (int n = 0; n < 200; ++n) {
    Tokens in;
    for (int k = 0; k < 30; ++k) in.push_back(testing::random_word(rng, U"ab ", 0, 3));
    const Tokens once = dedup(in);
    CHECK(dedup(once) == once);
    CHECK(once.size() <= in.size());
  }
}

TEST_CASE("build_word_index") {
  const WordIndex index = build_word_index(docs({"ben geldim", "geldim eve"}));
  CHECK(index.size() == 3);
  CHECK(std::ranges::equal(index.postings("ben"), std::vector<DocId>{0}));
  CHECK(std::ranges::equal(index.postings("geldim"), std::vector<DocId>{0, 1}));
  CHECK(std::ranges::equal(index.postings("eve"), std::vector<DocId>{1}));
  CHECK(build_word_index({}).empty());
}

TEST_CASE("index keys are folded with Turkish rules and skip punctuation") {
  const WordIndex index = build_word_index(docs({"IRMAK İzmir , 42 !", "ırmak"}));
  CHECK(std::ranges::equal(index.postings("ırmak"), std::vector<DocId>{0, 1}));
  CHECK(index.contains("izmir"));
  CHECK_FALSE(index.contains(","));
  CHECK_FALSE(index.contains("42"));
}

TEST_CASE("index equals a naive scan on random corpora, for any worker count") {
  std::mt19937 rng(2024);
  const std::u32string alphabet = U"abçıIİ";
  std::vector<Document> corpus;
  for (DocId id = 0; id < 1000; ++id) {
    corpus.push_back({id, testing::random_word(rng, alphabet, 1, 3) + " " +
                              testing::random_word(rng, alphabet, 1, 3)});
  }
  const auto expected = testing::naive_index(corpus);
  for (unsigned workers : {1u, 3u, 8u}) {
    const WordIndex index = build_word_index(corpus, workers);
    REQUIRE(index.size() == expected.size());
    for (const auto& [word, ids] : expected) {
      CHECK(std::ranges::equal(index.postings(word), ids));
    }
  }
  std::ostringstream a, b;
  build_word_index(corpus, 1).write(a);
  build_word_index(corpus, 5).write(b);
  CHECK(a.str() == b.str());
}

TEST_CASE("index persistence round-trips and merges") {
  const WordIndex index = build_word_index(docs({"a b", "b c", "c a"}));
  std::ostringstream out;
  index.write(out);
  CHECK(out.str() == "a\t0,2\nb\t0,1\nc\t1,2\n");
  std::istringstream in(out.str());
  CHECK(WordIndex::read(in) == index);

  const WordIndex left = build_word_index(docs({"a b", "b c"}));
  std::vector<Document> right_docs = {{2, "c a"}};
  const WordIndex merged = WordIndex::merge(left, build_word_index(right_docs));
  CHECK(merged == index);
}

TEST_CASE("load_corpus reads lines and jsonl") {
  const auto dir = std::filesystem::temp_directory_path();
  std::ofstream(dir / "gecsynth_c.txt") << "  bir  iki\n\n\x01\nüç\n";
  const auto lines = load_corpus(dir / "gecsynth_c.txt");
  CHECK(lines == std::vector<Document>{{0, "bir iki"}, {1, "üç"}});
  std::ofstream(dir / "gecsynth_c.jsonl")
      << "{\"text\": \"merhaba\\tdünya\", \"url\": \"x\"}\n{\"text\": \"\"}\n{\"text\": \"son\"}\n";
  CHECK(load_corpus(dir / "gecsynth_c.jsonl") ==
        std::vector<Document>{{0, "merhaba dünya"}, {1, "son"}});
}

}  // TEST_SUITE
}  // namespace
}  // namespace gecsynth
