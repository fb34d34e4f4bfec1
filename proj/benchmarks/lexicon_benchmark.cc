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

#include <benchmark/benchmark.h>

#include <random>

#include "gecsynth/inserter.h"
#include "gecsynth/lexicon.h"

namespace gecsynth {
namespace {

std::string word(std::mt19937& rng) {
  static const char* syllables[] = {"ka", "le", "mı", "şu", "ro", "te", "gü", "ça"};
  std::string w;
  for (int k = 2 + static_cast<int>(rng() % 3); k > 0; --k) w += syllables[rng() % 8];
  return w;
}

SpellingDictionary dictionary(std::size_t size, std::mt19937& rng) {
  SpellingDictionary d;
  while (d.size() < size) {
    TokenSeq key{word(rng)};
    if (rng() % 10 == 0) key.push_back(word(rng));
    d.insert({key, {word(rng)}, Provenance::kManual, 0});
  }
  return d;
}

void BM_LookupLongest(benchmark::State& state) {
  std::mt19937 rng(2);
  const SpellingDictionary d = dictionary(static_cast<std::size_t>(state.range(0)), rng);
  std::vector<std::string> tokens;
  for (int t = 0; t < 256; ++t) tokens.push_back(word(rng));
  for (auto _ : state) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      benchmark::DoNotOptimize(d.lookup_longest(tokens, i));
    }
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_LookupLongest)->Arg(1000)->Arg(100000);

void BM_CleanInsert(benchmark::State& state) {
  std::mt19937 rng(3);
  const SpellingDictionary d = dictionary(50000, rng);
  std::vector<std::string> sentences;
  for (int s = 0; s < 200; ++s) {
    std::string text;
    for (int t = 0; t < 15; ++t) text += word(rng) + (t == 14 ? "." : " ");
    sentences.push_back(text);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_parallel_corpus(sentences, d));
  }
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_CleanInsert);

}  // namespace
}  // namespace gecsynth
