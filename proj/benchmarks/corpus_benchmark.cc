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

#include "gecsynth/corpus.h"

namespace gecsynth {
namespace {

std::vector<Document> synthetic_corpus(std::size_t docs) {
  static const char* words[] = {"ev", "okul", "güzel", "Ankara'da", "çok", "bugün", "yarın",
                                "kitap", "ıslak", "İzmir", "gidiyorum", "herşey", "bir", "ve"};
  std::mt19937 rng(1);
  std::vector<Document> corpus;
  for (DocId id = 0; id < docs; ++id) {
    std::string text;
    for (int t = 0; t < 20; ++t) {
      text += words[rng() % std::size(words)];
      text += t % 7 == 6 ? ". " : " ";
    }
    corpus.push_back({id, normalize(text)});
  }
  return corpus;
}

void BM_BuildWordIndex(benchmark::State& state) {
  const auto corpus = synthetic_corpus(static_cast<std::size_t>(state.range(0)));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_word_index(corpus, workers));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildWordIndex)
    ->Args({10000, 1})
    ->Args({10000, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_TokenizeWords(benchmark::State& state) {
  const auto corpus = synthetic_corpus(1000);
  for (auto _ : state) {
    for (const auto& d : corpus) benchmark::DoNotOptimize(tokenize_words(d.text));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_TokenizeWords);

void BM_SplitSentences(benchmark::State& state) {
  const auto corpus = synthetic_corpus(1000);
  const SentenceSplitter splitter;
  for (auto _ : state) {
    for (const auto& d : corpus) benchmark::DoNotOptimize(splitter.split(d.text));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SplitSentences);

}  // namespace
}  // namespace gecsynth
