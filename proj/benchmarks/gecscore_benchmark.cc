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

#include "gecsynth/gecscore.h"

namespace gecsynth {
namespace {

std::vector<std::string> sentence(std::mt19937& rng, std::size_t length) {
  static const char* vocab[] = {"bu", "bir", "cümle", "ve", "ama", ".", ",", "Ev", "ev", "gel"};
  std::vector<std::string> out(length);
  for (auto& t : out) t = vocab[rng() % std::size(vocab)];
  return out;
}

void BM_Align(benchmark::State& state) {
  std::mt19937 rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto src = sentence(rng, n);
  const auto tgt = sentence(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(align(src, tgt));
  }
}
BENCHMARK(BM_Align)->Arg(16)->Arg(64)->Arg(256);

void BM_Score(benchmark::State& state) {
  std::mt19937 rng(5);
  std::vector<M2Document> gold, hyp;
  for (int d = 0; d < 2000; ++d) {
    const auto src = sentence(rng, 20);
    const auto a = sentence(rng, 20);
    const auto b = sentence(rng, 20);
    gold.push_back({src, annotate(src, a)});
    hyp.push_back({src, annotate(src, b)});
  }
  const auto mode = static_cast<ScoreMode>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(score(gold, hyp, mode));
  }
  state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_Score)->DenseRange(0, 2);

}  // namespace
}  // namespace gecsynth
