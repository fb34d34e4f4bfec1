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

#include "gecsynth/candidates.h"

namespace gecsynth {
namespace {

const AnalyzabilityOracle& oracle() {
  static const AnalyzabilityOracle o(
      {"yüzüne", "problem", "orijinalinde", "çağıracağım", "güzel", "şeker"},
      default_suffix_rules());
  return o;
}

void BM_SingleEdits(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(single_edits("orjinalinde"));
  }
}
BENCHMARK(BM_SingleEdits);

void BM_DeasciifyCandidates(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(deasciify_candidates("cagiracagim", oracle()));
  }
}
BENCHMARK(BM_DeasciifyCandidates);

void BM_Resolve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(resolve("broblem", oracle()));
    benchmark::DoNotOptimize(resolve("yuzune", oracle()));
  }
}
BENCHMARK(BM_Resolve);

}  // namespace
}  // namespace gecsynth
