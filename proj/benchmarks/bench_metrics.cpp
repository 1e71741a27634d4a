// Copyright 2026 The loopnet Authors
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

#include "loopnet/metrics.hpp"
#include "loopnet/path_algebra.hpp"
#include "loopnet/theorem_lab.hpp"

namespace {

using namespace loopnet;

CirculantGraph sample_graph(int n) {
  return build_circulant(n, {1, n / 7, n / 3, max_step(n)});
}

void BM_DiameterCirculant(benchmark::State& state) {
  const CirculantGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_circulant(g));
}
BENCHMARK(BM_DiameterCirculant)->RangeMultiplier(4)->Range(64, 1 << 14);

void BM_AllSourceDiameter(benchmark::State& state) {
  const CirculantGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_source_diameter(g));
}
BENCHMARK(BM_AllSourceDiameter)->RangeMultiplier(4)->Range(64, 1024);

void BM_DiameterGgpg(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GgpgGraph g = build_ggpg(n, {n / 7, n / 3, max_step(n)});
  for (auto _ : state) benchmark::DoNotOptimize(diameter_ggpg(g));
}
BENCHMARK(BM_DiameterGgpg)->RangeMultiplier(4)->Range(64, 1 << 14);

void BM_VerifyInstance(benchmark::State& state) {
  const CirculantGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_instance(g));
}
BENCHMARK(BM_VerifyInstance)->Arg(30)->Arg(60)->Arg(120);

void BM_ShortestRep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CirculantGraph g = build_circulant(n, {1, n / 5, n / 3});
  Vertex target = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(shortest_rep(g, target));
    target = (target + 7) % n;
  }
}
BENCHMARK(BM_ShortestRep)->Arg(40)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
