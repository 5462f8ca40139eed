// Copyright 2026 The Authors.
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

#include "divcom/algorithms.h"
#include "divcom/datagen.h"
#include "divcom/matroid.h"
#include "divcom/objectives.h"
#include "divcom/query_oracle.h"

namespace divcom {
namespace {

ApprovalProfile Election(int n, int m) {
  return ResampleElection({.q = 0.0891, .phi = 0.693, .num_voters = n,
                           .num_candidates = m, .seed = 1});
}

void BM_Greedy(benchmark::State& state) {
  const ApprovalProfile profile = Election(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Greedy(profile, 8).covered);
  }
}
BENCHMARK(BM_Greedy)->Args({1000, 400})->Args({10000, 400});

void BM_LocalSearch(benchmark::State& state) {
  const ApprovalProfile profile = Election(state.range(0), state.range(1));
  const AlphaSequence alphas(8);
  const UniformMatroid matroid(profile.num_candidates(), 8);
  const double beta = LocalSearchStep(0.85, 8, 1.0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        LocalSearchBeta(profile, matroid, beta, alphas, seed++).covered);
  }
}
BENCHMARK(BM_LocalSearch)->Args({1000, 400})->Unit(benchmark::kMillisecond);

void BM_GreedyIncomplete(benchmark::State& state) {
  const ApprovalProfile profile = Election(1000, 400);
  const std::int64_t ell = state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    QueryOracle oracle = QueryOracle::Exact(profile, seed++);
    benchmark::DoNotOptimize(
        GreedyIncomplete(oracle, {.k = 8, .query_size = 20,
                                  .sample_override = ell})
            .covered);
  }
}
BENCHMARK(BM_GreedyIncomplete)->Arg(5)->Arg(326)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace divcom

BENCHMARK_MAIN();
