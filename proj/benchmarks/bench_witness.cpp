// Copyright 2026 The witness-lab developers
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

#include "wlab/hunt.hpp"
#include "wlab/spanset.hpp"
#include "wlab/witness.hpp"

using namespace wlab;

static void BM_BuildWitness(benchmark::State& state) {
  const MapSpec spec = MapSpec::make(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_witness(spec));
  }
}
BENCHMARK(BM_BuildWitness)->Arg(3)->Arg(5)->Arg(8);

static void BM_PartialTranspose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BlockWitness w = build_witness(MapSpec::make(n, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_transpose(w.matrix, n, Subsystem::First));
  }
}
BENCHMARK(BM_PartialTranspose)->Arg(3)->Arg(8);

static void BM_EigHermitian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BlockWitness w = build_witness(MapSpec::make(n, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_hermitian(w.matrix));
  }
}
BENCHMARK(BM_EigHermitian)->Arg(3)->Arg(6)->Arg(8);

static void BM_SpanningReport(benchmark::State& state) {
  const MapSpec spec = MapSpec::make(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spanning_report(spec));
  }
}
BENCHMARK(BM_SpanningReport)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_DetectStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BlockWitness w = build_witness(MapSpec::make(n, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(detect_pptes(w, 5, 0.05, 30, 1));
  }
  state.SetItemsProcessed(state.iterations() * 5);
}
BENCHMARK(BM_DetectStep)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_MinProductExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BlockWitness w = build_witness(MapSpec::make(n, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_product_expectation(w, 5, 100, 1e-12, 7));
  }
}
BENCHMARK(BM_MinProductExpectation)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
