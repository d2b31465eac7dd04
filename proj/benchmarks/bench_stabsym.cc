// Copyright 2026 The stabsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "stabsym/moments.h"
#include "stabsym/polytope1.h"
#include "stabsym/symmetry.h"

using namespace stabsym;

static void BM_EnumerateLabels(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_stabilizer_labels(d, n));
}
BENCHMARK(BM_EnumerateLabels)->Args({3, 1})->Args({5, 1})->Args({3, 2});

static void BM_GramClosedForm(benchmark::State& state) {
  auto labels = enumerate_stabilizer_labels(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_gram(labels));
}
BENCHMARK(BM_GramClosedForm)->Unit(benchmark::kMillisecond);

static void BM_PhasePoint(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  PhaseVector a = PhaseVector::from_index(d, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(phase_point(a));
}
BENCHMARK(BM_PhasePoint)->Args({3, 1})->Args({5, 1})->Args({3, 2});

static void BM_Automorphisms(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  GramMatrix g = build_gram(enumerate_stabilizer_labels(d, n));
  for (auto _ : state) benchmark::DoNotOptimize(gram_automorphisms(g));
}
BENCHMARK(BM_Automorphisms)->Args({3, 1})->Args({5, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_SchreierSims(benchmark::State& state) {
  GramMatrix g = build_gram(enumerate_stabilizer_labels(3, 2));
  auto gens = gram_automorphisms(g).generators;
  for (auto _ : state) benchmark::DoNotOptimize(PermGroup(g.size, gens).order());
}
BENCHMARK(BM_SchreierSims)->Unit(benchmark::kMillisecond);

static void BM_Complex2Design(benchmark::State& state) {
  OperatorSet q;
  for (const auto& l : enumerate_stabilizer_labels(3, 2)) q.elements.push_back(projector(l));
  auto basis = hermitian_basis(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_complex_2design(q, basis));
}
BENCHMARK(BM_Complex2Design)->Unit(benchmark::kMillisecond);

static void BM_FacetCheck(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_facets(d));
}
BENCHMARK(BM_FacetCheck)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
