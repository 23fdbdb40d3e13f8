// Copyright 2026 The permchan Authors
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

#include "permchan/rep_theory.hpp"

using namespace permchan;

static void BM_CharacterTableSymmetric(benchmark::State& state) {
  const auto group = make_named_group(GroupKind::symmetric, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(group));
}
BENCHMARK(BM_CharacterTableSymmetric)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_CharacterTableDihedral(benchmark::State& state) {
  const auto group = make_named_group(GroupKind::dihedral, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(group));
}
BENCHMARK(BM_CharacterTableDihedral)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

static void BM_CharacterTableCyclic(benchmark::State& state) {
  const auto group = make_named_group(GroupKind::cyclic, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(group));
}
BENCHMARK(BM_CharacterTableCyclic)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

static void BM_AmbientMultiplicities(benchmark::State& state) {
  const auto group = make_named_group(GroupKind::symmetric, static_cast<std::size_t>(state.range(0)));
  const auto table = character_table(group);
  for (auto _ : state) benchmark::DoNotOptimize(ambient_multiplicities(group, table, 3));
}
BENCHMARK(BM_AmbientMultiplicities)->DenseRange(3, 6);
