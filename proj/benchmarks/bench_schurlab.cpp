// Copyright 2026 The schurlab Authors
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

#include "schurlab/cbnorm.hpp"
#include "schurlab/random.hpp"
#include "schurlab/transference.hpp"

using namespace schurlab;

namespace {

FiniteGroup group_for(int64_t which) {
  switch (which) {
    case 0: return make_cyclic(2);
    case 1: return make_cyclic(4);
    default: return make_symmetric(3);
  }
}

void BM_TakaiPhi(benchmark::State& state) {
  const GroupAction a = translation_action(group_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(takai_phi(a));
}
BENCHMARK(BM_TakaiPhi)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Sbar(benchmark::State& state) {
  const GroupAction a = translation_action(group_for(state.range(0)));
  const CrossedProductModel m = build_crossed_product(a);
  const DualityIso phi = takai_phi(a);
  Rng rng(7);
  HsSymbol f;
  for (int r = 0; r < a.group().order(); ++r) f.fibers.push_back(random_map_on(a.algebra(), rng));
  const CMatrix s = hs_map(m, f);
  for (auto _ : state) benchmark::DoNotOptimize(sbar(m, phi, s));
}
BENCHMARK(BM_Sbar)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SchurCbNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(11);
  const CMatrix grid = random_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(schur_cb_norm(grid));
}
BENCHMARK(BM_SchurCbNorm)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
