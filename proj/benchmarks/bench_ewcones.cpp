// Copyright 2026 The ewcones Authors
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

#include <random>

#include "ewcones/certify.hpp"
#include "ewcones/kossakowski.hpp"
#include "ewcones/linalg.hpp"
#include "ewcones/random.hpp"
#include "ewcones/so3_family.hpp"
#include "ewcones/spa.hpp"

namespace {

using namespace ewcones;

const EulerAngles kAngles{0.3, 1.1, 2.5};

void BM_HermitianEig16(benchmark::State& state) {
  const Matrix w = build_witness(OrthogonalEmbedding::from_euler(kAngles, Parity::proper)).op();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(w));
}
BENCHMARK(BM_HermitianEig16);

void BM_BuildWitness(benchmark::State& state) {
  const auto emb = OrthogonalEmbedding::from_euler(kAngles, Parity::proper);
  for (auto _ : state) benchmark::DoNotOptimize(build_witness(emb));
}
BENCHMARK(BM_BuildWitness);

void BM_BuildWitnessViaMap(benchmark::State& state) {
  const auto emb = OrthogonalEmbedding::from_euler(kAngles, Parity::proper);
  for (auto _ : state) benchmark::DoNotOptimize(build_witness_via_map(emb));
}
BENCHMARK(BM_BuildWitnessViaMap);

void BM_Twirl(benchmark::State& state) {
  const WeylSet weyl(4);
  const Witness w = build_witness(OrthogonalEmbedding::from_euler(kAngles, Parity::proper));
  for (auto _ : state) benchmark::DoNotOptimize(twirl(w, weyl));
}
BENCHMARK(BM_Twirl);

void BM_Seesaw(benchmark::State& state) {
  const Witness w = witness_from_params(make_params(1, 1, 1, 0));
  const int restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(block_positivity_min(w, restarts, kDefaultSeed));
}
BENCHMARK(BM_Seesaw)->Arg(1)->Arg(64);

void BM_Certify(benchmark::State& state) {
  const WitnessParams p = state.range(0) ? make_params(1, 1, 1, 0) : make_params(1.5, 0.5, 0.5, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(certify_decomposability(p));
}
BENCHMARK(BM_Certify)->Arg(0)->Arg(1);

void BM_SpaDecompose(benchmark::State& state) {
  const WitnessParams p = make_params(1, 1, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(spa_decompose(p));
}
BENCHMARK(BM_SpaDecompose);

}  // namespace

BENCHMARK_MAIN();
