// Copyright 2026 The mirrorstate Authors
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

#include "mirrorstate/mirrorstate.hpp"

using namespace mirrorstate;

namespace {

void BM_MirrorState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(states::mirror_state(n));
}
BENCHMARK(BM_MirrorState)->DenseRange(1, states::kMaxHalfSize);

void BM_MirrorFromCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(states::mirror_from_circuit(n));
}
BENCHMARK(BM_MirrorFromCircuit)->DenseRange(1, states::kMaxHalfSize);

// two-qubit gate in the middle of a 2N-qubit register
void BM_ApplyUnitary(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const StateVector psi = random_state(q, 1);
  const auto gate = gates::cnot(q / 2, q / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_unitary(psi, gate));
}
BENCHMARK(BM_ApplyUnitary)->DenseRange(2, kMaxQubits, 2);

void BM_PartialTranspose(benchmark::State& state) {
  const DensityMatrix rho = DensityMatrix::pure(states::mirror_state(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(rho, {1, 2}));
}
BENCHMARK(BM_PartialTranspose)->DenseRange(2, 4);

void BM_TeleportEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = protocols::build_correction_table(n);
  const StateVector input = random_state(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(protocols::teleport(input, table, Enumerate{}));
}
BENCHMARK(BM_TeleportEnumerate)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_QisSplit(benchmark::State& state) {
  const StateVector secret = protocols::qis_reference_secret(2);
  const StateVector channel = states::mirror_state(3);
  const auto layout = protocols::default_qis_layout();
  for (auto _ : state) benchmark::DoNotOptimize(protocols::qis_split(secret, channel, layout));
}
BENCHMARK(BM_QisSplit)->Unit(benchmark::kMillisecond);

void BM_NegativityTable(benchmark::State& state) {
  const StateVector zeta = states::mirror_state(2);
  const decoherence::DephasingParams params{{0.9, 0.7, 0.5, 0.3}, {0.1, 0.2, 0.3, 0.4}};
  for (auto _ : state) benchmark::DoNotOptimize(decoherence::negativity_table(zeta, params));
}
BENCHMARK(BM_NegativityTable);

void BM_CriticalGamma(benchmark::State& state) {
  const StateVector zeta = states::mirror_state(2);
  for (auto _ : state) benchmark::DoNotOptimize(decoherence::critical_gamma(zeta, {1, 4}));
}
BENCHMARK(BM_CriticalGamma)->Unit(benchmark::kMillisecond);

void BM_MaxBipartiteEntropy(benchmark::State& state) {
  const StateVector cluster = states::cluster_state(6);
  for (auto _ : state) benchmark::DoNotOptimize(metrics::max_bipartite_entropy(cluster, 3));
}
BENCHMARK(BM_MaxBipartiteEntropy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
