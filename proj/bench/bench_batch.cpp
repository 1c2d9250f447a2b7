// Copyright 2026 The gatesep Authors
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

// Serial reference vs OpenMP kernels over the same inputs. Set
// OMP_NUM_THREADS to control the parallel side.

#include <benchmark/benchmark.h>

#include "gatesep/batch.hpp"

namespace {

using namespace gatesep;

const Tolerance kTol;

std::vector<GateMatrix4> mixed_gates(std::size_t n) {
  auto gates = serial::generate_two_qubit(RandomKind::Separable, 1, n / 2, kTol);
  const auto genuine = serial::generate_two_qubit(RandomKind::Genuine, 2, n - n / 2, kTol);
  gates.insert(gates.end(), genuine.begin(), genuine.end());
  return gates;
}

void BM_ScreenSerial(benchmark::State& state) {
  const auto gates = mixed_gates(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::screen(gates, kTol));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScreenParallel(benchmark::State& state) {
  const auto gates = mixed_gates(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(screen(gates, kTol));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RoundTripSerial(benchmark::State& state) {
  const auto params = generate_canonical(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::canonical_roundtrip_errors(params, kTol));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RoundTripParallel(benchmark::State& state) {
  const auto params = generate_canonical(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_roundtrip_errors(params, kTol));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GenerateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::generate_two_qubit(RandomKind::Genuine, 4, n, kTol));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GenerateParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_two_qubit(RandomKind::Genuine, 4, n, kTol));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_ScreenSerial)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScreenParallel)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundTripSerial)->Arg(1 << 15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundTripParallel)->Arg(1 << 15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateSerial)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)->Arg(1 << 12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
