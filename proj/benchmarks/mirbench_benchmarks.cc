// Copyright 2026 The mirbench Authors
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

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "mirbench/circuit.h"
#include "mirbench/fit.h"
#include "mirbench/frame_potential.h"
#include "mirbench/simulator.h"

namespace {

using namespace mirbench;

NoiseModel depolarizing(double p) {
  NoiseModel noise;
  noise.two_qubit = Depolarizing{p};
  return noise;
}

void BM_CompileMirrorCircuit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MirrorCircuitSpec spec = sample_mirror_spec(n, 16, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_mirror_circuit(spec));
}
BENCHMARK(BM_CompileMirrorCircuit)->Arg(4)->Arg(10)->Arg(64);

void BM_StabilizerShots(benchmark::State& state, StabilizerMethod method) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CompiledCircuit circuit = build_mirror_circuit(sample_mirror_spec(n, 16, 2));
  const NoiseModel noise = depolarizing(0.01);
  Rng rng(3);
  constexpr std::uint64_t kShots = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(run_stabilizer(circuit, noise, kShots, rng, method));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kShots));
}
BENCHMARK_CAPTURE(BM_StabilizerShots, frame, StabilizerMethod::kFrame)->Arg(4)->Arg(10)->Arg(64);
BENCHMARK_CAPTURE(BM_StabilizerShots, tableau, StabilizerMethod::kTableau)->Arg(4)->Arg(10);

void BM_DenseExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CompiledCircuit circuit = build_mirror_circuit(sample_mirror_spec(n, 16, 4));
  const NoiseModel noise = depolarizing(0.01);
  for (auto _ : state) benchmark::DoNotOptimize(run_dense(circuit, noise));
}
BENCHMARK(BM_DenseExact)->Arg(2)->Arg(4);

void BM_FitDecay(benchmark::State& state) {
  std::vector<DecayPoint> points;
  for (double l : {4.0, 8.0, 12.0, 16.0}) points.push_back({l, 0.9 * std::pow(0.96, l - 1) + 1.0 / 64, 0.01});
  for (auto _ : state) benchmark::DoNotOptimize(fit_decay_curve(points, 6));
}
BENCHMARK(BM_FitDecay);

void BM_FramePotential(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(frame_potential(n, 8, 20, rng));
}
BENCHMARK(BM_FramePotential)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
