// Copyright 2026 The nlmotion Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "nlmotion/couplings.hpp"
#include "nlmotion/evolution.hpp"
#include "nlmotion/hamiltonians.hpp"
#include "nlmotion/phasespace.hpp"

namespace {

using nlmotion::Complex;

void BM_CouplingScalar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nlmotion::f_scalar(1, n, 0.25));
}
BENCHMARK(BM_CouplingScalar)->Arg(10)->Arg(100)->Arg(500);

void BM_SidebandOperator(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlmotion::g_operator(-1, 0.25, cutoff).entries().data());
  }
}
BENCHMARK(BM_SidebandOperator)->Arg(60)->Arg(200);

void BM_Propagator(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const auto h = nlmotion::h_one_mode(1, 0.25, Complex(1.0, 0.0), cutoff);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlmotion::propagator(h, 10.0).entries().data());
  }
}
BENCHMARK(BM_Propagator)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_QFunction(benchmark::State& state) {
  const auto psi = nlmotion::coherent_state(Complex(0.0, 7.6), 160);
  const nlmotion::PhaseWindow window{{-10.0, 10.0}, {-10.0, 10.0}};
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlmotion::q_function(psi, window, 0.1, workers).values.data());
  }
}
BENCHMARK(BM_QFunction)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
