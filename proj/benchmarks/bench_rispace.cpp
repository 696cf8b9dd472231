// Copyright 2026 The rispace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "rispace/family.hpp"
#include "rispace/mazya.hpp"
#include "rispace/operators.hpp"
#include "rispace/optimality.hpp"
#include "rispace/quadrature.hpp"
#include "rispace/rearrange.hpp"
#include "rispace/spaces.hpp"

namespace {

using namespace rispace;

GridPtr bench_grid() {
  static GridPtr g = make_log_grid(1e-30, 64);
  return g;
}

GridFn bench_step() {
  static GridFn f = [] {
    const auto steps = random_step_functions(5, 1, 12, false);
    return steps.front().sample(bench_grid());
  }();
  return f;
}

void BM_quad_powlog_general(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad_powlog(-0.5, 0.5, 1e-20, 1.0));
  }
}
BENCHMARK(BM_quad_powlog_general);

void BM_rearrangement(benchmark::State& state) {
  const GridFn f = bench_step();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rearrangement(f));
  }
}
BENCHMARK(BM_rearrangement);

void BM_luxemburg_exponential(benchmark::State& state) {
  const GridFn f = bench_step();
  const YoungFn A = YoungFn::exponential(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(luxemburg_norm(A, f));
  }
}
BENCHMARK(BM_luxemburg_exponential);

void BM_lorentz_zygmund_norm(benchmark::State& state) {
  const GridFn f = bench_step();
  const SpaceSpec s = LorentzZygmund{kInf, 2.0, -1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(norm(s, f));
  }
}
BENCHMARK(BM_lorentz_zygmund_norm);

void BM_copson_grid(benchmark::State& state) {
  const GridFn f = bench_step();
  const CopsonOp op(1, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(copson(op, f));
  }
}
BENCHMARK(BM_copson_grid);

void BM_induced_domain_phi(benchmark::State& state) {
  const FundamentalFn phi_y =
      FundamentalFn::from(PowLogFn::atom(1.0, 0.0, -0.5), bench_grid());
  const IsoProfile iso = model_profile(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(induced_domain_phi(phi_y, iso));
  }
}
BENCHMARK(BM_induced_domain_phi);

void BM_witness_pipeline(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_pipeline(1, 0.5, 2.0, -0.25, bench_grid()));
  }
}
BENCHMARK(BM_witness_pipeline);

}  // namespace

BENCHMARK_MAIN();
