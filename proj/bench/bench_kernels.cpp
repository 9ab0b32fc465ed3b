/*
 *  Copyright 2026 The hexp Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */


// Serial reference vs OpenMP kernels on the workloads that dominate a suite run.

#include <benchmark/benchmark.h>

#include <random>

#include "hexp/forms.hpp"
#include "hexp/mappings.hpp"

namespace {

using namespace hexp;

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

HomogeneousPoly random_cubic(int n) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HomogeneousPoly p(n, 3);
  for (int k = 0; k < n; ++k)
    for (std::size_t t = 0; t < p.term_count(); ++t) p.set_term(k, t, cplx(u(rng), u(rng)));
  return p;
}

void BM_PolySupNorm(benchmark::State& state) {
  const HomogeneousPoly p = random_cubic(static_cast<int>(state.range(1)));
  NormConfig cfg;
  cfg.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(poly_sup_norm(p, cfg).value);
  state.SetLabel(cfg.exec == Execution::Serial ? "serial" : "openmp");
}
BENCHMARK(BM_PolySupNorm)->ArgsProduct({{0, 1}, {2, 3, 4}})->Unit(benchmark::kMillisecond);

void BM_FormSupNorm(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = static_cast<int>(state.range(1));
  HomogeneousPoly p(n, 2);
  for (int k = 0; k < n; ++k)
    for (std::size_t t = 0; t < p.term_count(); ++t) p.set_term(k, t, cplx(u(rng), u(rng)));
  NormConfig cfg;
  cfg.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(form_sup_norm(SymmetricForm{p}, cfg).value);
  state.SetLabel(cfg.exec == Execution::Serial ? "serial" : "openmp");
}
BENCHMARK(BM_FormSupNorm)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
  const auto fam = MappingFamily::diagonal_almost_starlike(static_cast<int>(state.range(1)), 0.25);
  MembershipPlan plan;
  plan.exec = exec_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(membership_test(fam, ClassTag::AlmostStarlike, 0.25, plan).min_re);
  state.SetLabel(plan.exec == Execution::Serial ? "serial" : "openmp");
}
BENCHMARK(BM_Membership)->ArgsProduct({{0, 1}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
