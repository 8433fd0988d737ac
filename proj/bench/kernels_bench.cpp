// Copyright 2026 The matqsym Authors.
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

// Serial reference kernels against their OpenMP counterparts.
//
//   kernels_bench --benchmark_filter=F_
//
// Arg 0 is Exec::Serial, arg 1 is Exec::Parallel.

#include <benchmark/benchmark.h>

#include "matqsym/genperm.hpp"
#include "matqsym/invariant.hpp"
#include "matqsym/matroid.hpp"

using namespace matqsym;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void F_uniform_3_8(benchmark::State& st) {
  const Matroid m = Matroid::uniform(3, 8);
  InvariantOptions opt;
  opt.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(F(m, opt));
  label(st);
}
BENCHMARK(F_uniform_3_8)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void F_freedom_9(benchmark::State& st) {
  const Matroid m = freedom_matroid(SigmaString("010110101"));
  InvariantOptions opt;
  opt.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(F(m, opt));
  label(st);
}
BENCHMARK(F_freedom_9)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void F_bruteforce_uniform_2_5(benchmark::State& st) {
  const Matroid m = Matroid::uniform(2, 5);
  for (auto _ : st) benchmark::DoNotOptimize(F_bruteforce(m, 5, exec_of(st)));
  label(st);
}
BENCHMARK(F_bruteforce_uniform_2_5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void F_star_bruteforce_uniform_3_6(benchmark::State& st) {
  const Matroid m = Matroid::uniform(3, 6);
  for (auto _ : st) benchmark::DoNotOptimize(F_star_bruteforce(m, 5, exec_of(st)));
  label(st);
}
BENCHMARK(F_star_bruteforce_uniform_3_6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void F_graphic_zonotope_K5(benchmark::State& st) {
  const SimpleGraph g = SimpleGraph::parse("5; 1-2, 1-3, 1-4, 1-5, 2-3, 2-4, 2-5, 3-4, 3-5, 4-5");
  GenPermOptions opt;
  opt.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(graphic_zonotope_F(g, opt));
  label(st);
}
BENCHMARK(F_graphic_zonotope_K5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
