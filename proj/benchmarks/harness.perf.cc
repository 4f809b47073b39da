// Copyright 2026 The greedyprep Authors
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

#include "greedyprep/harness.h"

#include "benchmark/benchmark.h"

using namespace greedyprep;

static void suite_dqd1_small_grid(benchmark::State &state) {
    RunConfig c;
    c.set("model", "dqd1");
    c.set("T", "2pi");
    c.set("dt", "pi/5");
    c.set("grid", "4x8");
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(c).grand_mean_fidelity);
    }
}
BENCHMARK(suite_dqd1_small_grid)->Unit(benchmark::kMillisecond);

static void suite_xmon2_subsample(benchmark::State &state) {
    RunConfig c;
    c.set("model", "xmon2");
    c.set("T", "5pi");
    c.set("dt", "pi/4");
    c.set("subsample", "8");
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(c).grand_mean_fidelity);
    }
}
BENCHMARK(suite_xmon2_subsample)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
