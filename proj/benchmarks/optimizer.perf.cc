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

#include "greedyprep/optimizer.h"

#include <numbers>

#include "benchmark/benchmark.h"

#include "greedyprep/sampling.h"

using namespace greedyprep;

namespace {

void run_design(benchmark::State &state, ModelKind kind, double dt, size_t step_max) {
    ControlModel model(kind);
    PropagatorCache cache(model, dt);
    auto pts = model.dim() == 2 ? bloch_grid(2, 2) : subsample<StateVector>(hypersphere_grid(), 2, 0);
    DesignProblem p{model, cache, pts[0], pts[1], step_max, kDefaultThreshold};
    for (auto _ : state) {
        benchmark::DoNotOptimize(design_rg(p));
    }
}

}  // namespace

static void design_rg_dqd1(benchmark::State &state) {
    run_design(state, ModelKind::Dqd1, std::numbers::pi / 5, 10);
}
BENCHMARK(design_rg_dqd1);

static void design_rg_xmon1(benchmark::State &state) {
    run_design(state, ModelKind::Xmon1, std::numbers::pi / 5, 5);
}
BENCHMARK(design_rg_xmon1);

static void design_rg_dqd2(benchmark::State &state) {
    run_design(state, ModelKind::Dqd2, std::numbers::pi / 2, 20);
}
BENCHMARK(design_rg_dqd2);

static void design_rg_xmon2(benchmark::State &state) {
    run_design(state, ModelKind::Xmon2, std::numbers::pi / 4, 40);
}
BENCHMARK(design_rg_xmon2);
