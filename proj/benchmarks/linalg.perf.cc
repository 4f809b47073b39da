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

#include "greedyprep/linalg.h"

#include "benchmark/benchmark.h"

#include "greedyprep/models.h"

using namespace greedyprep;

static void expm_2x2(benchmark::State &state) {
    ControlModel model(ModelKind::Dqd1);
    auto h = model.hamiltonian(ActionId{2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(expm_hermitian(h, 0.3));
    }
}
BENCHMARK(expm_2x2);

static void expm_4x4(benchmark::State &state) {
    ControlModel model(ModelKind::Xmon2);
    auto h = model.hamiltonian(ActionId{3 * 11 + 6});
    for (auto _ : state) {
        benchmark::DoNotOptimize(expm_hermitian(h, 0.3));
    }
}
BENCHMARK(expm_4x4);

static void apply_and_fidelity_4x4(benchmark::State &state) {
    ControlModel model(ModelKind::Dqd2);
    PropagatorCache cache(model, 0.5);
    auto target = StateVector::basis(4, 3);
    auto s = StateVector::basis(4, 0);
    for (auto _ : state) {
        s = cache[ActionId{7}].apply(s);
        benchmark::DoNotOptimize(fidelity(target, s));
    }
}
BENCHMARK(apply_and_fidelity_4x4);
