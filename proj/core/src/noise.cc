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

#include "greedyprep/noise.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "greedyprep/parallel.h"
#include "greedyprep/random.h"

namespace greedyprep {

ImperfectionKind parse_imperfection_kind(std::string_view name) {
    if (name == "static") {
        return ImperfectionKind::Static;
    }
    if (name == "dynamic") {
        return ImperfectionKind::Dynamic;
    }
    throw std::invalid_argument("unknown imperfection kind '" + std::string(name) + "' (expected static or dynamic)");
}

std::string_view imperfection_kind_name(ImperfectionKind k) {
    return k == ImperfectionKind::Static ? "static" : "dynamic";
}

void ImperfectionSpec::validate(const ControlModel &model) const {
    if (targets.empty()) {
        throw std::invalid_argument("imperfection has no target parameters");
    }
    if (!std::isfinite(amplitude)) {
        throw std::invalid_argument("imperfection amplitude must be finite");
    }
    if (kind == ImperfectionKind::Dynamic && amplitude < 0) {
        throw std::invalid_argument("dynamic noise standard deviation must be non-negative");
    }
    if (realizations < 1) {
        throw std::invalid_argument("at least one realization is required");
    }
    auto names = model.parameter_names();
    for (const auto &t : targets) {
        bool known = std::find(names.begin(), names.end(), t) != names.end();
        if (!model.is_dot_model() && t == kDrivenChannel) {
            known = true;
        }
        if (!known) {
            throw std::invalid_argument("model " + std::string(model.name()) + " has no noise target '" + t + "'");
        }
    }
}

std::string ImperfectionSpec::targets_label() const {
    std::string out;
    for (const auto &t : targets) {
        if (!out.empty()) {
            out += "+";
        }
        out += t;
    }
    return out;
}

namespace {

// The channel an Xmon action drives on one qubit, or empty for idle.
std::string driven_channel(const QubitControls &q) {
    if (q.ax != 0) {
        return "Ax";
    }
    if (q.ay != 0) {
        return "Ay";
    }
    if (q.az != 0) {
        return "Az";
    }
    return {};
}

}  // namespace

ReplayResult replay(const ControlModel &model, const PulseSequence &sequence, const StateVector &init,
                    const StateVector &target, const ImperfectionSpec &spec, uint64_t stream) {
    spec.validate(model);
    if (init.dim() != model.dim() || target.dim() != model.dim()) {
        throw std::invalid_argument("state dimension does not match model " + std::string(model.name()));
    }
    for (ActionId a : sequence.actions) {
        if (a.index >= model.action_count()) {
            throw std::invalid_argument("sequence action " + std::to_string(a.index) + " does not belong to model " +
                                        std::string(model.name()));
        }
    }
    if (!sequence.actions.empty() && !(sequence.dt > 0)) {
        throw std::invalid_argument("sequence has no positive slice duration");
    }

    ReplayResult result;
    std::vector<ParameterOffset> offsets;
    for (size_t r = 0; r < spec.realizations; r++) {
        std::mt19937_64 rng(derive_seed(spec.seed, stream, r));
        StateVector state = init;
        for (ActionId a : sequence.actions) {
            offsets.clear();
            const ControlSettings &base = model.settings(a);
            for (size_t q = 0; q < model.num_qubits(); q++) {
                for (const auto &t : spec.targets) {
                    double delta = spec.amplitude;
                    if (spec.kind == ImperfectionKind::Dynamic) {
                        delta = spec.amplitude * standard_normal(rng);
                    }
                    std::string name = t;
                    if (name == kDrivenChannel) {
                        name = driven_channel(base.qubit[q]);
                        if (name.empty()) {
                            continue;
                        }
                    }
                    offsets.push_back({name, q, delta});
                }
            }
            ControlSettings s = model.perturbed(a, offsets);
            result.constraint_violations += model.constraint_violations(s);
            state = expm_hermitian(model.hamiltonian(s), sequence.dt).apply(state);
        }
        result.per_realization_fidelities.push_back(fidelity(target, state));
    }
    double total = 0;
    for (double f : result.per_realization_fidelities) {
        total += f;
    }
    result.mean_fidelity = total / static_cast<double>(result.per_realization_fidelities.size());
    return result;
}

std::vector<SweepRow> sweep(const ControlModel &model, const TaskSet &task_set,
                            std::span<const DesignedTask> designed, std::span<const ImperfectionSpec> specs,
                            size_t workers) {
    if (designed.empty()) {
        throw std::invalid_argument("noise sweep needs at least one designed task");
    }
    std::vector<Task> tasks;
    tasks.reserve(designed.size());
    for (const auto &d : designed) {
        if (d.task.init >= task_set.points.size() || d.task.target >= task_set.points.size()) {
            throw std::invalid_argument("designed task refers to a point outside the task set");
        }
        tasks.push_back(d.task);
    }
    std::vector<SweepRow> rows;
    for (const auto &spec : specs) {
        spec.validate(model);
        std::vector<double> means(designed.size());
        std::vector<size_t> violations(designed.size());
        parallel_for(designed.size(), workers, [&](size_t i) {
            const auto &d = designed[i];
            auto r = replay(model, d.sequence, task_set.points[d.task.init], task_set.points[d.task.target], spec, i);
            means[i] = r.mean_fidelity;
            violations[i] = r.constraint_violations;
        });
        SweepRow row;
        row.model = std::string(model.name());
        row.kind = spec.kind;
        row.targets = spec.targets_label();
        row.amplitude = spec.amplitude;
        row.mean_avg_fidelity = average_by_target(tasks, means, task_set.points.size()).grand_mean;
        row.tasks = designed.size();
        row.realizations = spec.realizations;
        row.seed = spec.seed;
        for (size_t v : violations) {
            row.constraint_violations += v;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv_row(const SweepRow &row) {
    std::ostringstream out;
    out.precision(17);
    out << row.model << ',' << imperfection_kind_name(row.kind) << ',' << row.targets << ',' << row.amplitude << ','
        << row.mean_avg_fidelity << ',' << row.tasks << ',' << row.realizations << ',' << row.seed << ','
        << row.constraint_violations;
    return out.str();
}

}  // namespace greedyprep
