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

#ifndef GREEDYPREP_NOISE_H
#define GREEDYPREP_NOISE_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "greedyprep/linalg.h"
#include "greedyprep/models.h"
#include "greedyprep/optimizer.h"
#include "greedyprep/sampling.h"

namespace greedyprep {

enum class ImperfectionKind { Static, Dynamic };

/// "static" / "dynamic". Throws std::invalid_argument otherwise.
ImperfectionKind parse_imperfection_kind(std::string_view name);
std::string_view imperfection_kind_name(ImperfectionKind k);

/// Target that perturbs, on each qubit, whichever Xmon channel the step's action drives (idle steps are
/// left alone).
inline constexpr std::string_view kDrivenChannel = "drive";

/// A perturbation applied to control parameters while replaying a designed sequence.
///
/// Static: every targeted parameter f becomes f + amplitude on every step, with the same offset on both
/// qubits of a two-qubit model.
/// Dynamic: every targeted parameter gets a fresh N(0, amplitude) offset per step, drawn independently per
/// qubit, held constant within the step.
///
/// Targets: "J" and/or "h" for dot models; "drive" or any of "Ax", "Ay", "Az" for Xmon models.
struct ImperfectionSpec {
    ImperfectionKind kind = ImperfectionKind::Static;
    std::vector<std::string> targets;
    double amplitude = 0;
    size_t realizations = 1;
    uint64_t seed = 0;

    /// Throws std::invalid_argument on a negative dynamic amplitude, zero realizations, no targets, or a
    /// target the model does not define.
    void validate(const ControlModel &model) const;
    /// Targets joined with '+'.
    std::string targets_label() const;
};

struct ReplayResult {
    double mean_fidelity = 0;
    std::vector<double> per_realization_fidelities;
    /// Steps x parameters that left their physical range, summed over realizations.
    size_t constraint_violations = 0;
};

/// Evolves `init` under `sequence` with the imperfection applied, recomputing each slice propagator from
/// the perturbed Hamiltonian, and reports the fidelity to `target` after the last slice.
/// `stream` identifies the task when deriving per-realization seeds (see derive_seed).
/// Throws std::invalid_argument if the sequence does not belong to the model.
ReplayResult replay(const ControlModel &model, const PulseSequence &sequence, const StateVector &init,
                    const StateVector &target, const ImperfectionSpec &spec, uint64_t stream = 0);

/// A designed preparation task ready for replay.
struct DesignedTask {
    Task task;
    PulseSequence sequence;
};

struct SweepRow {
    std::string model;
    ImperfectionKind kind = ImperfectionKind::Static;
    std::string targets;
    double amplitude = 0;
    /// Grand mean over targets of the per-target mean replay fidelity.
    double mean_avg_fidelity = 0;
    size_t tasks = 0;
    size_t realizations = 0;
    uint64_t seed = 0;
    size_t constraint_violations = 0;
};

/// One row per spec, in the order given. Task i of `designed` uses stream i.
std::vector<SweepRow> sweep(const ControlModel &model, const TaskSet &task_set,
                            std::span<const DesignedTask> designed, std::span<const ImperfectionSpec> specs,
                            size_t workers = 1);

inline constexpr const char *kSweepCsvHeader =
    "model,kind,targets,amplitude,mean_avg_fidelity,tasks,realizations,seed,constraint_violations";

std::string sweep_csv_row(const SweepRow &row);

}  // namespace greedyprep

#endif
