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

#ifndef GREEDYPREP_HARNESS_H
#define GREEDYPREP_HARNESS_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greedyprep/models.h"
#include "greedyprep/optimizer.h"
#include "greedyprep/sampling.h"

namespace greedyprep {

inline constexpr const char *kVersion = "1.0.0";

/// Two-qubit suites draw this many hypersphere points unless told otherwise.
inline constexpr size_t kDeskSubsample = 32;
/// Point count of the full two-qubit suite.
inline constexpr size_t kFullSubsample = 512;

/// Parses a duration: a plain decimal ("0.5"), or a pi expression of the form a*pi/b where the factor and
/// divisor are optional and the '*' may be omitted ("pi", "2pi", "pi/5", "3*pi/2", "10pi"). Also accepts
/// a plain fraction "a/b". Throws std::invalid_argument on anything else.
double parse_duration(std::string_view text);

struct GridSpec {
    enum class Kind { Bloch, Hypersphere };
    Kind kind = Kind::Bloch;
    size_t n_theta = kDefaultBlochThetas;
    size_t n_phi = kDefaultBlochPhis;

    /// "hypersphere", "NxM" or "bloch:NxM". Throws std::invalid_argument otherwise.
    static GridSpec parse(std::string_view text);
    std::string str() const;
    LabeledGrid build() const;
};

struct RunConfig {
    ModelKind model = ModelKind::Dqd1;
    double total_time = 0;
    double dt = 0;
    /// Original spellings of T and dt, echoed in reports.
    std::string total_time_text;
    std::string dt_text;
    double threshold = kDefaultThreshold;
    /// Defaults to Bloch 8x16 for one-qubit models and the hypersphere grid for two-qubit models.
    std::optional<GridSpec> grid;
    /// Number of grid points to keep (0 keeps all). Defaults to kDeskSubsample on the hypersphere grid.
    std::optional<size_t> subsample;
    uint64_t seed = 0;
    Algorithm algorithm = Algorithm::RevisedGreedy;
    size_t workers = 1;

    GridSpec effective_grid() const;
    size_t effective_subsample() const;
    /// round(T / dt).
    size_t step_max() const;
    /// Throws std::invalid_argument with a message on nonpositive T or dt, round(T/dt) < 1, or a threshold
    /// outside (0, 1].
    void validate() const;

    /// Applies one key/value setting (keys: model, T, dt, threshold, grid, subsample, seed, algorithm,
    /// workers, full). Throws std::invalid_argument on an unknown key or bad value.
    void set(std::string_view key, std::string_view value);
};

/// Reads a flat "key = value" file ('#' starts a comment). Throws std::runtime_error if unreadable and
/// std::invalid_argument on malformed lines.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path &path);

struct TaskRecord {
    size_t init = 0;
    size_t target = 0;
    double f_max = 0;
    size_t step_end = 0;
    double design_ms = 0;
    Strategy strategy = Strategy::Best;
    std::vector<ActionId> actions;
};

struct SuiteReport {
    RunConfig config;
    LabeledGrid points;
    /// Indices of `points` in the full grid, in subsample draw order (identity when not subsampled).
    std::vector<size_t> grid_indices;
    std::vector<TaskRecord> tasks;
    /// Mean f_max over the tasks sharing each target.
    std::vector<double> per_target_fidelity;
    /// Mean design time over the tasks sharing each target.
    std::vector<double> per_target_design_ms;
    double grand_mean_fidelity = 0;
    double min_target_fidelity = 0;
    double mean_design_time_ms = 0;

    /// All tasks as (init, target) pairs.
    std::vector<Task> task_list() const;
    std::vector<double> fidelities() const;
};

/// Builds the model, cache and task set from the config, designs every task, and aggregates.
SuiteReport run_suite(const RunConfig &config);

/// As above over an explicit point list (all ordered pairs of distinct points).
SuiteReport run_suite(const RunConfig &config, const LabeledGrid &points);

enum class ReportFormat { Csv, Json };

/// Csv: writes the task table to `path`, plus `<stem>.summary.json` and `<stem>.targets.csv` next to it.
/// Json: writes one document holding the summary, the per-target table and the task table.
/// Throws std::invalid_argument for an empty report and std::runtime_error (naming the path) on I/O failure.
/// Returns the files written.
std::vector<std::filesystem::path> emit_report(const SuiteReport &report, ReportFormat format,
                                               const std::filesystem::path &path);

inline constexpr const char *kTaskCsvHeader = "init_idx,target_idx,f_max,step_end,design_ms";

/// Parses a task table written by emit_report. Throws std::runtime_error on I/O or format errors.
std::vector<TaskRecord> read_task_csv(const std::filesystem::path &path);

/// The summary document as a JSON string.
std::string summary_json(const SuiteReport &report);

}  // namespace greedyprep

#endif
