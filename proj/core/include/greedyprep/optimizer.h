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

#ifndef GREEDYPREP_OPTIMIZER_H
#define GREEDYPREP_OPTIMIZER_H

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "greedyprep/linalg.h"
#include "greedyprep/models.h"

namespace greedyprep {

/// Which candidate an episode takes at a step where no action improves on the current fidelity.
enum class Strategy { Best, NextBest, Worst };

std::string_view strategy_name(Strategy s);

/// Revised greedy (max over all three strategies) or standard greedy (Best only).
enum class Algorithm { RevisedGreedy, StandardGreedy };

/// "rg" / "sg" (case-insensitive). Throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

inline constexpr double kDefaultThreshold = 0.999;

struct PulseSequence {
    std::vector<ActionId> actions;
    double dt = 0;

    size_t size() const {
        return actions.size();
    }
    bool operator==(const PulseSequence &) const = default;
};

struct EpisodeResult {
    /// Largest fidelity seen along the episode, including the initial state.
    double f_max = 0;
    /// Number of slices applied when f_max was first reached.
    size_t step_end = 0;
    /// The selected actions truncated to step_end.
    PulseSequence sequence;
    Strategy strategy = Strategy::Best;
    /// Fidelity after each step; element 0 is the initial fidelity.
    std::vector<double> fidelity_trace;

    bool operator==(const EpisodeResult &) const = default;
};

/// Inputs shared by every episode of one preparation task.
struct DesignProblem {
    const ControlModel &model;
    const PropagatorCache &cache;
    const StateVector &init;
    const StateVector &target;
    size_t step_max = 1;
    double threshold = kDefaultThreshold;
};

/// Selection rule for one step, given the candidate fidelities of every action.
/// Improving steps (max candidate > current) always take the best action. Ties go to the lowest index.
size_t select_action(std::span<const double> candidates, double current, Strategy strategy);

/// One greedy episode under a single strategy. Terminates after step_max slices or as soon as the fidelity
/// exceeds the threshold; an initial fidelity above the threshold yields an empty sequence.
EpisodeResult run_episode(const DesignProblem &problem, Strategy strategy);

/// Runs the Best, NextBest and Worst episodes and keeps the one with the highest f_max
/// (earliest strategy wins ties).
EpisodeResult design_rg(const DesignProblem &problem);

/// Standard greedy: the Best episode alone.
EpisodeResult design_sg(const DesignProblem &problem);

EpisodeResult design(const DesignProblem &problem, Algorithm algorithm);

/// Applies the cached propagators of `sequence` to `init`.
StateVector evolve(const PropagatorCache &cache, const StateVector &init, std::span<const ActionId> sequence);

struct BruteForceResult {
    double f_opt = 0;
    PulseSequence sequence;
};

inline constexpr double kBruteForceLimit = 1e7;

/// Exhaustive optimum of the fidelity over every action sequence of length 0..n_steps.
/// Throws std::invalid_argument if action_count^n_steps exceeds kBruteForceLimit.
BruteForceResult brute_force_optimum(const DesignProblem &problem, size_t n_steps);

}  // namespace greedyprep

#endif
