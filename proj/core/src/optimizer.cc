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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace greedyprep {

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Best:
            return "best";
        case Strategy::NextBest:
            return "next-best";
        case Strategy::Worst:
            return "worst";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "rg") {
        return Algorithm::RevisedGreedy;
    }
    if (lower == "sg") {
        return Algorithm::StandardGreedy;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (expected rg or sg)");
}

std::string_view algorithm_name(Algorithm a) {
    return a == Algorithm::RevisedGreedy ? "rg" : "sg";
}

namespace {

void validate(const DesignProblem &p) {
    if (p.cache.size() != p.model.action_count()) {
        throw std::invalid_argument("propagator cache does not match model " + std::string(p.model.name()));
    }
    if (p.init.dim() != p.model.dim() || p.target.dim() != p.model.dim()) {
        throw std::invalid_argument("state dimension does not match model " + std::string(p.model.name()));
    }
    if (p.step_max < 1) {
        throw std::invalid_argument("step_max must be at least 1");
    }
    if (!(p.threshold > 0 && p.threshold <= 1)) {
        throw std::invalid_argument("threshold must lie in (0, 1]");
    }
}

}  // namespace

size_t select_action(std::span<const double> candidates, double current, Strategy strategy) {
    if (candidates.empty()) {
        throw std::invalid_argument("no candidate actions");
    }
    size_t best = 0;
    size_t worst = 0;
    for (size_t i = 1; i < candidates.size(); i++) {
        if (candidates[i] > candidates[best]) {
            best = i;
        }
        if (candidates[i] < candidates[worst]) {
            worst = i;
        }
    }
    if (candidates[best] > current) {
        return best;
    }
    switch (strategy) {
        case Strategy::Best:
            return best;
        case Strategy::Worst:
            return worst;
        case Strategy::NextBest: {
            // Second entry of a stable sort by (fidelity desc, index asc).
            size_t second = candidates.size();
            for (size_t i = 0; i < candidates.size(); i++) {
                if (i == best) {
                    continue;
                }
                if (second == candidates.size() || candidates[i] > candidates[second]) {
                    second = i;
                }
            }
            return second == candidates.size() ? best : second;
        }
    }
    return best;
}

EpisodeResult run_episode(const DesignProblem &p, Strategy strategy) {
    validate(p);
    const size_t n_actions = p.cache.size();

    EpisodeResult result;
    result.strategy = strategy;
    result.sequence.dt = p.cache.dt();

    StateVector state = p.init;
    double current = fidelity(p.target, state);
    result.f_max = current;
    result.fidelity_trace.push_back(current);
    if (current > p.threshold) {
        return result;
    }

    std::vector<StateVector> next;
    std::vector<double> scores(n_actions);
    next.reserve(n_actions);
    std::vector<ActionId> taken;
    taken.reserve(p.step_max);

    for (size_t step = 0; step < p.step_max; step++) {
        next.clear();
        for (uint32_t a = 0; a < n_actions; a++) {
            next.push_back(p.cache[ActionId{a}].apply(state));
            scores[a] = fidelity(p.target, next.back());
        }
        size_t chosen = select_action(scores, current, strategy);
        state = next[chosen];
        current = scores[chosen];
        taken.push_back(ActionId{static_cast<uint32_t>(chosen)});
        result.fidelity_trace.push_back(current);
        if (current > result.f_max) {
            result.f_max = current;
            result.step_end = step + 1;
        }
        if (current > p.threshold) {
            break;
        }
    }
    result.sequence.actions.assign(taken.begin(), taken.begin() + static_cast<ptrdiff_t>(result.step_end));
    return result;
}

EpisodeResult design_rg(const DesignProblem &p) {
    EpisodeResult best = run_episode(p, Strategy::Best);
    for (Strategy s : {Strategy::NextBest, Strategy::Worst}) {
        EpisodeResult r = run_episode(p, s);
        if (r.f_max > best.f_max) {
            best = std::move(r);
        }
    }
    return best;
}

EpisodeResult design_sg(const DesignProblem &p) {
    return run_episode(p, Strategy::Best);
}

EpisodeResult design(const DesignProblem &p, Algorithm algorithm) {
    return algorithm == Algorithm::RevisedGreedy ? design_rg(p) : design_sg(p);
}

StateVector evolve(const PropagatorCache &cache, const StateVector &init, std::span<const ActionId> sequence) {
    StateVector state = init;
    for (ActionId a : sequence) {
        if (a.index >= cache.size()) {
            throw std::out_of_range("action " + std::to_string(a.index) + " not in propagator cache");
        }
        state = cache[a].apply(state);
    }
    return state;
}

namespace {

struct BruteForceSearch {
    const PropagatorCache &cache;
    const StateVector &target;
    size_t depth_limit;
    std::vector<ActionId> path;
    BruteForceResult best;

    void visit(const StateVector &state) {
        double f = fidelity(target, state);
        if (f > best.f_opt) {
            best.f_opt = f;
            best.sequence.actions = path;
        }
        if (path.size() == depth_limit) {
            return;
        }
        for (uint32_t a = 0; a < cache.size(); a++) {
            path.push_back(ActionId{a});
            visit(cache[ActionId{a}].apply(state));
            path.pop_back();
        }
    }
};

}  // namespace

BruteForceResult brute_force_optimum(const DesignProblem &p, size_t n_steps) {
    if (p.cache.size() != p.model.action_count()) {
        throw std::invalid_argument("propagator cache does not match model " + std::string(p.model.name()));
    }
    double leaves = std::pow(static_cast<double>(p.cache.size()), static_cast<double>(n_steps));
    if (leaves > kBruteForceLimit) {
        throw std::invalid_argument("brute force over " + std::to_string(p.cache.size()) + "^" +
                                    std::to_string(n_steps) + " sequences exceeds the limit of 1e7; reduce n_steps");
    }
    BruteForceSearch search{p.cache, p.target, n_steps, {}, {}};
    search.best.f_opt = -1;
    search.best.sequence.dt = p.cache.dt();
    search.path.reserve(n_steps);
    search.visit(p.init);
    return search.best;
}

}  // namespace greedyprep
