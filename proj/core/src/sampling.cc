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

#include "greedyprep/sampling.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "greedyprep/random.h"

namespace greedyprep {

using std::numbers::pi;

StateVector BlochPoint::state() const {
    std::array<cplx, 2> a{std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
    return StateVector(a);
}

std::array<double, 4> HyperspherePoint::coordinates() const {
    double s1 = std::sin(thetas[0]);
    double s2 = std::sin(thetas[1]);
    return {std::cos(thetas[0]), s1 * std::cos(thetas[1]), s1 * s2 * std::cos(thetas[2]),
            s1 * s2 * std::sin(thetas[2])};
}

StateVector HyperspherePoint::state() const {
    auto c = coordinates();
    std::array<cplx, 4> a;
    for (size_t j = 0; j < 4; j++) {
        a[j] = std::polar(c[j], phases[j]);
    }
    return StateVector(a);
}

std::vector<BlochPoint> bloch_points(size_t n_theta, size_t n_phi) {
    if (n_theta == 0 || n_phi == 0) {
        throw std::invalid_argument("Bloch grid counts must be positive");
    }
    std::vector<BlochPoint> out;
    out.reserve(n_theta * n_phi);
    for (size_t k = 0; k < n_theta; k++) {
        double theta = (static_cast<double>(k) + 0.5) * pi / static_cast<double>(n_theta);
        for (size_t m = 0; m < n_phi; m++) {
            out.push_back({theta, 2 * pi * static_cast<double>(m) / static_cast<double>(n_phi)});
        }
    }
    return out;
}

std::vector<StateVector> bloch_grid(size_t n_theta, size_t n_phi) {
    std::vector<StateVector> out;
    for (const auto &p : bloch_points(n_theta, n_phi)) {
        out.push_back(p.state());
    }
    return out;
}

std::vector<HyperspherePoint> hypersphere_points() {
    std::vector<HyperspherePoint> out;
    out.reserve(6912);
    for (double t1 : kHypersphereThetas) {
        for (double t2 : kHypersphereThetas) {
            for (double t3 : kHypersphereThetas) {
                for (double p1 : kHyperspherePhases) {
                    for (double p2 : kHyperspherePhases) {
                        for (double p3 : kHyperspherePhases) {
                            for (double p4 : kHyperspherePhases) {
                                out.push_back({{t1, t2, t3}, {p1, p2, p3, p4}});
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<StateVector> hypersphere_grid() {
    std::vector<StateVector> out;
    out.reserve(6912);
    for (const auto &p : hypersphere_points()) {
        out.push_back(p.state());
    }
    return out;
}

std::vector<size_t> subsample_indices(size_t n, size_t k, uint64_t seed) {
    if (k > n) {
        throw std::invalid_argument("cannot draw " + std::to_string(k) + " samples from " + std::to_string(n) +
                                    " points");
    }
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::mt19937_64 rng(seed);
    for (size_t i = 0; i < k; i++) {
        size_t j = i + static_cast<size_t>(uniform_below(rng, n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

TaskSet all_pairs(std::vector<StateVector> points) {
    if (points.size() < 2) {
        throw std::invalid_argument("a task set needs at least 2 points");
    }
    TaskSet out;
    out.tasks.reserve(points.size() * (points.size() - 1));
    for (size_t i = 0; i < points.size(); i++) {
        for (size_t t = 0; t < points.size(); t++) {
            if (i != t) {
                out.tasks.push_back({i, t});
            }
        }
    }
    out.points = std::move(points);
    return out;
}

TargetAverages average_by_target(std::span<const Task> tasks, std::span<const double> values, size_t n_points) {
    if (tasks.size() != values.size()) {
        throw std::invalid_argument("task and value counts differ");
    }
    if (tasks.empty()) {
        throw std::invalid_argument("cannot average an empty task list");
    }
    TargetAverages out;
    std::vector<double> sums(n_points, 0.0);
    out.counts.assign(n_points, 0);
    for (size_t i = 0; i < tasks.size(); i++) {
        if (tasks[i].target >= n_points) {
            throw std::invalid_argument("target index out of range");
        }
        sums[tasks[i].target] += values[i];
        out.counts[tasks[i].target]++;
    }
    out.per_target.assign(n_points, 0.0);
    double total = 0;
    size_t used = 0;
    for (size_t t = 0; t < n_points; t++) {
        if (out.counts[t] > 0) {
            out.per_target[t] = sums[t] / static_cast<double>(out.counts[t]);
            total += out.per_target[t];
            used++;
        }
    }
    out.grand_mean = total / static_cast<double>(used);
    return out;
}

LabeledGrid LabeledGrid::select(std::span<const size_t> indices) const {
    LabeledGrid out;
    out.kind = kind;
    out.param_names = param_names;
    for (size_t i : indices) {
        out.params.push_back(params.at(i));
        out.states.push_back(states.at(i));
    }
    return out;
}

LabeledGrid labeled_bloch_grid(size_t n_theta, size_t n_phi) {
    LabeledGrid g;
    g.kind = "bloch";
    g.param_names = {"theta", "phi"};
    for (const auto &p : bloch_points(n_theta, n_phi)) {
        g.params.push_back({p.theta, p.phi});
        g.states.push_back(p.state());
    }
    return g;
}

LabeledGrid labeled_hypersphere_grid() {
    LabeledGrid g;
    g.kind = "hypersphere";
    g.param_names = {"theta1", "theta2", "theta3", "phase1", "phase2", "phase3", "phase4"};
    for (const auto &p : hypersphere_points()) {
        g.params.push_back({p.thetas[0], p.thetas[1], p.thetas[2], p.phases[0], p.phases[1], p.phases[2],
                            p.phases[3]});
        g.states.push_back(p.state());
    }
    return g;
}

}  // namespace greedyprep
