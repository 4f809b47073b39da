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

#ifndef GREEDYPREP_SAMPLING_H
#define GREEDYPREP_SAMPLING_H

#include <array>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "greedyprep/linalg.h"

namespace greedyprep {

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct BlochPoint {
    double theta = 0;
    double phi = 0;
    StateVector state() const;
};

/// Two-qubit state with amplitudes e^{i phase_j} c_j, where c lies on the unit 3-sphere in hyperspherical
/// coordinates:
///   c1 = cos t1, c2 = sin t1 cos t2, c3 = sin t1 sin t2 cos t3, c4 = sin t1 sin t2 sin t3.
struct HyperspherePoint {
    std::array<double, 3> thetas{};
    std::array<double, 4> phases{};
    std::array<double, 4> coordinates() const;
    StateVector state() const;
};

inline constexpr size_t kDefaultBlochThetas = 8;
inline constexpr size_t kDefaultBlochPhis = 16;

/// Half-offset grid: theta_k = (k + 1/2) pi / n_theta, phi_m = 2 pi m / n_phi, theta outer.
/// Throws std::invalid_argument for zero counts.
std::vector<BlochPoint> bloch_points(size_t n_theta, size_t n_phi);
std::vector<StateVector> bloch_grid(size_t n_theta = kDefaultBlochThetas, size_t n_phi = kDefaultBlochPhis);

/// Polar angles {pi/8, pi/4, 3pi/8} and per-amplitude phases {0, pi/2, pi, 2pi/3}.
inline constexpr std::array<double, 3> kHypersphereThetas{std::numbers::pi / 8, std::numbers::pi / 4,
                                                          3 * std::numbers::pi / 8};
inline constexpr std::array<double, 4> kHyperspherePhases{0.0, std::numbers::pi / 2, std::numbers::pi,
                                                          2 * std::numbers::pi / 3};

/// All 3^3 * 4^4 = 6912 points, lexicographic in (t1, t2, t3, phase1, ..., phase4).
std::vector<HyperspherePoint> hypersphere_points();
std::vector<StateVector> hypersphere_grid();

/// k distinct indices of [0, n) drawn uniformly without replacement (partial Fisher-Yates over mt19937_64),
/// in draw order. Throws std::invalid_argument if k > n.
std::vector<size_t> subsample_indices(size_t n, size_t k, uint64_t seed);

template <typename T>
std::vector<T> subsample(std::span<const T> points, size_t k, uint64_t seed) {
    std::vector<T> out;
    out.reserve(k);
    for (size_t i : subsample_indices(points.size(), k, seed)) {
        out.push_back(points[i]);
    }
    return out;
}

/// Ordered (init, target) pair of indices into a point list.
struct Task {
    size_t init = 0;
    size_t target = 0;
    bool operator==(const Task &) const = default;
};

struct TaskSet {
    std::vector<StateVector> points;
    std::vector<Task> tasks;
};

/// Every ordered pair of distinct indices, init-major. Throws std::invalid_argument for fewer than 2 points.
TaskSet all_pairs(std::vector<StateVector> points);

/// Per-target mean of per-task values, and the grand mean of those per-target means.
struct TargetAverages {
    std::vector<double> per_target;
    std::vector<size_t> counts;
    double grand_mean = 0;
};

/// Targets with no tasks are excluded from the grand mean. Throws std::invalid_argument if `values` and
/// `tasks` differ in length, a target index is out of range, or there are no tasks.
TargetAverages average_by_target(std::span<const Task> tasks, std::span<const double> values, size_t n_points);

/// A point list together with the parameters that generated each point, for reporting.
struct LabeledGrid {
    std::string kind;
    std::vector<std::string> param_names;
    std::vector<std::vector<double>> params;
    std::vector<StateVector> states;

    size_t size() const {
        return states.size();
    }
    LabeledGrid select(std::span<const size_t> indices) const;
};

LabeledGrid labeled_bloch_grid(size_t n_theta, size_t n_phi);
LabeledGrid labeled_hypersphere_grid();

}  // namespace greedyprep

#endif
