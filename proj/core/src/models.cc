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

#include "greedyprep/models.h"

#include <cmath>
#include <stdexcept>

namespace greedyprep {

ModelKind parse_model_kind(std::string_view name) {
    if (name == "dqd1") {
        return ModelKind::Dqd1;
    }
    if (name == "dqd2") {
        return ModelKind::Dqd2;
    }
    if (name == "xmon1") {
        return ModelKind::Xmon1;
    }
    if (name == "xmon2") {
        return ModelKind::Xmon2;
    }
    throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected dqd1, dqd2, xmon1 or xmon2)");
}

std::string_view model_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Dqd1:
            return "dqd1";
        case ModelKind::Dqd2:
            return "dqd2";
        case ModelKind::Xmon1:
            return "xmon1";
        case ModelKind::Xmon2:
            return "xmon2";
    }
    return "?";
}

namespace {

// x drives, then y drives, then z drives, then the idle action.
std::vector<QubitControls> xmon_single_actions() {
    std::vector<QubitControls> out;
    for (double a : {-2.0, -1.0, 1.0, 2.0}) {
        out.push_back({.ax = a});
    }
    for (double a : {-2.0, -1.0, 1.0, 2.0}) {
        out.push_back({.ay = a});
    }
    for (double a : {1.0, 2.0}) {
        out.push_back({.az = a});
    }
    out.push_back({});
    return out;
}

std::string fmt_num(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e9) {
        return std::to_string(static_cast<long long>(v));
    }
    return std::to_string(v);
}

std::string xmon_label(const QubitControls &q) {
    if (q.ax != 0) {
        return "Ax=" + fmt_num(q.ax);
    }
    if (q.ay != 0) {
        return "Ay=" + fmt_num(q.ay);
    }
    if (q.az != 0) {
        return "Az=" + fmt_num(q.az);
    }
    return "idle";
}

// (ax/2) sigma_x + (ay/2) sigma_y - (az/2) sigma_z.
Matrix xmon_single(const QubitControls &q) {
    return pauli::x() * (q.ax / 2) + pauli::y() * (q.ay / 2) + pauli::z() * (-q.az / 2);
}

}  // namespace

ControlModel::ControlModel(ModelKind kind) : kind_(kind), num_qubits_(1) {
    const double h = kZeemanGap;
    switch (kind) {
        case ModelKind::Dqd1:
            for (double j : {0.0, 1.0, 2.0, 3.0}) {
                ControlSettings s;
                s.qubit[0] = {.j = j, .h = h};
                actions_.push_back(s);
            }
            break;
        case ModelKind::Dqd2:
            num_qubits_ = 2;
            for (double j1 : {1.0, 2.0, 3.0, 4.0, 5.0}) {
                for (double j2 : {1.0, 2.0, 3.0, 4.0, 5.0}) {
                    ControlSettings s;
                    s.qubit[0] = {.j = j1, .h = h};
                    s.qubit[1] = {.j = j2, .h = h};
                    actions_.push_back(s);
                }
            }
            break;
        case ModelKind::Xmon1:
            for (const auto &q : xmon_single_actions()) {
                ControlSettings s;
                s.qubit[0] = q;
                actions_.push_back(s);
            }
            break;
        case ModelKind::Xmon2: {
            num_qubits_ = 2;
            auto single = xmon_single_actions();
            for (const auto &q1 : single) {
                for (const auto &q2 : single) {
                    ControlSettings s;
                    s.qubit[0] = q1;
                    s.qubit[1] = q2;
                    actions_.push_back(s);
                }
            }
            break;
        }
        default:
            throw std::invalid_argument("unknown model kind");
    }
}

const ControlSettings &ControlModel::settings(ActionId a) const {
    if (a.index >= actions_.size()) {
        throw std::out_of_range("action " + std::to_string(a.index) + " out of range for model " +
                                std::string(name()) + " with " + std::to_string(actions_.size()) + " actions");
    }
    return actions_[a.index];
}

std::string ControlModel::action_label(ActionId a) const {
    const auto &s = settings(a);
    switch (kind_) {
        case ModelKind::Dqd1:
            return "J=" + fmt_num(s.qubit[0].j);
        case ModelKind::Dqd2:
            return "J1=" + fmt_num(s.qubit[0].j) + ",J2=" + fmt_num(s.qubit[1].j);
        case ModelKind::Xmon1:
            return xmon_label(s.qubit[0]);
        case ModelKind::Xmon2:
            return xmon_label(s.qubit[0]) + "|" + xmon_label(s.qubit[1]);
    }
    return "?";
}

std::vector<std::string> ControlModel::parameter_names() const {
    if (is_dot_model()) {
        return {"J", "h"};
    }
    return {"Ax", "Ay", "Az"};
}

ControlSettings ControlModel::perturbed(ActionId a, std::span<const ParameterOffset> offsets) const {
    ControlSettings s = settings(a);
    for (const auto &off : offsets) {
        if (off.qubit >= num_qubits_) {
            throw std::invalid_argument("qubit index " + std::to_string(off.qubit) + " out of range for model " +
                                        std::string(name()));
        }
        auto &q = s.qubit[off.qubit];
        double *target = nullptr;
        if (is_dot_model()) {
            if (off.name == "J") {
                target = &q.j;
            } else if (off.name == "h") {
                target = &q.h;
            }
        } else {
            if (off.name == "Ax") {
                target = &q.ax;
            } else if (off.name == "Ay") {
                target = &q.ay;
            } else if (off.name == "Az") {
                target = &q.az;
            }
        }
        if (target == nullptr) {
            throw std::invalid_argument("model " + std::string(name()) + " has no control parameter '" + off.name +
                                        "'");
        }
        *target += off.delta;
    }
    return s;
}

size_t ControlModel::constraint_violations(const ControlSettings &s) const {
    size_t n = 0;
    for (size_t k = 0; k < num_qubits_; k++) {
        const auto &q = s.qubit[k];
        switch (kind_) {
            case ModelKind::Dqd1:
                n += q.j < 0;
                break;
            case ModelKind::Dqd2:
                n += q.j <= 0;
                break;
            case ModelKind::Xmon1:
            case ModelKind::Xmon2:
                n += q.az < 0;
                break;
        }
    }
    return n;
}

HermitianMatrix ControlModel::hamiltonian(const ControlSettings &s) const {
    switch (kind_) {
        case ModelKind::Dqd1: {
            const auto &q = s.qubit[0];
            return HermitianMatrix(pauli::z() * q.j + pauli::x() * q.h);
        }
        case ModelKind::Dqd2: {
            // Basis {SS, ST0, T0S, T0T0} with an overall 1/2 and J12 = J1 J2 / 2.
            double j1 = s.qubit[0].j;
            double j2 = s.qubit[1].j;
            double h1 = s.qubit[0].h;
            double h2 = s.qubit[1].h;
            double j12 = j1 * j2 / 2;
            Matrix m(4, {j1 + j2, h2, h1, 0,
                         h2, j1 - j2, 0, h1,
                         h1, 0, j2 - j1, h2,
                         0, h1, h2, -j1 - j2 + 2 * j12});
            return HermitianMatrix(m * 0.5);
        }
        case ModelKind::Xmon1:
            return HermitianMatrix(xmon_single(s.qubit[0]));
        case ModelKind::Xmon2: {
            // Qubit 0 is the most significant tensor factor.
            Matrix local = xmon_single(s.qubit[0]).kron(pauli::i2()) + pauli::i2().kron(xmon_single(s.qubit[1]));
            Matrix exchange = pauli::raise().kron(pauli::lower()) + pauli::lower().kron(pauli::raise());
            return HermitianMatrix(local + exchange * kXmonCoupling);
        }
    }
    throw std::invalid_argument("unknown model kind");
}

PropagatorCache::PropagatorCache(const ControlModel &model, double dt) : dt_(dt) {
    if (!(dt > 0) || !std::isfinite(dt)) {
        throw std::invalid_argument("slice duration dt must be positive and finite");
    }
    propagators_.reserve(model.action_count());
    for (uint32_t a = 0; a < model.action_count(); a++) {
        propagators_.push_back(expm_hermitian(model.hamiltonian(ActionId{a}), dt));
    }
}

}  // namespace greedyprep
