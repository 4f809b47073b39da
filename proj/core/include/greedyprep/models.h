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

#ifndef GREEDYPREP_MODELS_H
#define GREEDYPREP_MODELS_H

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "greedyprep/linalg.h"

namespace greedyprep {

enum class ModelKind { Dqd1, Dqd2, Xmon1, Xmon2 };

/// "dqd1", "dqd2", "xmon1", "xmon2". Throws std::invalid_argument otherwise.
ModelKind parse_model_kind(std::string_view name);
std::string_view model_name(ModelKind kind);

/// Index into a model's action table.
struct ActionId {
    uint32_t index = 0;
    auto operator<=>(const ActionId &) const = default;
};

/// Control parameters of one qubit during one slice. Which fields are meaningful depends on the model:
/// singlet-triplet dots use (j, h); Xmon qubits use (ax, ay, az).
struct QubitControls {
    double j = 0;
    double h = 0;
    double ax = 0;
    double ay = 0;
    double az = 0;
    bool operator==(const QubitControls &) const = default;
};

/// Control parameters of the whole register during one slice.
struct ControlSettings {
    std::array<QubitControls, 2> qubit{};
    bool operator==(const ControlSettings &) const = default;
};

/// Additive offset on a named control parameter of one qubit.
/// Names: "J", "h" for dot models; "Ax", "Ay", "Az" for Xmon models.
struct ParameterOffset {
    std::string name;
    size_t qubit = 0;
    double delta = 0;
};

/// A physical control model: dimension, fixed constants, and the enumerated allowed actions.
/// Immutable after construction.
class ControlModel {
   public:
    explicit ControlModel(ModelKind kind);

    ModelKind kind() const {
        return kind_;
    }
    std::string_view name() const {
        return model_name(kind_);
    }
    size_t dim() const {
        return num_qubits_ == 1 ? 2 : 4;
    }
    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t action_count() const {
        return actions_.size();
    }
    bool is_dot_model() const {
        return kind_ == ModelKind::Dqd1 || kind_ == ModelKind::Dqd2;
    }

    /// Zeeman gap h (dot models) and Xmon coupling g, both fixed to 1.
    static constexpr double kZeemanGap = 1.0;
    static constexpr double kXmonCoupling = 1.0;

    /// Throws std::out_of_range for an invalid action.
    const ControlSettings &settings(ActionId a) const;
    std::string action_label(ActionId a) const;

    /// Settings of action `a` with the offsets added. Throws std::invalid_argument for an unknown parameter
    /// name or qubit index.
    ControlSettings perturbed(ActionId a, std::span<const ParameterOffset> offsets) const;

    /// Parameter names accepted by `perturbed` for this model.
    std::vector<std::string> parameter_names() const;

    /// Number of parameters outside their physical range (J >= 0 for one dot qubit, J > 0 for coupled dots,
    /// Az >= 0 for Xmon).
    size_t constraint_violations(const ControlSettings &s) const;

    HermitianMatrix hamiltonian(const ControlSettings &s) const;
    HermitianMatrix hamiltonian(ActionId a) const {
        return hamiltonian(settings(a));
    }
    HermitianMatrix hamiltonian(ActionId a, std::span<const ParameterOffset> offsets) const {
        return hamiltonian(perturbed(a, offsets));
    }

   private:
    ModelKind kind_;
    size_t num_qubits_;
    std::vector<ControlSettings> actions_;
};

/// One slice propagator per action, for a fixed slice duration. Immutable after construction.
class PropagatorCache {
   public:
    /// Throws std::invalid_argument unless dt > 0.
    PropagatorCache(const ControlModel &model, double dt);

    double dt() const {
        return dt_;
    }
    size_t size() const {
        return propagators_.size();
    }
    const UnitaryMatrix &operator[](ActionId a) const {
        return propagators_[a.index];
    }
    std::span<const UnitaryMatrix> propagators() const {
        return propagators_;
    }

   private:
    double dt_;
    std::vector<UnitaryMatrix> propagators_;
};

inline PropagatorCache build_cache(const ControlModel &model, double dt) {
    return PropagatorCache(model, dt);
}

}  // namespace greedyprep

#endif
