// Copyright 2026 The VQNet Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "vqnet/circuit.hpp"
#include "vqnet/pauli.hpp"
#include "vqnet/statevector.hpp"

namespace vqnet {

/// One scalar element of a trainable variable: (variable id, row-major
/// element index).
struct ParamRef {
    std::size_t variable = 0;
    std::size_t element = 0;

    friend auto operator<=>(const ParamRef &, const ParamRef &) = default;
};

using ParamValues = std::map<ParamRef, double>;
using Gradient = std::map<ParamRef, double>;

/// Angle fixed at construction time.
struct FixedAngle {
    double angle = 0.0;
};

/// angle = coefficient * value(param).
struct BoundAngle {
    ParamRef param;
    double coefficient = 1.0;
};

/// angle = encode(data_row[feature]); never differentiated.
struct DataAngle {
    std::size_t feature = 0;
    std::function<double(double)> encode;
};

using AngleSource = std::variant<FixedAngle, BoundAngle, DataAngle>;

struct VariationalGate {
    Gate base;
    AngleSource source;
};

/**
 * Variational quantum circuit: an ordered chain of gates, some of whose
 * rotation angles are linear in trainable parameters, plus the map from
 * every parameter to the positions of the gates it drives.
 */
class VQC {
  public:
    explicit VQC(int n_qubits);

    /// Appends a gate whose angle (if any) is taken verbatim.
    VQC &insert(const Gate &gate);
    /// Appends a rotation of `kind` on `target` with angle coefficient * p.
    VQC &insert(GateKind kind, int target, ParamRef p,
                double coefficient = 1.0);
    /// Appends a rotation whose angle is computed from one feature of the
    /// data row supplied at bind time.
    VQC &insert_data(GateKind kind, int target, std::size_t feature,
                     std::function<double(double)> encode = {});
    /// Appends every gate of another circuit on the same register.
    VQC &insert(const VQC &other);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<VariationalGate> &gates() const noexcept {
        return gates_;
    }
    /// Parameter -> ascending gate positions.
    [[nodiscard]] const std::map<ParamRef, std::vector<std::size_t>> &
    occurrences() const noexcept {
        return occurrences_;
    }
    [[nodiscard]] std::vector<ParamRef> params() const;
    [[nodiscard]] std::size_t gate_count() const noexcept {
        return gates_.size();
    }
    [[nodiscard]] std::size_t param_count() const noexcept {
        return occurrences_.size();
    }
    /// Number of data features read by data-driven gates (0 if none).
    [[nodiscard]] std::size_t data_width() const noexcept {
        return data_width_;
    }

  private:
    void check_qubits(const Gate &g) const;

    int n_qubits_;
    std::vector<VariationalGate> gates_;
    std::map<ParamRef, std::vector<std::size_t>> occurrences_;
    std::size_t data_width_ = 0;
};

/// Resolves every angle. Throws UnboundError naming a parameter without a
/// value, or ArgumentError when the data row is too short.
[[nodiscard]] BoundCircuit bind(const VQC &vqc, const ParamValues &values,
                                std::span<const double> data_row = {});

[[nodiscard]] double expectation_of(const VQC &vqc, const ParamValues &values,
                                    const PauliOperator &h,
                                    std::span<const double> data_row = {},
                                    const SimOptions &opts = {});

/// One circuit run, one expectation per operator.
[[nodiscard]] std::vector<double>
expectations_of(const VQC &vqc, const ParamValues &values,
                std::span<const PauliOperator> hams,
                std::span<const double> data_row = {},
                const SimOptions &opts = {});

/**
 * Parameter-shift gradient of <H>. For every parameter, sums
 * C_j (E+ - E-) / 2 over its gate positions j in ascending order, where E+-
 * re-run the circuit with only gate j's angle moved by +-pi/2.
 */
[[nodiscard]] Gradient parameter_shift_grad(
    const VQC &vqc, const ParamValues &values, const PauliOperator &h,
    std::span<const double> data_row = {}, const SimOptions &opts = {});

/// Gradients of several observables sharing each shifted circuit run; entry
/// i belongs to hams[i].
[[nodiscard]] std::vector<Gradient> parameter_shift_grads(
    const VQC &vqc, const ParamValues &values,
    std::span<const PauliOperator> hams, std::span<const double> data_row = {},
    const SimOptions &opts = {});

/// Selected entries of the marginal distribution over `measured`.
[[nodiscard]] std::vector<double>
pmeasure_of(const VQC &vqc, const ParamValues &values,
            std::span<const int> measured, std::span<const std::size_t> components,
            std::span<const double> data_row = {}, const SimOptions &opts = {});

/// Parameter-shift gradient of each selected probability; entry i belongs to
/// components[i].
[[nodiscard]] std::vector<Gradient>
pmeasure_grad(const VQC &vqc, const ParamValues &values,
              std::span<const int> measured,
              std::span<const std::size_t> components,
              std::span<const double> data_row = {},
              const SimOptions &opts = {});

/**
 * Appends exp(-i theta H) for a Hamiltonian of mutually commuting terms,
 * with theta the parameter p. Each term C P becomes a basis change, a CNOT
 * ladder onto its highest qubit, an RZ bound to p with coefficient 2C, and
 * the inverse ladder and basis change. Identity terms (a global phase) add
 * nothing. Term qubit k is mapped to qubits[k] when `qubits` is non-empty.
 */
void evolution(VQC &vqc, const PauliOperator &h, ParamRef p,
               std::span<const int> qubits = {});

struct QubitAllocation {
    std::vector<int> qubits;

    [[nodiscard]] int size() const noexcept {
        return static_cast<int>(qubits.size());
    }
};

/// Handle on the simulator backing the quantum graph operators.
class QuantumMachine {
  public:
    explicit QuantumMachine(SimOptions opts = {}) : opts_(opts) {}

    /// Reserves the next n qubits; throws ResourceError past the cap.
    [[nodiscard]] QubitAllocation allocate(int n);

    [[nodiscard]] const SimOptions &options() const noexcept { return opts_; }

  private:
    SimOptions opts_;
    int allocated_ = 0;
};

} // namespace vqnet
