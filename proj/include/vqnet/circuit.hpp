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

#include <string>
#include <vector>

namespace vqnet {

enum class GateKind {
    kH,
    kX,
    kY,
    kZ,
    kS,
    kSdag,
    kRX,
    kRY,
    kRZ,
    kCNOT,
    kCZ,
    kCR, ///< controlled phase diag(1, 1, 1, e^{i angle})
};

[[nodiscard]] constexpr bool is_rotation(GateKind k) noexcept {
    return k == GateKind::kRX || k == GateKind::kRY || k == GateKind::kRZ;
}

[[nodiscard]] constexpr bool is_controlled(GateKind k) noexcept {
    return k == GateKind::kCNOT || k == GateKind::kCZ || k == GateKind::kCR;
}

[[nodiscard]] constexpr bool has_angle(GateKind k) noexcept {
    return is_rotation(k) || k == GateKind::kCR;
}

[[nodiscard]] const char *gate_name(GateKind k) noexcept;

/**
 * One gate of a bound circuit. Rotations follow RA(angle) = exp(-i angle
 * sigma_A / 2). `control` is -1 for single-qubit gates.
 */
struct Gate {
    GateKind kind = GateKind::kH;
    int target = 0;
    int control = -1;
    double angle = 0.0;

    [[nodiscard]] static Gate h(int q) { return {GateKind::kH, q}; }
    [[nodiscard]] static Gate x(int q) { return {GateKind::kX, q}; }
    [[nodiscard]] static Gate y(int q) { return {GateKind::kY, q}; }
    [[nodiscard]] static Gate z(int q) { return {GateKind::kZ, q}; }
    [[nodiscard]] static Gate s(int q) { return {GateKind::kS, q}; }
    [[nodiscard]] static Gate sdag(int q) { return {GateKind::kSdag, q}; }
    [[nodiscard]] static Gate rx(int q, double a) {
        return {GateKind::kRX, q, -1, a};
    }
    [[nodiscard]] static Gate ry(int q, double a) {
        return {GateKind::kRY, q, -1, a};
    }
    [[nodiscard]] static Gate rz(int q, double a) {
        return {GateKind::kRZ, q, -1, a};
    }
    [[nodiscard]] static Gate cnot(int c, int t) {
        return {GateKind::kCNOT, t, c};
    }
    [[nodiscard]] static Gate cz(int c, int t) { return {GateKind::kCZ, t, c}; }
    [[nodiscard]] static Gate cr(int c, int t, double a) {
        return {GateKind::kCR, t, c, a};
    }

    friend bool operator==(const Gate &, const Gate &) = default;
};

[[nodiscard]] std::string to_string(const Gate &g);

struct BoundCircuit {
    int n_qubits = 1;
    std::vector<Gate> gates;
};

/// Throws CircuitError when a gate index is outside [0, n_qubits) or a
/// controlled gate controls its own target.
void validate(const BoundCircuit &circuit);

} // namespace vqnet
