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

#include "vqnet/circuit.hpp"

#include <cstdio>

#include "vqnet/error.hpp"

namespace vqnet {

const char *gate_name(GateKind k) noexcept {
    switch (k) {
    case GateKind::kH:
        return "H";
    case GateKind::kX:
        return "X";
    case GateKind::kY:
        return "Y";
    case GateKind::kZ:
        return "Z";
    case GateKind::kS:
        return "S";
    case GateKind::kSdag:
        return "Sdag";
    case GateKind::kRX:
        return "RX";
    case GateKind::kRY:
        return "RY";
    case GateKind::kRZ:
        return "RZ";
    case GateKind::kCNOT:
        return "CNOT";
    case GateKind::kCZ:
        return "CZ";
    case GateKind::kCR:
        return "CR";
    }
    return "?";
}

std::string to_string(const Gate &g) {
    std::string out = gate_name(g.kind);
    if (has_angle(g.kind)) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "(%.6g)", g.angle);
        out += buf;
    }
    out += ' ';
    if (is_controlled(g.kind)) {
        out += "q" + std::to_string(g.control) + "->";
    }
    out += "q" + std::to_string(g.target);
    return out;
}

void validate(const BoundCircuit &circuit) {
    const int n = circuit.n_qubits;
    if (n < 1) {
        throw CircuitError("circuit needs at least one qubit");
    }
    for (const auto &g : circuit.gates) {
        if (g.target < 0 || g.target >= n) {
            throw CircuitError(to_string(g) + ": target out of range for " +
                               std::to_string(n) + " qubits");
        }
        if (is_controlled(g.kind)) {
            if (g.control < 0 || g.control >= n) {
                throw CircuitError(to_string(g) +
                                   ": control out of range for " +
                                   std::to_string(n) + " qubits");
            }
            if (g.control == g.target) {
                throw CircuitError(to_string(g) + ": control equals target");
            }
        }
    }
}

} // namespace vqnet
