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

#include "vqnet/exact.hpp"

#include <complex>
#include <cstdint>
#include <string>

#include "vqnet/error.hpp"

namespace vqnet {

namespace {

void check_size(const PauliOperator &op, int n_qubits) {
    if (n_qubits < 1) {
        throw ArgumentError("dense matrix needs at least one qubit");
    }
    if (n_qubits > kDenseMaxQubits) {
        throw ResourceError("dense construction limited to " +
                            std::to_string(kDenseMaxQubits) + " qubits, got " +
                            std::to_string(n_qubits));
    }
    if (max_qubit(op) >= n_qubits) {
        throw ArgumentError("operator acts on qubit " +
                            std::to_string(max_qubit(op)) + " beyond " +
                            std::to_string(n_qubits) + " qubits");
    }
}

} // namespace

Eigen::MatrixXcd pauli_matrix(const PauliOperator &op, int n_qubits) {
    check_size(op, n_qubits);
    using C = std::complex<double>;
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &term : op.terms()) {
        std::uint64_t flip = 0;
        for (const auto &[q, axis] : term.factors) {
            if (axis != PauliAxis::kZ) {
                flip |= std::uint64_t(1) << q;
            }
        }
        // Column s holds P|s> = phase(s) |s ^ flip>.
        for (Eigen::Index s = 0; s < dim; ++s) {
            const auto bits = static_cast<std::uint64_t>(s);
            C phase(term.coefficient);
            for (const auto &[q, axis] : term.factors) {
                const bool one = (bits >> q) & 1U;
                if (axis == PauliAxis::kZ && one) {
                    phase = -phase;
                } else if (axis == PauliAxis::kY) {
                    phase *= one ? C(0, -1) : C(0, 1);
                }
            }
            m(static_cast<Eigen::Index>(bits ^ flip), s) += phase;
        }
    }
    return m;
}

double dense_ground_energy(const PauliOperator &op, int n_qubits) {
    const Eigen::MatrixXcd m = pauli_matrix(op, n_qubits);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("eigensolver did not converge");
    }
    return solver.eigenvalues()(0);
}

} // namespace vqnet
