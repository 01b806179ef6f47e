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

#include <Eigen/Dense>

#include "vqnet/pauli.hpp"

namespace vqnet {

/// Largest register accepted by the dense routines below.
inline constexpr int kDenseMaxQubits = 10;

/// Dense 2^n x 2^n matrix of a Pauli operator in the little-endian basis.
[[nodiscard]] Eigen::MatrixXcd pauli_matrix(const PauliOperator &op,
                                            int n_qubits);

/// Smallest eigenvalue of the operator on n qubits by exact
/// diagonalization. Throws ResourceError above kDenseMaxQubits.
[[nodiscard]] double dense_ground_energy(const PauliOperator &op,
                                         int n_qubits);

} // namespace vqnet
