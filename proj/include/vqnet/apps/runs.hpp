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

#include <cstdint>
#include <string>
#include <string_view>

#include "vqnet/apps/dataset.hpp"
#include "vqnet/apps/maxcut.hpp"
#include "vqnet/apps/report.hpp"
#include "vqnet/optimizer.hpp"
#include "vqnet/pauli.hpp"
#include "vqnet/statevector.hpp"

namespace vqnet::apps {

struct TrainConfig {
    OptimizerConfig optimizer;
    int iterations = 200;
    SimOptions sim;
};

[[nodiscard]] nlohmann::json to_json(const OptimizerConfig &cfg);

/**
 * QAOA on a MAX-CUT instance: Hadamards on every qubit, then p layers of
 * evolution(Hp, gamma_i) and evolution(Hd, beta_i). Minimizes <Hp> and
 * reports ratio = -<Hp> / maxcut after training.
 */
[[nodiscard]] RunReport run_qaoa(const WeightedGraph &g, int p,
                                 const TrainConfig &cfg, std::uint64_t seed);

/// Qubit cap of run_vqe (largest qubit index 9).
inline constexpr int kVqeMaxQubits = 10;

/**
 * Hardware-efficient ansatz on max_qubit(H) + 1 qubits: `depth` layers of
 * RY, RZ on every qubit followed by a CNOT chain, then a last RY, RZ layer.
 * Reports the trained energy and its gap to exact diagonalization.
 */
[[nodiscard]] RunReport run_vqe(const PauliOperator &h, int depth,
                                const TrainConfig &cfg, std::uint64_t seed);

/**
 * Two-class circuit classifier. Features (already scaled to [0, pi]) enter
 * as RY angles on one qubit each; `depth` layers of RY, RZ and a CNOT chain
 * follow; CNOTs from every feature qubit onto an ancilla compute the parity.
 * The projectors (I +- Z_a)/2 feed softmax and cross entropy. A sample is
 * class 0 when E_z = <Z_a> >= 0.
 */
[[nodiscard]] RunReport run_classifier(const Split &data, int depth,
                                       const TrainConfig &cfg,
                                       std::uint64_t seed);

enum class QclTarget { kSquare, kExp, kSin, kAbs };

[[nodiscard]] QclTarget parse_qcl_target(std::string_view name);
[[nodiscard]] const char *to_string(QclTarget t) noexcept;
/// x^2, e^x, sin(pi x), |x|.
[[nodiscard]] double qcl_function(QclTarget t, double x);

struct QclSpec {
    QclTarget target = QclTarget::kSquare;
    int points = 50;
    int qubits = 3;
    int depth = 3;
    /// Initial Coef; with freeze_coef it is held fixed during training.
    double coef = 1.0;
    bool freeze_coef = false;
};

inline constexpr int kQclProbePoints = 201;

/**
 * Circuit learning of a one-dimensional function on [-1, 1]. Each qubit
 * encodes x by RY(arcsin x), RZ(arccos x^2); `depth` layers of RY, RZ, RY on
 * every qubit and a CNOT ring follow. The model is Coef * <Z_0>, trained on
 * reduce_sum(least_square(y, model)). Reports the training MSE and the
 * model on a 201-point grid.
 */
[[nodiscard]] RunReport run_qcl(const QclSpec &spec, const TrainConfig &cfg,
                                std::uint64_t seed);

} // namespace vqnet::apps
