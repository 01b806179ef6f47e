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

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "vqnet/circuit.hpp"
#include "vqnet/error.hpp"
#include "vqnet/pauli.hpp"

namespace vqnet {

struct SimOptions {
    int max_qubits = 20;
};

template <typename Real>
using Matrix2c = Eigen::Matrix<std::complex<Real>, 2, 2>;

/// 2x2 unitary of a gate; for controlled kinds this is the block applied
/// when the control is set.
template <typename Real> [[nodiscard]] Matrix2c<Real> gate_matrix(const Gate &g) {
    using C = std::complex<Real>;
    const C i1(0, 1);
    const Real half = static_cast<Real>(g.angle) / Real(2);
    const Real c = std::cos(half);
    const Real s = std::sin(half);
    Matrix2c<Real> m;
    switch (g.kind) {
    case GateKind::kH: {
        const Real r = Real(1) / std::sqrt(Real(2));
        m << r, r, r, -r;
        break;
    }
    case GateKind::kX:
    case GateKind::kCNOT:
        m << 0, 1, 1, 0;
        break;
    case GateKind::kY:
        m << 0, -i1, i1, 0;
        break;
    case GateKind::kZ:
    case GateKind::kCZ:
        m << 1, 0, 0, -1;
        break;
    case GateKind::kS:
        m << 1, 0, 0, i1;
        break;
    case GateKind::kSdag:
        m << 1, 0, 0, -i1;
        break;
    case GateKind::kRX:
        m << c, -i1 * s, -i1 * s, c;
        break;
    case GateKind::kRY:
        m << c, -s, s, c;
        break;
    case GateKind::kRZ:
        m << std::polar(Real(1), -half), 0, 0, std::polar(Real(1), half);
        break;
    case GateKind::kCR:
        m << 1, 0, 0, std::polar(Real(1), static_cast<Real>(g.angle));
        break;
    }
    return m;
}

/**
 * Pure state of an n-qubit register. Basis index s = sum_k q_k 2^k, i.e.
 * qubit k is bit k of the index.
 */
template <typename Real> class StateVector {
  public:
    using Complex = std::complex<Real>;
    using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits, const SimOptions &opts = {})
        : n_qubits_(n_qubits) {
        if (n_qubits < 1) {
            throw ArgumentError("state needs at least one qubit");
        }
        if (n_qubits > opts.max_qubits) {
            throw ResourceError(std::to_string(n_qubits) +
                                " qubits exceeds the cap of " +
                                std::to_string(opts.max_qubits));
        }
        amps_ = Amplitudes::Zero(Eigen::Index(1) << n_qubits);
        amps_(0) = Complex(1);
    }

    StateVector(int n_qubits, Amplitudes amplitudes)
        : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
        if (amps_.size() != (Eigen::Index(1) << n_qubits)) {
            throw ShapeError("amplitude count must be 2^n_qubits");
        }
    }

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return amps_.size(); }
    [[nodiscard]] const Amplitudes &amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Amplitudes &amplitudes() noexcept { return amps_; }
    [[nodiscard]] Real norm_squared() const { return amps_.squaredNorm(); }

    /// In-place update of the amplitudes by one gate, O(2^n).
    void apply(const Gate &g) {
        const Matrix2c<Real> m = gate_matrix<Real>(g);
        const std::uint64_t tmask = std::uint64_t(1) << g.target;
        const std::uint64_t cmask =
            is_controlled(g.kind) ? std::uint64_t(1) << g.control : 0;
        const auto d = static_cast<std::uint64_t>(dim());
        for (std::uint64_t i0 = 0; i0 < d; ++i0) {
            if ((i0 & tmask) != 0 || (i0 & cmask) != cmask) {
                continue;
            }
            const std::uint64_t i1 = i0 | tmask;
            const Complex a0 = amps_(static_cast<Eigen::Index>(i0));
            const Complex a1 = amps_(static_cast<Eigen::Index>(i1));
            amps_(static_cast<Eigen::Index>(i0)) = m(0, 0) * a0 + m(0, 1) * a1;
            amps_(static_cast<Eigen::Index>(i1)) = m(1, 0) * a0 + m(1, 1) * a1;
        }
    }

  private:
    int n_qubits_;
    Amplitudes amps_;
};

/// Applies every gate of the circuit, in order, to |0...0>.
template <typename Real = double>
[[nodiscard]] StateVector<Real> run(const BoundCircuit &circuit,
                                    const SimOptions &opts = {}) {
    if (circuit.n_qubits > opts.max_qubits) {
        throw ResourceError(std::to_string(circuit.n_qubits) +
                            " qubits exceeds the cap of " +
                            std::to_string(opts.max_qubits));
    }
    validate(circuit);
    StateVector<Real> state(circuit.n_qubits, opts);
    for (const auto &g : circuit.gates) {
        state.apply(g);
    }
    return state;
}

namespace detail {

inline void check_measured(std::span<const int> measured, int n_qubits) {
    std::uint64_t seen = 0;
    for (int q : measured) {
        if (q < 0 || q >= n_qubits) {
            throw ArgumentError("measured qubit " + std::to_string(q) +
                                " out of range");
        }
        if ((seen >> q) & 1U) {
            throw ArgumentError("measured qubit " + std::to_string(q) +
                                " listed twice");
        }
        seen |= std::uint64_t(1) << q;
    }
}

} // namespace detail

/**
 * Marginal distribution over the measured qubits. Entry j collects every
 * basis state whose measured bits, read with measured[0] as the least
 * significant bit, spell j.
 */
template <typename Real>
[[nodiscard]] std::vector<Real> probabilities(const StateVector<Real> &state,
                                              std::span<const int> measured) {
    detail::check_measured(measured, state.n_qubits());
    std::vector<Real> out(std::size_t(1) << measured.size(), Real(0));
    const auto &a = state.amplitudes();
    for (Eigen::Index s = 0; s < a.size(); ++s) {
        std::size_t j = 0;
        for (std::size_t k = 0; k < measured.size(); ++k) {
            j |= ((static_cast<std::uint64_t>(s) >> measured[k]) & 1U) << k;
        }
        out[j] += std::norm(a(s));
    }
    return out;
}

template <typename Real>
[[nodiscard]] std::vector<Real>
probabilities(const StateVector<Real> &state,
              std::initializer_list<int> measured) {
    return probabilities(state, std::span<const int>(measured.begin(),
                                                     measured.size()));
}

/// Returns P|psi> for a Pauli word P.
template <typename Real>
[[nodiscard]] StateVector<Real> apply_pauli(const StateVector<Real> &state,
                                            const PauliWord &word) {
    using C = std::complex<Real>;
    std::uint64_t flip = 0;
    for (const auto &[q, axis] : word) {
        if (q < 0 || q >= state.n_qubits()) {
            throw ArgumentError("Pauli factor on qubit " + std::to_string(q) +
                                " outside a " +
                                std::to_string(state.n_qubits()) +
                                "-qubit register");
        }
        if (axis != PauliAxis::kZ) {
            flip |= std::uint64_t(1) << q;
        }
    }
    const auto &in = state.amplitudes();
    typename StateVector<Real>::Amplitudes out(in.size());
    for (Eigen::Index s = 0; s < in.size(); ++s) {
        C phase(1);
        const auto bits = static_cast<std::uint64_t>(s);
        for (const auto &[q, axis] : word) {
            const bool one = (bits >> q) & 1U;
            if (axis == PauliAxis::kZ) {
                phase *= one ? Real(-1) : Real(1);
            } else if (axis == PauliAxis::kY) {
                phase *= one ? C(0, -1) : C(0, 1);
            }
        }
        out(static_cast<Eigen::Index>(bits ^ flip)) = phase * in(s);
    }
    return StateVector<Real>(state.n_qubits(), std::move(out));
}

/// <psi|H|psi> as sum_i C_i <psi|H_i|psi>; identity terms add C_i.
template <typename Real>
[[nodiscard]] Real expectation(const StateVector<Real> &state,
                               const PauliOperator &op) {
    if (max_qubit(op) >= state.n_qubits()) {
        throw ArgumentError("operator acts on qubit " +
                            std::to_string(max_qubit(op)) + " of a " +
                            std::to_string(state.n_qubits()) +
                            "-qubit register");
    }
    Real total(0);
    for (const auto &term : op.terms()) {
        if (term.is_identity()) {
            total += static_cast<Real>(term.coefficient);
            continue;
        }
        const auto moved = apply_pauli(state, term.factors);
        total += static_cast<Real>(term.coefficient) *
                 state.amplitudes().dot(moved.amplitudes()).real();
    }
    return total;
}

} // namespace vqnet
