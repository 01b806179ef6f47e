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

#include "vqnet/vqc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "vqnet/error.hpp"

namespace vqnet {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::string describe(ParamRef p) {
    return "variable " + std::to_string(p.variable) + "[" +
           std::to_string(p.element) + "]";
}

double lookup(const ParamValues &values, ParamRef p) {
    auto it = values.find(p);
    if (it == values.end()) {
        throw UnboundError("no value bound for " + describe(p));
    }
    return it->second;
}

void check_hams(const VQC &vqc, std::span<const PauliOperator> hams) {
    for (const auto &h : hams) {
        if (max_qubit(h) >= vqc.n_qubits()) {
            throw ArgumentError("Hamiltonian acts on qubit " +
                                std::to_string(max_qubit(h)) + " of a " +
                                std::to_string(vqc.n_qubits()) +
                                "-qubit circuit");
        }
    }
}

void check_components(std::span<const int> measured,
                      std::span<const std::size_t> components) {
    const std::size_t limit = std::size_t(1) << measured.size();
    for (std::size_t c : components) {
        if (c >= limit) {
            throw ArgumentError("component label " + std::to_string(c) +
                                " out of range for " +
                                std::to_string(measured.size()) +
                                " measured qubits");
        }
    }
}

/**
 * Shared parameter-shift driver. `eval` maps a bound circuit to a vector of
 * n_out observables; returns one gradient per observable.
 */
template <typename Eval>
std::vector<Gradient> shift_rule(const VQC &vqc, const ParamValues &values,
                                 std::span<const double> data_row,
                                 std::size_t n_out, Eval &&eval) {
    BoundCircuit circuit = bind(vqc, values, data_row);
    std::vector<Gradient> grads(n_out);
    for (const auto &[param, positions] : vqc.occurrences()) {
        std::vector<double> acc(n_out, 0.0);
        for (std::size_t j : positions) {
            const auto &src = std::get<BoundAngle>(vqc.gates()[j].source);
            const double centre = circuit.gates[j].angle;
            circuit.gates[j].angle = centre + kHalfPi;
            const std::vector<double> plus = eval(circuit);
            circuit.gates[j].angle = centre - kHalfPi;
            const std::vector<double> minus = eval(circuit);
            circuit.gates[j].angle = centre;
            for (std::size_t k = 0; k < n_out; ++k) {
                acc[k] += src.coefficient * (plus[k] - minus[k]) / 2.0;
            }
        }
        for (std::size_t k = 0; k < n_out; ++k) {
            grads[k][param] = acc[k];
        }
    }
    return grads;
}

std::vector<double> select(const std::vector<double> &probs,
                           std::span<const std::size_t> components) {
    std::vector<double> out;
    out.reserve(components.size());
    for (std::size_t c : components) {
        out.push_back(probs[c]);
    }
    return out;
}

} // namespace

VQC::VQC(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw ArgumentError("a VQC needs at least one qubit");
    }
}

void VQC::check_qubits(const Gate &g) const {
    validate(BoundCircuit{n_qubits_, {g}});
}

VQC &VQC::insert(const Gate &gate) {
    check_qubits(gate);
    gates_.push_back({gate, FixedAngle{gate.angle}});
    return *this;
}

VQC &VQC::insert(GateKind kind, int target, ParamRef p, double coefficient) {
    if (!is_rotation(kind)) {
        throw ArgumentError(std::string("only rotations can be bound, got ") +
                            gate_name(kind));
    }
    if (!std::isfinite(coefficient) || coefficient == 0.0) {
        throw ArgumentError("angle coefficient must be finite and non-zero");
    }
    const Gate g{kind, target};
    check_qubits(g);
    occurrences_[p].push_back(gates_.size());
    gates_.push_back({g, BoundAngle{p, coefficient}});
    return *this;
}

VQC &VQC::insert_data(GateKind kind, int target, std::size_t feature,
                      std::function<double(double)> encode) {
    if (!is_rotation(kind)) {
        throw ArgumentError(std::string("only rotations can encode data, got ") +
                            gate_name(kind));
    }
    const Gate g{kind, target};
    check_qubits(g);
    if (!encode) {
        encode = [](double x) { return x; };
    }
    gates_.push_back({g, DataAngle{feature, std::move(encode)}});
    data_width_ = std::max(data_width_, feature + 1);
    return *this;
}

VQC &VQC::insert(const VQC &other) {
    if (other.n_qubits_ > n_qubits_) {
        throw CircuitError("cannot append a " +
                           std::to_string(other.n_qubits_) +
                           "-qubit circuit to a " + std::to_string(n_qubits_) +
                           "-qubit one");
    }
    const std::size_t offset = gates_.size();
    for (const auto &g : other.gates_) {
        gates_.push_back(g);
    }
    for (const auto &[p, positions] : other.occurrences_) {
        auto &dst = occurrences_[p];
        for (std::size_t j : positions) {
            dst.push_back(j + offset);
        }
    }
    data_width_ = std::max(data_width_, other.data_width_);
    return *this;
}

std::vector<ParamRef> VQC::params() const {
    std::vector<ParamRef> out;
    out.reserve(occurrences_.size());
    for (const auto &entry : occurrences_) {
        out.push_back(entry.first);
    }
    return out;
}

BoundCircuit bind(const VQC &vqc, const ParamValues &values,
                  std::span<const double> data_row) {
    if (data_row.size() < vqc.data_width()) {
        throw ArgumentError("circuit reads " +
                            std::to_string(vqc.data_width()) +
                            " data features, row has " +
                            std::to_string(data_row.size()));
    }
    BoundCircuit out{vqc.n_qubits(), {}};
    out.gates.reserve(vqc.gate_count());
    for (const auto &vg : vqc.gates()) {
        Gate g = vg.base;
        if (const auto *b = std::get_if<BoundAngle>(&vg.source)) {
            g.angle = b->coefficient * lookup(values, b->param);
        } else if (const auto *d = std::get_if<DataAngle>(&vg.source)) {
            g.angle = d->encode(data_row[d->feature]);
        }
        out.gates.push_back(g);
    }
    return out;
}

double expectation_of(const VQC &vqc, const ParamValues &values,
                      const PauliOperator &h, std::span<const double> data_row,
                      const SimOptions &opts) {
    return expectations_of(vqc, values, std::span(&h, 1), data_row, opts)[0];
}

std::vector<double> expectations_of(const VQC &vqc, const ParamValues &values,
                                    std::span<const PauliOperator> hams,
                                    std::span<const double> data_row,
                                    const SimOptions &opts) {
    check_hams(vqc, hams);
    const auto state = run(bind(vqc, values, data_row), opts);
    std::vector<double> out;
    out.reserve(hams.size());
    for (const auto &h : hams) {
        out.push_back(expectation(state, h));
    }
    return out;
}

Gradient parameter_shift_grad(const VQC &vqc, const ParamValues &values,
                              const PauliOperator &h,
                              std::span<const double> data_row,
                              const SimOptions &opts) {
    return parameter_shift_grads(vqc, values, std::span(&h, 1), data_row,
                                 opts)[0];
}

std::vector<Gradient> parameter_shift_grads(const VQC &vqc,
                                            const ParamValues &values,
                                            std::span<const PauliOperator> hams,
                                            std::span<const double> data_row,
                                            const SimOptions &opts) {
    check_hams(vqc, hams);
    return shift_rule(vqc, values, data_row, hams.size(),
                      [&](const BoundCircuit &c) {
                          const auto state = run(c, opts);
                          std::vector<double> out;
                          out.reserve(hams.size());
                          for (const auto &h : hams) {
                              out.push_back(expectation(state, h));
                          }
                          return out;
                      });
}

std::vector<double> pmeasure_of(const VQC &vqc, const ParamValues &values,
                                std::span<const int> measured,
                                std::span<const std::size_t> components,
                                std::span<const double> data_row,
                                const SimOptions &opts) {
    check_components(measured, components);
    const auto state = run(bind(vqc, values, data_row), opts);
    return select(probabilities(state, measured), components);
}

std::vector<Gradient> pmeasure_grad(const VQC &vqc, const ParamValues &values,
                                    std::span<const int> measured,
                                    std::span<const std::size_t> components,
                                    std::span<const double> data_row,
                                    const SimOptions &opts) {
    check_components(measured, components);
    detail::check_measured(measured, vqc.n_qubits());
    return shift_rule(vqc, values, data_row, components.size(),
                      [&](const BoundCircuit &c) {
                          return select(probabilities(run(c, opts), measured),
                                        components);
                      });
}

void evolution(VQC &vqc, const PauliOperator &h, ParamRef p,
               std::span<const int> qubits) {
    const auto &terms = h.terms();
    for (std::size_t a = 0; a < terms.size(); ++a) {
        for (std::size_t b = a + 1; b < terms.size(); ++b) {
            if (!commutes(terms[a].factors, terms[b].factors)) {
                throw UnsupportedError(
                    "evolution needs commuting terms; '" +
                    to_string(terms[a].factors) + "' and '" +
                    to_string(terms[b].factors) + "' anticommute");
            }
        }
    }
    auto physical = [&](int q) {
        if (qubits.empty()) {
            return q;
        }
        if (q >= static_cast<int>(qubits.size())) {
            throw ArgumentError("term qubit " + std::to_string(q) +
                                " has no entry in the qubit list");
        }
        return qubits[static_cast<std::size_t>(q)];
    };

    for (const auto &term : terms) {
        if (term.is_identity()) {
            continue;
        }
        std::vector<std::pair<int, PauliAxis>> factors;
        for (const auto &[q, axis] : term.factors) {
            factors.emplace_back(physical(q), axis);
        }
        auto change_basis = [&](bool undo) {
            for (const auto &[q, axis] : factors) {
                if (axis == PauliAxis::kX) {
                    vqc.insert(Gate::h(q));
                } else if (axis == PauliAxis::kY) {
                    vqc.insert(Gate::rx(q, undo ? -kHalfPi : kHalfPi));
                }
            }
        };
        change_basis(false);
        for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
            vqc.insert(Gate::cnot(factors[k].first, factors[k + 1].first));
        }
        vqc.insert(GateKind::kRZ, factors.back().first, p,
                   2.0 * term.coefficient);
        for (std::size_t k = factors.size() - 1; k > 0; --k) {
            vqc.insert(Gate::cnot(factors[k - 1].first, factors[k].first));
        }
        change_basis(true);
    }
}

QubitAllocation QuantumMachine::allocate(int n) {
    if (n < 1 || allocated_ + n > opts_.max_qubits) {
        throw ResourceError("cannot allocate " + std::to_string(n) +
                            " qubits; " + std::to_string(allocated_) + " of " +
                            std::to_string(opts_.max_qubits) + " in use");
    }
    QubitAllocation out;
    for (int k = 0; k < n; ++k) {
        out.qubits.push_back(allocated_ + k);
    }
    allocated_ += n;
    return out;
}

} // namespace vqnet
