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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "test_util.hpp"

namespace vqnet {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr ParamRef kP0{0, 0};
constexpr ParamRef kP1{0, 1};

VQC random_vqc(std::mt19937_64 &rng, int n, int n_gates, int n_params) {
    VQC c(n);
    const GateKind rotations[] = {GateKind::kRX, GateKind::kRY, GateKind::kRZ};
    for (int i = 0; i < n_gates; ++i) {
        const int t = static_cast<int>(rng() % static_cast<unsigned>(n));
        switch (rng() % 4) {
        case 0:
            c.insert(Gate::h(t));
            break;
        case 1:
            if (n > 1) {
                c.insert(Gate::cnot((t + 1) % n, t));
            }
            break;
        default:
            c.insert(rotations[rng() % 3], t,
                     ParamRef{0, rng() % static_cast<unsigned>(n_params)},
                     testing::uniform(rng, -2, 2));
        }
    }
    return c;
}

ParamValues random_values(std::mt19937_64 &rng, const VQC &c) {
    ParamValues v;
    for (const auto &p : c.params()) {
        v[p] = testing::uniform(rng, -kPi, kPi);
    }
    return v;
}

TEST(VQC, InsertRecordsOccurrences) {
    VQC c(2);
    c.insert(Gate::h(0))
        .insert(GateKind::kRY, 0, kP0)
        .insert(Gate::cnot(0, 1))
        .insert(GateKind::kRZ, 1, kP1, 2.0)
        .insert(GateKind::kRY, 1, kP0, -0.5);
    EXPECT_EQ(c.gate_count(), 5U);
    EXPECT_EQ(c.param_count(), 2U);
    EXPECT_EQ(c.occurrences().at(kP0), (std::vector<std::size_t>{1, 4}));
    EXPECT_EQ(c.occurrences().at(kP1), (std::vector<std::size_t>{3}));
    EXPECT_EQ(c.params(), (std::vector<ParamRef>{kP0, kP1}));
}

TEST(VQC, InsertErrors) {
    VQC c(2);
    EXPECT_THROW(c.insert(GateKind::kH, 0, kP0), ArgumentError);
    EXPECT_THROW(c.insert(GateKind::kRY, 0, kP0, 0.0), ArgumentError);
    EXPECT_THROW(c.insert(GateKind::kRY, 0, kP0, NAN), ArgumentError);
    EXPECT_THROW(c.insert(GateKind::kRY, 2, kP0), CircuitError);
    EXPECT_THROW(c.insert(Gate::cnot(0, 0)), CircuitError);
    EXPECT_THROW(c.insert(VQC(3)), CircuitError);
}

TEST(VQC, InsertCircuitShiftsOccurrences) {
    VQC a(1);
    a.insert(GateKind::kRX, 0, kP0);
    VQC b(1);
    b.insert(Gate::h(0)).insert(GateKind::kRX, 0, kP0);
    a.insert(b);
    EXPECT_EQ(a.occurrences().at(kP0), (std::vector<std::size_t>{0, 2}));
}

TEST(Bind, ResolvesAngles) {
    VQC c(1);
    c.insert(GateKind::kRY, 0, kP0, 3.0).insert(Gate::rz(0, 0.25));
    c.insert_data(GateKind::kRX, 0, 1, [](double x) { return 2 * x; });
    const std::vector<double> row{9.0, 0.5};
    const auto bound = vqnet::bind(c, {{kP0, 0.1}}, row);
    ASSERT_EQ(bound.gates.size(), 3U);
    EXPECT_DOUBLE_EQ(bound.gates[0].angle, 0.3);
    EXPECT_EQ(bound.gates[1].angle, 0.25);
    EXPECT_EQ(bound.gates[2].angle, 1.0);
    EXPECT_EQ(c.data_width(), 2U);
}

TEST(Bind, Errors) {
    VQC c(1);
    c.insert(GateKind::kRY, 0, kP0);
    EXPECT_THROW((void)vqnet::bind(c, {}), UnboundError);
    EXPECT_THROW((void)vqnet::bind(c, {{kP1, 1.0}}), UnboundError);
    c.insert_data(GateKind::kRX, 0, 2);
    const std::vector<double> short_row{1.0};
    EXPECT_THROW((void)vqnet::bind(c, {{kP0, 1.0}}, short_row), ArgumentError);
}

TEST(ExpectationOf, SingleRotation) {
    VQC c(1);
    c.insert(GateKind::kRY, 0, kP0);
    const PauliOperator z{{"Z0", 1}};
    EXPECT_NEAR(expectation_of(c, {{kP0, 0.3}}, z), 0.955336489125606, 1e-12);
    EXPECT_THROW((void)expectation_of(c, {{kP0, 0.3}}, PauliOperator{{"Z1", 1}}),
                 ArgumentError);
}

TEST(ParameterShift, SingleRotation) {
    VQC c(1);
    c.insert(GateKind::kRY, 0, kP0);
    const auto g = parameter_shift_grad(c, {{kP0, 0.3}}, PauliOperator{{"Z0", 1}});
    EXPECT_NEAR(g.at(kP0), -0.29552020666133955, 1e-10);
}

TEST(ParameterShift, CoefficientScales) {
    VQC c(1);
    c.insert(GateKind::kRY, 0, kP0, 2.0);
    const auto g = parameter_shift_grad(c, {{kP0, 0.3}}, PauliOperator{{"Z0", 1}});
    // d/dt cos(2t) = -2 sin(2t)
    EXPECT_NEAR(g.at(kP0), -2 * std::sin(0.6), 1e-10);
}

TEST(ParameterShift, SharedParameterSumsOccurrences) {
    // RY(t) RY(t) on one qubit: <Z> = cos 2t.
    VQC c(1);
    c.insert(GateKind::kRY, 0, kP0).insert(GateKind::kRY, 0, kP0);
    const auto g = parameter_shift_grad(c, {{kP0, 0.2}}, PauliOperator{{"Z0", 1}});
    EXPECT_NEAR(g.at(kP0), -0.778836684617301, 1e-10);
}

TEST(ParameterShift, EveryParameterHasAnEntry) {
    VQC c(2);
    c.insert(GateKind::kRY, 0, kP0).insert(GateKind::kRY, 1, kP1);
    const auto g =
        parameter_shift_grad(c, {{kP0, 0.4}, {kP1, 0.7}}, PauliOperator{{"Z0", 1}});
    ASSERT_EQ(g.size(), 2U);
    EXPECT_EQ(g.at(kP1), 0.0);
}

TEST(ParameterShiftProperty, MatchesFiniteDifferences) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto c = random_vqc(rng, n, 20, 4);
        const auto values = random_values(rng, c);
        const auto h = testing::random_pauli(rng, n, 3);
        const auto g = parameter_shift_grad(c, values, h);
        for (const auto &p : c.params()) {
            auto f = [&](double x) {
                auto v = values;
                v[p] = x;
                return expectation_of(c, v, h);
            };
            EXPECT_NEAR(g.at(p), testing::central_difference(f, values.at(p), 1e-4),
                        1e-6);
        }
    }
}

TEST(ParameterShiftProperty, DeterministicAndMatchesMultiHam) {
    std::mt19937_64 rng(42);
    const auto c = random_vqc(rng, 3, 25, 5);
    const auto values = random_values(rng, c);
    const std::vector<PauliOperator> hams{testing::random_pauli(rng, 3, 4),
                                          testing::random_pauli(rng, 3, 2)};
    const auto many = parameter_shift_grads(c, values, hams);
    for (std::size_t k = 0; k < hams.size(); ++k) {
        const auto a = parameter_shift_grad(c, values, hams[k]);
        const auto b = parameter_shift_grad(c, values, hams[k]);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a, many[k]);
    }
}

TEST(ParameterShiftProperty, CommutatorIdentityOnRandomHermitian) {
    // For U = RA(t) and any Hermitian M on one qubit,
    // d/dt <psi|U^+ M U|psi> = i <psi|U^+ [sigma/2, M] U|psi>, and the shift
    // rule reproduces it exactly.
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const char axis = "XYZ"[rng() % 3];
        const double t = testing::uniform(rng, -kPi, kPi);
        testing::Mat m(2, 2);
        const double a = testing::uniform(rng, -1, 1);
        const double d = testing::uniform(rng, -1, 1);
        const testing::C b(testing::uniform(rng, -1, 1),
                           testing::uniform(rng, -1, 1));
        m << a, b, std::conj(b), d;
        const testing::Vec psi = testing::random_state(rng, 1);
        auto e = [&](double x) {
            const testing::Mat u = testing::rotation2(axis, x);
            return (psi.adjoint() * u.adjoint() * m * u * psi)(0, 0).real();
        };
        const testing::Mat s = testing::pauli2(axis) / 2.0;
        const testing::Mat u = testing::rotation2(axis, t);
        const testing::Mat comm = s * m - m * s;
        const double analytic =
            (testing::C(0, 1) * (psi.adjoint() * u.adjoint() * comm * u * psi)(0, 0))
                .real();
        const double shifted = (e(t + kPi / 2) - e(t - kPi / 2)) / 2;
        EXPECT_NEAR(shifted, analytic, 1e-12);
    }
}

TEST(Pmeasure, Examples) {
    VQC c(2);
    c.insert(GateKind::kRY, 0, kP0);
    const std::vector<int> measured{0};
    const std::vector<std::size_t> comps{0, 1};
    const auto p = pmeasure_of(c, {{kP0, 0.6}}, measured, comps);
    EXPECT_NEAR(p[0], 1.0 - 0.08733219254516084,
                1e-12);
    EXPECT_NEAR(p[1], 0.08733219254516084, 1e-12);
    const auto g = pmeasure_grad(c, {{kP0, 0.6}}, measured, comps);
    EXPECT_NEAR(g[1].at(kP0), std::sin(0.6) / 2, 1e-10);
    EXPECT_NEAR(g[0].at(kP0), -0.2823212366975177, 1e-10);

    const std::vector<std::size_t> bad{2};
    EXPECT_THROW((void)pmeasure_of(c, {{kP0, 0.6}}, measured, bad),
                 ArgumentError);
}

TEST(PmeasureProperty, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_vqc(rng, 3, 18, 3);
        const auto values = random_values(rng, c);
        const std::vector<int> measured{2, 0};
        const std::vector<std::size_t> comps{0, 1, 2, 3};
        const auto g = pmeasure_grad(c, values, measured, comps);
        for (const auto &p : c.params()) {
            for (std::size_t k = 0; k < comps.size(); ++k) {
                auto f = [&](double x) {
                    auto v = values;
                    v[p] = x;
                    return pmeasure_of(c, v, measured, comps)[k];
                };
                EXPECT_NEAR(g[k].at(p),
                            testing::central_difference(f, values.at(p), 1e-4),
                            1e-6);
            }
        }
    }
}

testing::Mat vqc_unitary(const VQC &c, double theta) {
    ParamValues v;
    for (const auto &p : c.params()) {
        v[p] = theta;
    }
    return testing::circuit_unitary(vqnet::bind(c, v));
}

TEST(Evolution, SingleZTerm) {
    VQC c(1);
    evolution(c, PauliOperator{{"Z0", 1}}, kP0);
    ASSERT_EQ(c.gate_count(), 1U);
    EXPECT_EQ(c.gates()[0].base.kind, GateKind::kRZ);
    EXPECT_EQ(std::get<BoundAngle>(c.gates()[0].source).coefficient, 2.0);
}

TEST(Evolution, RejectsAnticommutingTerms) {
    VQC c(2);
    EXPECT_THROW(evolution(c, PauliOperator{{"Z0", 1}, {"X0", 1}}, kP0),
                 UnsupportedError);
}

TEST(EvolutionProperty, MatchesMatrixExponential) {
    std::mt19937_64 rng(45);
    const std::vector<PauliOperator> cases{
        {{"Z0 Z1", 0.5}, {"Z1 Z2", -0.3}, {"I", 0.7}},
        {{"X0", 1}, {"X1", 1}, {"X2", 1}},
        {{"Y0 Y1", 0.4}},
        {{"X0 X1", 0.2}, {"Y0 Y1", 0.9}, {"Z0 Z1", -0.6}},
        {{"X0 Y1 Z2", 1.1}},
    };
    for (const auto &h : cases) {
        VQC c(3);
        evolution(c, h, kP0);
        for (int k = 0; k < 5; ++k) {
            const double theta = testing::uniform(rng, -2, 2);
            const testing::Mat expected =
                (testing::C(0, -theta) * testing::pauli_dense(h, 3)).exp();
            const testing::Mat got = vqc_unitary(c, theta);
            // Identity terms contribute only a global phase.
            const testing::C phase = expected(0, 0) / got(0, 0);
            if (std::abs(got(0, 0)) > 1e-6) {
                EXPECT_LT((got * phase - expected).norm(), 1e-10) << to_string(
                    h.terms().front().factors);
            } else {
                EXPECT_LT((got.cwiseAbs() - expected.cwiseAbs()).norm(), 1e-10);
            }
        }
    }
}

TEST(Evolution, QubitMapping) {
    VQC c(3);
    const std::vector<int> qubits{2, 0};
    evolution(c, PauliOperator{{"Z0 Z1", 1}}, kP0, qubits);
    VQC d(3);
    evolution(d, PauliOperator{{"Z2 Z0", 1}}, kP0);
    EXPECT_LT((vqc_unitary(c, 0.7) - vqc_unitary(d, 0.7)).norm(), 1e-12);
    const std::vector<int> too_short{1};
    EXPECT_THROW(evolution(c, PauliOperator{{"Z1", 1}}, kP0, too_short),
                 ArgumentError);
}

TEST(QuantumMachine, Allocation) {
    QuantumMachine m(SimOptions{4});
    const auto a = m.allocate(3);
    EXPECT_EQ(a.qubits, (std::vector<int>{0, 1, 2}));
    EXPECT_THROW((void)m.allocate(2), ResourceError);
    EXPECT_EQ(m.allocate(1).qubits, (std::vector<int>{3}));
    EXPECT_THROW((void)m.allocate(0), ResourceError);
}

} // namespace
} // namespace vqnet
