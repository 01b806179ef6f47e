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

#include "vqnet/apps/runs.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "vqnet/apps/random.hpp"
#include "vqnet/error.hpp"
#include "vqnet/exact.hpp"
#include "vqnet/graph.hpp"

namespace vqnet::apps {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Column of n angles uniform in [0, 2 pi).
Tensor random_angles(std::mt19937_64 &rng, Eigen::Index n) {
    Tensor t = Tensor::zeros(n, 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        t[i] = uniform(rng, 0.0, kTwoPi);
    }
    return t;
}

void check_train_config(const TrainConfig &cfg) {
    cfg.optimizer.validate();
    if (cfg.iterations < 1) {
        throw ArgumentError("iterations must be at least 1");
    }
}

nlohmann::json base_config(const TrainConfig &cfg) {
    nlohmann::json j;
    j["optimizer"] = to_json(cfg.optimizer);
    j["iterations"] = cfg.iterations;
    j["max_qubits"] = cfg.sim.max_qubits;
    return j;
}

} // namespace

nlohmann::json to_json(const OptimizerConfig &cfg) {
    return {{"kind", to_string(cfg.kind)},
            {"learning_rate", cfg.learning_rate},
            {"momentum", cfg.momentum},
            {"beta1", cfg.beta1},
            {"beta2", cfg.beta2},
            {"epsilon", cfg.epsilon},
            {"decay", cfg.decay}};
}

// --- QAOA -------------------------------------------------------------------

RunReport run_qaoa(const WeightedGraph &g, int p, const TrainConfig &cfg,
                   std::uint64_t seed) {
    const auto start = Clock::now();
    check_train_config(cfg);
    if (p < 1) {
        throw ArgumentError("QAOA needs p >= 1");
    }
    const auto [hp, hd] = maxcut_hamiltonians(g);
    const MaxCut best = brute_force_maxcut(g);

    std::mt19937_64 rng(seed);
    Graph graph;
    QuantumMachine machine(cfg.sim);
    const QubitAllocation qubits = machine.allocate(g.n);
    Node gamma = graph.var(random_angles(rng, p));
    Node beta = graph.var(random_angles(rng, p));

    VQC vqc(g.n);
    for (int q = 0; q < g.n; ++q) {
        vqc.insert(Gate::h(q));
    }
    for (int i = 0; i < p; ++i) {
        evolution(vqc, hp, gamma.at(static_cast<std::size_t>(i)));
        evolution(vqc, hd, beta.at(static_cast<std::size_t>(i)));
    }
    Node loss = reduce_sum(qop(graph, std::move(vqc), {hp}, machine, qubits));

    Optimizer opt(Expression(loss), cfg.optimizer);
    RunReport r;
    r.app = "qaoa";
    r.seed = seed;
    r.loss = opt.run(cfg.iterations);
    const double energy = loss.get_value().item();

    r.config = base_config(cfg);
    r.config["p"] = p;
    r.config["vertices"] = g.n;
    r.config["edges"] = g.edges.size();
    r.metrics["energy"] = energy;
    r.metrics["maxcut"] = best.value;
    r.metrics["ratio"] = -energy / best.value;
    r.metrics["initial_ratio"] = -r.loss.front() / best.value;
    r.wall_seconds = seconds_since(start);
    return r;
}

// --- VQE --------------------------------------------------------------------

RunReport run_vqe(const PauliOperator &h, int depth, const TrainConfig &cfg,
                  std::uint64_t seed) {
    const auto start = Clock::now();
    check_train_config(cfg);
    if (depth < 0) {
        throw ArgumentError("depth must be non-negative");
    }
    const int n = std::max(1, max_qubit(h) + 1);
    if (n > kVqeMaxQubits) {
        throw ResourceError("VQE is limited to " +
                            std::to_string(kVqeMaxQubits) + " qubits");
    }
    std::mt19937_64 rng(seed);
    Graph graph;
    QuantumMachine machine(cfg.sim);
    const QubitAllocation qubits = machine.allocate(n);
    Node theta = graph.var(random_angles(rng, 2 * n * (depth + 1)));

    VQC vqc(n);
    std::size_t k = 0;
    auto rotations = [&] {
        for (int q = 0; q < n; ++q) {
            vqc.insert(GateKind::kRY, q, theta.at(k++));
            vqc.insert(GateKind::kRZ, q, theta.at(k++));
        }
    };
    for (int layer = 0; layer < depth; ++layer) {
        rotations();
        for (int q = 0; q + 1 < n; ++q) {
            vqc.insert(Gate::cnot(q, q + 1));
        }
    }
    rotations();
    Node loss = reduce_sum(qop(graph, std::move(vqc), {h}, machine, qubits));

    Optimizer opt(Expression(loss), cfg.optimizer);
    RunReport r;
    r.app = "vqe";
    r.seed = seed;
    r.loss = opt.run(cfg.iterations);
    const double energy = loss.get_value().item();
    const double exact = dense_ground_energy(h, n);

    r.config = base_config(cfg);
    r.config["depth"] = depth;
    r.config["qubits"] = n;
    r.config["hamiltonian"] = render(h);
    r.metrics["energy"] = energy;
    r.metrics["exact"] = exact;
    r.metrics["gap"] = energy - exact;
    r.wall_seconds = seconds_since(start);
    return r;
}

// --- classifier -------------------------------------------------------------

RunReport run_classifier(const Split &data, int depth, const TrainConfig &cfg,
                         std::uint64_t seed) {
    const auto start = Clock::now();
    check_train_config(cfg);
    if (depth < 1) {
        throw ArgumentError("classifier depth must be at least 1");
    }
    data.train.validate(true);
    data.test.validate(true);
    if (data.train.labels.cols() != 2 || data.test.labels.cols() != 2) {
        throw UnsupportedError("the parity classifier handles two classes, "
                               "got " +
                               std::to_string(data.train.labels.cols()));
    }
    const Eigen::Index m = data.train.features.cols();
    if (data.test.features.cols() != m) {
        throw DataError("train and test feature widths differ");
    }
    for (const Tensor *f : {&data.train.features, &data.test.features}) {
        if (f->size() > 0 && (f->matrix().minCoeff() < 0.0 ||
                              f->matrix().maxCoeff() > std::numbers::pi)) {
            throw DataError("classifier features must be scaled to [0, pi]");
        }
    }
    const int n = static_cast<int>(m) + 1;
    const int ancilla = n - 1;

    std::mt19937_64 rng(seed);
    Graph graph;
    QuantumMachine machine(cfg.sim);
    const QubitAllocation qubits = machine.allocate(n);
    Node theta = graph.var(random_angles(rng, 2 * m * depth));
    Node x = graph.placeholder(m);
    Node label = graph.var(data.train.labels);

    VQC vqc(n);
    for (int q = 0; q < ancilla; ++q) {
        vqc.insert_data(GateKind::kRY, q, static_cast<std::size_t>(q));
    }
    std::size_t k = 0;
    for (int layer = 0; layer < depth; ++layer) {
        for (int q = 0; q < ancilla; ++q) {
            vqc.insert(GateKind::kRY, q, theta.at(k++));
            vqc.insert(GateKind::kRZ, q, theta.at(k++));
        }
        for (int q = 0; q + 1 < ancilla; ++q) {
            vqc.insert(Gate::cnot(q, q + 1));
        }
    }
    for (int q = 0; q < ancilla; ++q) {
        vqc.insert(Gate::cnot(q, ancilla));
    }
    const PauliWord za{{ancilla, PauliAxis::kZ}};
    const PauliOperator p0({{{}, 0.5}, {za, 0.5}});
    const PauliOperator p1({{{}, 0.5}, {za, -0.5}});
    Node probs = qop(graph, std::move(vqc), {p0, p1}, machine, qubits, x);
    Node soft = softmax(probs);
    Node loss = reduce_sum(cross_entropy(label, soft));

    // Class 0 when E_z = p0 - p1 >= 0.
    auto accuracy = [](const Tensor &pr, const Tensor &labels) {
        const std::vector<int> truth = class_indices(labels);
        Eigen::Index hits = 0;
        for (Eigen::Index r = 0; r < pr.rows(); ++r) {
            const int predicted = pr(r, 0) - pr(r, 1) >= 0.0 ? 0 : 1;
            hits += predicted == truth[static_cast<std::size_t>(r)];
        }
        return static_cast<double>(hits) / static_cast<double>(pr.rows());
    };

    x.feed(data.train.features);
    Optimizer opt(Expression(loss), cfg.optimizer, {theta});
    RunReport r;
    r.app = "classifier";
    r.seed = seed;
    for (int i = 0; i < cfg.iterations; ++i) {
        double acc = 0.0;
        r.loss.push_back(opt.step([&] {
            acc = accuracy(probs.get_value(), data.train.labels);
        }));
        r.accuracy.push_back(acc);
    }
    const double final_loss = loss.get_value().item();
    const double train_acc = accuracy(probs.get_value(), data.train.labels);

    x.feed(data.test.features);
    const Tensor test_probs = probs.get_value();
    const Tensor test_soft = soft.get_value();
    const double test_acc = accuracy(test_probs, data.test.labels);
    const std::vector<int> argmax = class_indices(test_soft);
    Eigen::Index agree = 0;
    for (Eigen::Index row = 0; row < test_probs.rows(); ++row) {
        const int by_sign = test_probs(row, 0) - test_probs(row, 1) >= 0.0 ? 0 : 1;
        agree += by_sign == argmax[static_cast<std::size_t>(row)];
    }

    r.config = base_config(cfg);
    r.config["depth"] = depth;
    r.config["features"] = m;
    r.config["train_size"] = data.train.size();
    r.config["test_size"] = data.test.size();
    r.metrics["loss"] = final_loss;
    r.metrics["train_accuracy"] = train_acc;
    r.metrics["test_accuracy"] = test_acc;
    r.metrics["sign_argmax_agreement"] =
        static_cast<double>(agree) / static_cast<double>(test_probs.rows());
    r.wall_seconds = seconds_since(start);
    return r;
}

// --- circuit learning -------------------------------------------------------

QclTarget parse_qcl_target(std::string_view name) {
    for (auto t : {QclTarget::kSquare, QclTarget::kExp, QclTarget::kSin,
                   QclTarget::kAbs}) {
        if (name == to_string(t)) {
            return t;
        }
    }
    throw UsageError("unknown target '" + std::string(name) +
                     "'; expected square, exp, sin or abs");
}

const char *to_string(QclTarget t) noexcept {
    switch (t) {
    case QclTarget::kSquare:
        return "square";
    case QclTarget::kExp:
        return "exp";
    case QclTarget::kSin:
        return "sin";
    case QclTarget::kAbs:
        return "abs";
    }
    return "?";
}

double qcl_function(QclTarget t, double x) {
    switch (t) {
    case QclTarget::kSquare:
        return x * x;
    case QclTarget::kExp:
        return std::exp(x);
    case QclTarget::kSin:
        return std::sin(std::numbers::pi * x);
    case QclTarget::kAbs:
        return std::abs(x);
    }
    return 0.0;
}

RunReport run_qcl(const QclSpec &spec, const TrainConfig &cfg,
                  std::uint64_t seed) {
    const auto start = Clock::now();
    check_train_config(cfg);
    if (spec.points < 10) {
        throw ArgumentError("circuit learning needs at least 10 points");
    }
    if (spec.qubits < 1 || spec.depth < 1) {
        throw ArgumentError("qubits and depth must be positive");
    }
    std::mt19937_64 rng(seed);
    Tensor xs = Tensor::zeros(spec.points, 1);
    Tensor ys = Tensor::zeros(spec.points, 1);
    for (Eigen::Index i = 0; i < spec.points; ++i) {
        xs[i] = uniform(rng, -1.0, 1.0);
        ys[i] = qcl_function(spec.target, xs[i]);
    }

    const int n = spec.qubits;
    Graph graph;
    QuantumMachine machine(cfg.sim);
    const QubitAllocation qubits = machine.allocate(n);
    Node theta = graph.var(random_angles(rng, 3 * n * spec.depth));
    Node coef = graph.var(spec.coef);
    Node x = graph.placeholder(1);
    Node y = graph.var(ys);

    VQC vqc(n);
    for (int q = 0; q < n; ++q) {
        vqc.insert_data(GateKind::kRY, q, 0,
                        [](double v) { return std::asin(v); });
        vqc.insert_data(GateKind::kRZ, q, 0,
                        [](double v) { return std::acos(v * v); });
    }
    std::size_t k = 0;
    for (int layer = 0; layer < spec.depth; ++layer) {
        for (int q = 0; q < n; ++q) {
            vqc.insert(GateKind::kRY, q, theta.at(k++));
            vqc.insert(GateKind::kRZ, q, theta.at(k++));
            vqc.insert(GateKind::kRY, q, theta.at(k++));
        }
        // CNOT ring; two qubits get a single CNOT.
        for (int q = 0; q + 1 < n; ++q) {
            vqc.insert(Gate::cnot(q, q + 1));
        }
        if (n > 2) {
            vqc.insert(Gate::cnot(n - 1, 0));
        }
    }
    Node e = qop(graph, std::move(vqc), {PauliOperator{{"Z0", 1}}}, machine,
                 qubits, x);
    Node model = coef * e;
    Node loss = reduce_sum(least_square(y, model));

    x.feed(xs);
    std::vector<Node> trained{theta};
    if (!spec.freeze_coef) {
        trained.push_back(coef);
    }
    Optimizer opt(Expression(loss), cfg.optimizer, trained);
    RunReport r;
    r.app = "qcl";
    r.seed = seed;
    r.loss = opt.run(cfg.iterations);
    const double final_loss = loss.get_value().item();

    Tensor grid = Tensor::zeros(kQclProbePoints, 1);
    for (Eigen::Index i = 0; i < kQclProbePoints; ++i) {
        grid[i] = -1.0 + 2.0 * static_cast<double>(i) /
                             static_cast<double>(kQclProbePoints - 1);
    }
    x.feed(grid);
    const Tensor curve = model.get_value();
    for (Eigen::Index i = 0; i < kQclProbePoints; ++i) {
        r.predictions.push_back(
            {grid[i], qcl_function(spec.target, grid[i]), curve[i]});
    }

    r.config = base_config(cfg);
    r.config["target"] = to_string(spec.target);
    r.config["points"] = spec.points;
    r.config["qubits"] = n;
    r.config["depth"] = spec.depth;
    r.config["coef"] = spec.coef;
    r.config["freeze_coef"] = spec.freeze_coef;
    r.metrics["loss"] = final_loss;
    r.metrics["mse"] = final_loss / spec.points;
    r.metrics["coef"] = coef.get_value().item();
    r.wall_seconds = seconds_since(start);
    return r;
}

} // namespace vqnet::apps
