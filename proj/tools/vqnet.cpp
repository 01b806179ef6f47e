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

// Command-line front end for the four application flows.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vqnet/apps/io.hpp"
#include "vqnet/apps/runs.hpp"
#include "vqnet/error.hpp"

namespace {

using namespace vqnet;
using namespace vqnet::apps;

struct Common {
    std::string optimizer = "momentum";
    double lr = 0.02;
    double momentum = 0.9;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double decay = 0.9;
    int iters = 200;
    std::uint64_t seed = 0;
    int max_qubits = 20;
    std::string out;
    std::string config;
};

void add_common(CLI::App &cmd, Common &c) {
    cmd.add_option("--optimizer", c.optimizer,
                   "gd, momentum, adagrad, rmsprop or adam")
        ->capture_default_str();
    cmd.add_option("--lr", c.lr, "learning rate")->capture_default_str();
    cmd.add_option("--momentum", c.momentum)->capture_default_str();
    cmd.add_option("--beta1", c.beta1)->capture_default_str();
    cmd.add_option("--beta2", c.beta2)->capture_default_str();
    cmd.add_option("--eps", c.eps)->capture_default_str();
    cmd.add_option("--decay", c.decay, "RMSProp decay")->capture_default_str();
    cmd.add_option("--iters", c.iters, "optimizer iterations")
        ->capture_default_str();
    cmd.add_option("--seed", c.seed)->capture_default_str();
    cmd.add_option("--max-qubits", c.max_qubits, "simulator qubit cap")
        ->capture_default_str();
    cmd.add_option("--out", c.out, "output directory (default out/<command>)");
    cmd.add_option("--config", c.config,
                   "JSON file with optimizer/learning_rate/momentum/beta1/"
                   "beta2/epsilon/decay/iterations/seed keys; flags given on "
                   "the command line take precedence");
}

/// Defaults, then the JSON config file, then explicit flags.
TrainConfig resolve(const CLI::App &cmd, Common &c) {
    if (!c.config.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_file(c.config));
        } catch (const nlohmann::json::exception &e) {
            throw DataError(c.config + ": " + e.what());
        }
        auto take = [&](const char *key, const char *flag, auto &dst) {
            if (j.contains(key) && cmd.count(flag) == 0) {
                try {
                    dst = j.at(key).get<std::decay_t<decltype(dst)>>();
                } catch (const nlohmann::json::exception &e) {
                    throw DataError(c.config + ": key '" + key + "': " +
                                    e.what());
                }
            }
        };
        take("optimizer", "--optimizer", c.optimizer);
        take("learning_rate", "--lr", c.lr);
        take("momentum", "--momentum", c.momentum);
        take("beta1", "--beta1", c.beta1);
        take("beta2", "--beta2", c.beta2);
        take("epsilon", "--eps", c.eps);
        take("decay", "--decay", c.decay);
        take("iterations", "--iters", c.iters);
        take("seed", "--seed", c.seed);
    }
    TrainConfig t;
    t.optimizer.kind = parse_optimizer_kind(c.optimizer);
    t.optimizer.learning_rate = c.lr;
    t.optimizer.momentum = c.momentum;
    t.optimizer.beta1 = c.beta1;
    t.optimizer.beta2 = c.beta2;
    t.optimizer.epsilon = c.eps;
    t.optimizer.decay = c.decay;
    t.iterations = c.iters;
    t.sim.max_qubits = c.max_qubits;
    return t;
}

void finish(const RunReport &r, const Common &c) {
    const std::string dir = c.out.empty() ? "out/" + r.app : c.out;
    emit_report(r, dir);
    std::printf("%s: %zu iterations, final loss %.10g\n", r.app.c_str(),
                r.loss.size(), r.loss.empty() ? 0.0 : r.loss.back());
    for (const auto &[k, v] : r.metrics) {
        std::printf("  %-22s %.10g\n", k.c_str(), v);
    }
    std::printf("  wrote %s\n", dir.c_str());
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variational quantum circuit training flows"};
    app.require_subcommand(1);

    Common qaoa_c, vqe_c, cls_c, qcl_c;

    auto *qaoa = app.add_subcommand("qaoa", "QAOA on a weighted MAX-CUT graph");
    std::string graph_path;
    int steps = 4;
    qaoa->add_option("--graph", graph_path,
                     "edge list 'u v w' (default: seeded 5-vertex graph)");
    qaoa->add_option("--p", steps, "QAOA steps")->capture_default_str();
    add_common(*qaoa, qaoa_c);

    auto *vqe = app.add_subcommand("vqe", "VQE on a Pauli Hamiltonian");
    std::string ham_path;
    int vqe_depth = 2;
    vqe->add_option("--ham", ham_path, "Hamiltonian file")->required();
    vqe->add_option("--depth", vqe_depth, "entangling layers")
        ->capture_default_str();
    add_common(*vqe, vqe_c);

    auto *cls = app.add_subcommand("classifier", "two-class circuit classifier");
    std::string csv_path;
    std::string features = "last10";
    std::string label_col;
    int cls_depth = 2;
    double train_fraction = 0.7;
    cls->add_option("--csv", csv_path,
                    "CSV with header (default: seeded separable set)");
    cls->add_option("--features", features, "last10 or all")
        ->check(CLI::IsMember({"last10", "all"}))
        ->capture_default_str();
    cls->add_option("--label-col", label_col,
                    "label column name (default: last column)");
    cls->add_option("--depth", cls_depth, "parameterized layers")
        ->capture_default_str();
    cls->add_option("--train-fraction", train_fraction,
                    "share of CSV rows used for training")
        ->capture_default_str();
    add_common(*cls, cls_c);

    auto *qcl = app.add_subcommand("qcl", "circuit learning of f(x) on [-1, 1]");
    std::string target = "square";
    QclSpec spec;
    qcl->add_option("--target", target, "square, exp, sin or abs")
        ->capture_default_str();
    qcl->add_option("--points", spec.points, "training points")
        ->capture_default_str();
    qcl->add_option("--depth", spec.depth, "parameterized layers")
        ->capture_default_str();
    qcl->add_option("--qubits", spec.qubits)->capture_default_str();
    add_common(*qcl, qcl_c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (qaoa->parsed()) {
            const TrainConfig t = resolve(*qaoa, qaoa_c);
            WeightedGraph g =
                graph_path.empty() ? benchmark_graph() : load_graph(graph_path);
            RunReport r = run_qaoa(g, steps, t, qaoa_c.seed);
            r.config["graph"] = graph_path.empty() ? "seeded-5" : graph_path;
            if (graph_path.empty()) {
                r.notes.push_back(
                    "benchmark graph: complete 5-vertex graph with weights "
                    "uniform in [0.1, 1] from seed 7, a substitute instance");
            }
            finish(r, qaoa_c);
        } else if (vqe->parsed()) {
            const TrainConfig t = resolve(*vqe, vqe_c);
            RunReport r =
                run_vqe(load_hamiltonian(ham_path), vqe_depth, t, vqe_c.seed);
            r.config["ham"] = ham_path;
            finish(r, vqe_c);
        } else if (cls->parsed()) {
            const TrainConfig t = resolve(*cls, cls_c);
            Split split;
            std::string source;
            if (csv_path.empty()) {
                split = make_separable(200, 100, cls_c.seed);
                source = "synthetic";
            } else {
                CsvSpec cs;
                cs.label_column = label_col;
                if (features == "last10") {
                    cs.last_features = 10;
                }
                split = split_dataset(load_csv(csv_path, cs), train_fraction,
                                      cls_c.seed);
                source = csv_path;
            }
            scale_features(split, 0.0, 3.14159265358979323846);
            RunReport r = run_classifier(split, cls_depth, t, cls_c.seed);
            r.config["data"] = source;
            r.config["feature_selection"] = csv_path.empty() ? "all" : features;
            r.notes.push_back("features min-max scaled to [0, pi] on the "
                              "training split; test rows clamped");
            finish(r, cls_c);
        } else if (qcl->parsed()) {
            const TrainConfig t = resolve(*qcl, qcl_c);
            spec.target = parse_qcl_target(target);
            finish(run_qcl(spec, t, qcl_c.seed), qcl_c);
        }
    } catch (const vqnet::Error &e) {
        std::fprintf(stderr, "vqnet: %s\n", e.what());
        return 1;
    }
    return 0;
}
