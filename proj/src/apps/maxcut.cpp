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

#include "vqnet/apps/maxcut.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

#include "vqnet/apps/random.hpp"
#include "vqnet/error.hpp"

namespace vqnet::apps {

void WeightedGraph::validate() const {
    if (n < 1) {
        throw ArgumentError("graph needs at least one vertex");
    }
    std::set<std::pair<int, int>> seen;
    for (const Edge &e : edges) {
        if (e.u < 0 || e.v >= n || e.u >= e.v) {
            throw ArgumentError("edge (" + std::to_string(e.u) + ", " +
                                std::to_string(e.v) +
                                ") needs 0 <= u < v < " + std::to_string(n));
        }
        if (!std::isfinite(e.weight)) {
            throw ArgumentError("edge weight is not finite");
        }
        if (!seen.emplace(e.u, e.v).second) {
            throw ArgumentError("duplicate edge (" + std::to_string(e.u) +
                                ", " + std::to_string(e.v) + ")");
        }
    }
}

double WeightedGraph::total_weight() const {
    double w = 0.0;
    for (const Edge &e : edges) {
        w += e.weight;
    }
    return w;
}

WeightedGraph benchmark_graph(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    WeightedGraph g{5, {}};
    for (int u = 0; u < 5; ++u) {
        for (int v = u + 1; v < 5; ++v) {
            g.edges.push_back({u, v, uniform(rng, 0.1, 1.0)});
        }
    }
    return g;
}

std::pair<PauliOperator, PauliOperator>
maxcut_hamiltonians(const WeightedGraph &g) {
    g.validate();
    if (g.n < 2) {
        throw ArgumentError("MAX-CUT needs at least two vertices");
    }
    if (g.edges.empty()) {
        throw ArgumentError("MAX-CUT needs at least one edge");
    }
    std::vector<PauliTerm> hp;
    for (const Edge &e : g.edges) {
        hp.push_back(
            {{{e.u, PauliAxis::kZ}, {e.v, PauliAxis::kZ}}, e.weight / 2});
        hp.push_back({{}, -e.weight / 2});
    }
    std::vector<PauliTerm> hd;
    for (int u = 0; u < g.n; ++u) {
        hd.push_back({{{u, PauliAxis::kX}}, 1.0});
    }
    return {PauliOperator(hp), PauliOperator(hd)};
}

double cut_value(const WeightedGraph &g, const std::vector<int> &assignment) {
    if (assignment.size() != static_cast<std::size_t>(g.n)) {
        throw ArgumentError("assignment needs one entry per vertex");
    }
    double cut = 0.0;
    for (const Edge &e : g.edges) {
        if (assignment[static_cast<std::size_t>(e.u)] !=
            assignment[static_cast<std::size_t>(e.v)]) {
            cut += e.weight;
        }
    }
    return cut;
}

MaxCut brute_force_maxcut(const WeightedGraph &g) {
    g.validate();
    if (g.n > kBruteForceMaxVertices) {
        throw ResourceError("exhaustive MAX-CUT is limited to " +
                            std::to_string(kBruteForceMaxVertices) +
                            " vertices");
    }
    // Vertex 0 is the most significant bit of the mask, so ascending masks
    // enumerate assignments in lexicographic order and the first maximum
    // found is the smallest.
    const std::uint32_t total = std::uint32_t(1) << g.n;
    double best = -std::numeric_limits<double>::infinity();
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        double cut = 0.0;
        for (const Edge &e : g.edges) {
            const auto bu = (mask >> (g.n - 1 - e.u)) & 1U;
            const auto bv = (mask >> (g.n - 1 - e.v)) & 1U;
            if (bu != bv) {
                cut += e.weight;
            }
        }
        if (cut > best) {
            best = cut;
            best_mask = mask;
        }
    }
    MaxCut out{best, std::vector<int>(static_cast<std::size_t>(g.n))};
    for (int u = 0; u < g.n; ++u) {
        out.assignment[static_cast<std::size_t>(u)] =
            static_cast<int>((best_mask >> (g.n - 1 - u)) & 1U);
    }
    return out;
}

} // namespace vqnet::apps
