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
#include <utility>
#include <vector>

#include "vqnet/pauli.hpp"

namespace vqnet::apps {

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Undirected weighted graph on vertices 0..n-1; edges stored with u < v.
struct WeightedGraph {
    int n = 0;
    std::vector<Edge> edges;

    /// Throws ArgumentError on out-of-range, self-loop, duplicate or
    /// non-finite edges.
    void validate() const;
    [[nodiscard]] double total_weight() const;

    friend bool operator==(const WeightedGraph &, const WeightedGraph &) =
        default;
};

/// Complete graph on five vertices with weights uniform in [0.1, 1], drawn
/// in edge order (0,1), (0,2), ..., (3,4) from std::mt19937_64(seed).
[[nodiscard]] WeightedGraph benchmark_graph(std::uint64_t seed = 7);

/// Problem and driver Hamiltonians. Hp = sum (w/2) Z_u Z_v - (w/2) I, so
/// -<Hp> is the expected cut weight; Hd = sum X_u.
[[nodiscard]] std::pair<PauliOperator, PauliOperator>
maxcut_hamiltonians(const WeightedGraph &g);

/// Cut weight of an assignment (one 0/1 entry per vertex).
[[nodiscard]] double cut_value(const WeightedGraph &g,
                               const std::vector<int> &assignment);

struct MaxCut {
    double value = 0.0;
    std::vector<int> assignment;
};

inline constexpr int kBruteForceMaxVertices = 24;

/// Exhaustive maximum cut. Ties resolve to the lexicographically smallest
/// assignment (vertex 0 first). Throws ResourceError past 24 vertices.
[[nodiscard]] MaxCut brute_force_maxcut(const WeightedGraph &g);

} // namespace vqnet::apps
