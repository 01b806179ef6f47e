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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include "vqnet/apps/dataset.hpp"
#include "vqnet/apps/maxcut.hpp"
#include "vqnet/pauli.hpp"

namespace vqnet::apps {

/// Lines `u v w`; blank lines and `#` comments are skipped. The vertex
/// count is one past the largest index. Edges given as v u are stored as
/// u v.
[[nodiscard]] WeightedGraph parse_graph(std::string_view text);
[[nodiscard]] WeightedGraph load_graph(const std::filesystem::path &path);

/// Pauli operator file in the `coefficient : word` grammar.
[[nodiscard]] PauliOperator
load_hamiltonian(const std::filesystem::path &path);

enum class LabelKind { kOneHot, kReal };

struct CsvSpec {
    /// Column name holding the label; empty means the last column.
    std::string label_column;
    /// Keep only the last N non-label columns; empty keeps all of them.
    std::optional<std::size_t> last_features;
    LabelKind label_kind = LabelKind::kOneHot;
    /// One-hot width; 0 infers it from the number of distinct labels.
    std::size_t one_hot_width = 0;
    /// Min-max scale every feature column into this range over the whole
    /// file. Leave unset to scale later on a training split.
    std::optional<std::pair<double, double>> scale;
};

/**
 * Comma-separated with a required header row. Feature cells must be numeric
 * (DataError naming line and column otherwise). One-hot labels map the
 * distinct label strings, ordered numerically when all are numbers and
 * lexicographically otherwise, to classes 0, 1, ...
 */
[[nodiscard]] Dataset parse_csv(std::string_view text, const CsvSpec &spec);
[[nodiscard]] Dataset load_csv(const std::filesystem::path &path,
                               const CsvSpec &spec);

/// Reads a whole file; throws IoError when it cannot be opened.
[[nodiscard]] std::string read_file(const std::filesystem::path &path);

} // namespace vqnet::apps
