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
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vqnet {

enum class PauliAxis : char { kX = 'X', kY = 'Y', kZ = 'Z' };

/// Qubit index -> axis. An empty word is the identity.
using PauliWord = std::map<int, PauliAxis>;

struct PauliTerm {
    PauliWord factors;
    double coefficient = 0.0;

    [[nodiscard]] bool is_identity() const noexcept { return factors.empty(); }
    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/// Renders a word as e.g. "X1 Y2", or "I" for the identity.
[[nodiscard]] std::string to_string(const PauliWord &word);

/// True when the two words commute as operators.
[[nodiscard]] bool commutes(const PauliWord &a, const PauliWord &b);

/**
 * Real-weighted sum of Pauli words, kept in canonical form: terms sorted by
 * word, at most one term per word, and terms with |coefficient| < 1e-12
 * removed.
 */
class PauliOperator {
  public:
    static constexpr double kDropThreshold = 1e-12;

    PauliOperator() = default;
    explicit PauliOperator(std::vector<PauliTerm> terms);
    /// Convenience constructor mirroring {"Z0": 1, "X1 Y2": 2.4}.
    PauliOperator(std::initializer_list<std::pair<std::string_view, double>>
                      terms);

    /// Single term operator.
    [[nodiscard]] static PauliOperator term(const PauliWord &word,
                                            double coefficient);
    [[nodiscard]] static PauliOperator identity(double coefficient = 1.0);

    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of a word, zero when absent.
    [[nodiscard]] double coefficient(const PauliWord &word) const;

    friend bool operator==(const PauliOperator &,
                           const PauliOperator &) = default;

  private:
    void normalize();

    std::vector<PauliTerm> terms_;
};

/// Parses a single word such as "X1 Y2" or "I".
[[nodiscard]] PauliWord parse_word(std::string_view text);

/**
 * Parses the Hamiltonian text format: one `coefficient : word` entry per
 * line, blank lines ignored, lines whose first non-blank character is '#'
 * ignored. Throws ParseError carrying the line and column of the problem.
 */
[[nodiscard]] PauliOperator parse_pauli(std::string_view text);

/// Canonical text form accepted by parse_pauli; coefficients round-trip.
[[nodiscard]] std::string render(const PauliOperator &op);

/// a + scale_b * b, normalized.
[[nodiscard]] PauliOperator combine(const PauliOperator &a,
                                    const PauliOperator &b,
                                    double scale_b = 1.0);

/// Highest qubit index in any factor, or -1 for an identity-only or empty
/// operator.
[[nodiscard]] int max_qubit(const PauliOperator &op);

[[nodiscard]] PauliOperator operator+(const PauliOperator &a,
                                      const PauliOperator &b);
[[nodiscard]] PauliOperator operator-(const PauliOperator &a,
                                      const PauliOperator &b);
[[nodiscard]] PauliOperator operator*(double s, const PauliOperator &op);

} // namespace vqnet
