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

#include "vqnet/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "vqnet/error.hpp"

namespace vqnet {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Parses one word; `line` and `col0` locate text[0] for error reporting.
PauliWord parse_word_at(std::string_view text, std::size_t line,
                        std::size_t col0) {
    PauliWord word;
    std::size_t i = 0;
    bool saw_identity = false;
    bool saw_factor = false;
    while (i < text.size()) {
        if (is_blank(text[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && !is_blank(text[i])) {
            ++i;
        }
        const std::string_view token = text.substr(start, i - start);
        const std::size_t col = col0 + start;
        if (token == "I") {
            saw_identity = true;
            continue;
        }
        const char axis = token[0];
        if (axis != 'X' && axis != 'Y' && axis != 'Z') {
            throw ParseError("bad Pauli token '" + std::string(token) + "'",
                             line, col);
        }
        int qubit = -1;
        const char *first = token.data() + 1;
        const char *last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, qubit);
        if (token.size() < 2 || ec != std::errc() || ptr != last ||
            qubit < 0) {
            throw ParseError("bad qubit index in token '" +
                                 std::string(token) + "'",
                             line, col);
        }
        if (!word.emplace(qubit, static_cast<PauliAxis>(axis)).second) {
            throw ParseError("qubit " + std::to_string(qubit) +
                                 " appears twice in one term",
                             line, col);
        }
        saw_factor = true;
    }
    if (saw_identity && saw_factor) {
        throw ParseError("'I' must be the only token of a term", line, col0);
    }
    if (!saw_identity && !saw_factor) {
        throw ParseError("empty Pauli term", line, col0);
    }
    return word;
}

double parse_coefficient(std::string_view text, std::size_t line,
                         std::size_t col0) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && is_blank(text[b])) {
        ++b;
    }
    while (e > b && is_blank(text[e - 1])) {
        --e;
    }
    std::string_view body = text.substr(b, e - b);
    const std::size_t col = col0 + b;
    if (!body.empty() && body.front() == '+') {
        body.remove_prefix(1);
    }
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(body.data(), body.data() + body.size(), value);
    if (body.empty() || ec != std::errc() || ptr != body.data() + body.size() ||
        !std::isfinite(value)) {
        throw ParseError("non-numeric coefficient '" +
                             std::string(text.substr(b, e - b)) + "'",
                         line, col);
    }
    return value;
}

} // namespace

std::string to_string(const PauliWord &word) {
    if (word.empty()) {
        return "I";
    }
    std::string out;
    for (const auto &[qubit, axis] : word) {
        if (!out.empty()) {
            out += ' ';
        }
        out += static_cast<char>(axis);
        out += std::to_string(qubit);
    }
    return out;
}

bool commutes(const PauliWord &a, const PauliWord &b) {
    int anticommuting = 0;
    for (const auto &[qubit, axis] : a) {
        auto it = b.find(qubit);
        if (it != b.end() && it->second != axis) {
            ++anticommuting;
        }
    }
    return anticommuting % 2 == 0;
}

PauliOperator::PauliOperator(std::vector<PauliTerm> terms)
    : terms_(std::move(terms)) {
    normalize();
}

PauliOperator::PauliOperator(
    std::initializer_list<std::pair<std::string_view, double>> terms) {
    for (const auto &[word, coefficient] : terms) {
        terms_.push_back({parse_word(word), coefficient});
    }
    normalize();
}

PauliOperator PauliOperator::term(const PauliWord &word, double coefficient) {
    return PauliOperator(std::vector<PauliTerm>{{word, coefficient}});
}

PauliOperator PauliOperator::identity(double coefficient) {
    return term({}, coefficient);
}

double PauliOperator::coefficient(const PauliWord &word) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), word,
        [](const PauliTerm &t, const PauliWord &w) { return t.factors < w; });
    return it != terms_.end() && it->factors == word ? it->coefficient : 0.0;
}

void PauliOperator::normalize() {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const PauliTerm &a, const PauliTerm &b) {
                         return a.factors < b.factors;
                     });
    std::vector<PauliTerm> merged;
    merged.reserve(terms_.size());
    for (auto &t : terms_) {
        if (!merged.empty() && merged.back().factors == t.factors) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const PauliTerm &t) {
        return std::abs(t.coefficient) < kDropThreshold;
    });
    terms_ = std::move(merged);
}

PauliWord parse_word(std::string_view text) {
    return parse_word_at(text, 1, 1);
}

PauliOperator parse_pauli(std::string_view text) {
    std::vector<PauliTerm> terms;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        const auto first = std::find_if_not(line.begin(), line.end(), is_blank);
        if (first == line.end() || *first == '#') {
            continue;
        }
        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("expected 'coefficient : term'", line_no,
                             static_cast<std::size_t>(first - line.begin()) +
                                 1);
        }
        const double c = parse_coefficient(line.substr(0, colon), line_no, 1);
        PauliWord word =
            parse_word_at(line.substr(colon + 1), line_no, colon + 2);
        terms.push_back({std::move(word), c});
    }
    return PauliOperator(std::move(terms));
}

std::string render(const PauliOperator &op) {
    std::ostringstream out;
    for (const auto &t : op.terms()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", t.coefficient);
        out << buf << " : " << to_string(t.factors) << '\n';
    }
    return out.str();
}

PauliOperator combine(const PauliOperator &a, const PauliOperator &b,
                      double scale_b) {
    std::vector<PauliTerm> terms = a.terms();
    for (const auto &t : b.terms()) {
        terms.push_back({t.factors, scale_b * t.coefficient});
    }
    return PauliOperator(std::move(terms));
}

int max_qubit(const PauliOperator &op) {
    int result = -1;
    for (const auto &t : op.terms()) {
        if (!t.factors.empty()) {
            result = std::max(result, t.factors.rbegin()->first);
        }
    }
    return result;
}

PauliOperator operator+(const PauliOperator &a, const PauliOperator &b) {
    return combine(a, b, 1.0);
}

PauliOperator operator-(const PauliOperator &a, const PauliOperator &b) {
    return combine(a, b, -1.0);
}

PauliOperator operator*(double s, const PauliOperator &op) {
    return combine(PauliOperator(), op, s);
}

} // namespace vqnet
