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

#include "vqnet/apps/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "vqnet/error.hpp"

namespace vqnet::apps {

namespace {

struct Token {
    std::string_view text;
    int column = 1;
};

std::vector<Token> split_ws(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start),
                           static_cast<int>(start) + 1});
        }
    }
    return out;
}

template <typename T> bool parse_number(std::string_view s, T &out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        out.push_back(line);
        start = end + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightedGraph parse_graph(std::string_view text) {
    WeightedGraph g;
    std::set<std::pair<int, int>> seen;
    const auto lines = lines_of(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const int line_no = static_cast<int>(k) + 1;
        std::string_view line = lines[k];
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = split_ws(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() != 3) {
            throw ParseError("expected 'u v w'", line_no, tokens.front().column);
        }
        int u = 0;
        int v = 0;
        double w = 0.0;
        if (!parse_number(tokens[0].text, u) || u < 0) {
            throw ParseError("bad vertex index", line_no, tokens[0].column);
        }
        if (!parse_number(tokens[1].text, v) || v < 0) {
            throw ParseError("bad vertex index", line_no, tokens[1].column);
        }
        if (!parse_number(tokens[2].text, w) || !std::isfinite(w)) {
            throw ParseError("bad edge weight", line_no, tokens[2].column);
        }
        if (u == v) {
            throw ParseError("self-loop", line_no, tokens[0].column);
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (!seen.emplace(u, v).second) {
            throw ParseError("duplicate edge", line_no, tokens[0].column);
        }
        g.edges.push_back({u, v, w});
        g.n = std::max(g.n, v + 1);
    }
    if (g.edges.empty()) {
        throw ParseError("graph has no edges", static_cast<int>(lines.size()),
                         1);
    }
    return g;
}

WeightedGraph load_graph(const std::filesystem::path &path) {
    return parse_graph(read_file(path));
}

PauliOperator load_hamiltonian(const std::filesystem::path &path) {
    return parse_pauli(read_file(path));
}

namespace {

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

} // namespace

Dataset parse_csv(std::string_view text, const CsvSpec &spec) {
    const auto lines = lines_of(text);
    std::size_t k = 0;
    while (k < lines.size() && trim(lines[k]).empty()) {
        ++k;
    }
    if (k == lines.size()) {
        throw DataError("CSV has no header row");
    }
    const auto header = split_csv(lines[k]);
    const int header_line = static_cast<int>(k) + 1;
    std::size_t label_col = header.size() - 1;
    if (!spec.label_column.empty()) {
        auto it = std::find(header.begin(), header.end(), spec.label_column);
        if (it == header.end()) {
            throw DataError("line " + std::to_string(header_line) +
                            ": no column named '" + spec.label_column + "'");
        }
        label_col = static_cast<std::size_t>(it - header.begin());
    }
    std::vector<std::size_t> feature_cols;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c != label_col) {
            feature_cols.push_back(c);
        }
    }
    if (spec.last_features) {
        if (*spec.last_features == 0 ||
            *spec.last_features > feature_cols.size()) {
            throw DataError("asked for the last " +
                            std::to_string(*spec.last_features) +
                            " features of a file with " +
                            std::to_string(feature_cols.size()));
        }
        feature_cols.erase(feature_cols.begin(),
                           feature_cols.end() -
                               static_cast<std::ptrdiff_t>(*spec.last_features));
    }
    if (feature_cols.empty()) {
        throw DataError("CSV has no feature columns");
    }

    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    for (++k; k < lines.size(); ++k) {
        if (trim(lines[k]).empty()) {
            continue;
        }
        const int line_no = static_cast<int>(k) + 1;
        const auto cells = split_csv(lines[k]);
        if (cells.size() != header.size()) {
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " cells, got " +
                            std::to_string(cells.size()));
        }
        std::vector<double> row;
        for (std::size_t c : feature_cols) {
            double v = 0.0;
            if (!parse_number(cells[c], v) || !std::isfinite(v)) {
                throw DataError("line " + std::to_string(line_no) +
                                ", column " + std::to_string(c + 1) +
                                ": non-numeric cell '" + std::string(cells[c]) +
                                "'");
            }
            row.push_back(v);
        }
        rows.push_back(std::move(row));
        labels.emplace_back(cells[label_col]);
    }
    if (rows.empty()) {
        throw DataError("CSV has no data rows");
    }

    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto m = static_cast<Eigen::Index>(feature_cols.size());
    Dataset d{Tensor::zeros(n, m), {}};
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < m; ++c) {
            d.features(r, c) =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }

    if (spec.label_kind == LabelKind::kReal) {
        d.labels = Tensor::zeros(n, 1);
        for (Eigen::Index r = 0; r < n; ++r) {
            double v = 0.0;
            if (!parse_number(std::string_view(labels[static_cast<std::size_t>(r)]),
                              v)) {
                throw DataError("non-numeric label '" +
                                labels[static_cast<std::size_t>(r)] + "'");
            }
            d.labels(r, 0) = v;
        }
    } else {
        bool numeric = true;
        std::map<std::string, double> values;
        for (const auto &l : labels) {
            double v = 0.0;
            numeric = numeric && parse_number(std::string_view(l), v);
            values.emplace(l, v);
        }
        std::vector<std::string> classes;
        for (const auto &[name, v] : values) {
            classes.push_back(name);
        }
        if (numeric) {
            std::stable_sort(classes.begin(), classes.end(),
                             [&](const std::string &a, const std::string &b) {
                                 return values[a] < values[b];
                             });
        }
        const std::size_t width =
            spec.one_hot_width ? spec.one_hot_width : classes.size();
        if (classes.size() > width) {
            throw DataError(std::to_string(classes.size()) +
                            " distinct labels do not fit a one-hot width of " +
                            std::to_string(width));
        }
        d.labels = Tensor::zeros(n, static_cast<Eigen::Index>(width));
        for (Eigen::Index r = 0; r < n; ++r) {
            const auto it = std::find(classes.begin(), classes.end(),
                                      labels[static_cast<std::size_t>(r)]);
            d.labels(r, it - classes.begin()) = 1.0;
        }
    }

    if (spec.scale) {
        d.features = MinMaxScaler::fit(d.features, spec.scale->first,
                                       spec.scale->second)
                         .transform(d.features);
    }
    d.validate(spec.label_kind == LabelKind::kOneHot);
    return d;
}

Dataset load_csv(const std::filesystem::path &path, const CsvSpec &spec) {
    return parse_csv(read_file(path), spec);
}

} // namespace vqnet::apps
