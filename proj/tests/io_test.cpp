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
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "vqnet/apps/report.hpp"
#include "vqnet/error.hpp"

namespace vqnet::apps {
namespace {

std::filesystem::path temp_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("vqnet_io_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

int count_lines(const std::string &text) {
    return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

TEST(ParseGraph, UnitTriangle) {
    const auto g = parse_graph("0 1 1.0\n1 2 1.0\n0 2 1.0");
    EXPECT_EQ(g.n, 3);
    const WeightedGraph expected{3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}};
    EXPECT_EQ(g, expected);
}

TEST(ParseGraph, CommentsBlankLinesAndReversedEdges) {
    const auto g = parse_graph("# weights\n\n3 1 0.5  # reversed\r\n0 3 2\n");
    EXPECT_EQ(g.n, 4);
    ASSERT_EQ(g.edges.size(), 2U);
    EXPECT_EQ(g.edges[0], (Edge{1, 3, 0.5}));
}

TEST(ParseGraph, Errors) {
    auto line_of = [](const char *text) {
        try {
            (void)parse_graph(text);
        } catch (const ParseError &e) {
            return static_cast<int>(e.line());
        }
        return -1;
    };
    EXPECT_EQ(line_of("0 1 1\n0 1\n"), 2);
    EXPECT_EQ(line_of("0 1 x\n"), 1);
    EXPECT_EQ(line_of("0 0 1\n"), 1);
    EXPECT_EQ(line_of("0 1 1\n1 0 2\n"), 2);
    EXPECT_EQ(line_of("-1 2 1\n"), 1);
    EXPECT_EQ(line_of("0 1 nan\n"), 1);
    EXPECT_THROW((void)parse_graph("# nothing\n"), ParseError);
    EXPECT_THROW((void)load_graph("/nonexistent/graph.txt"), IoError);
}

TEST(LoadHamiltonian, SingleTerm) {
    const auto dir = temp_dir("ham");
    std::ofstream(dir / "h.txt") << "1 : Z0\n";
    EXPECT_EQ(load_hamiltonian(dir / "h.txt"), (PauliOperator{{"Z0", 1}}));
    std::ofstream(dir / "bad.txt") << "1 : Z0\n2 : Q1\n";
    try {
        (void)load_hamiltonian(dir / "bad.txt");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW((void)load_hamiltonian(dir / "missing.txt"), IoError);
}

TEST(LoadHamiltonian, ShippedFiles) {
    for (const char *name : {"h2_0.75.txt", "tfim3.txt", "tfim4.txt"}) {
        const auto h = load_hamiltonian(std::filesystem::path(VQNET_DATA_DIR) /
                                        name);
        EXPECT_GE(max_qubit(h), 1) << name;
        EXPECT_LE(max_qubit(h), 3) << name;
    }
}

std::string wide_csv(int rows) {
    std::string text;
    for (int c = 0; c < 30; ++c) {
        text += "f" + std::to_string(c) + ",";
    }
    text += "target\n";
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < 30; ++c) {
            text += std::to_string(r * 100 + c) + ",";
        }
        text += (r % 2 ? "1\n" : "0\n");
    }
    return text;
}

TEST(ParseCsv, LastTenOfThirtyFeatures) {
    CsvSpec spec;
    spec.last_features = 10;
    const Dataset d = parse_csv(wide_csv(5), spec);
    EXPECT_EQ(d.features.rows(), 5);
    EXPECT_EQ(d.features.cols(), 10);
    EXPECT_EQ(d.features(0, 0), 20.0);
    EXPECT_EQ(d.features(4, 9), 429.0);
    EXPECT_EQ(d.labels, Tensor::matrix({{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}}));
}

TEST(ParseCsv, ScalingRangeAndNamedLabel) {
    CsvSpec spec;
    spec.label_column = "y";
    spec.scale = std::pair{0.0, std::numbers::pi};
    const Dataset d = parse_csv("y,a,b\nM,1,5\nB,3,5\nB,2,5\n", spec);
    EXPECT_EQ(d.features.cols(), 2);
    EXPECT_EQ(d.features(0, 0), 0.0);
    EXPECT_EQ(d.features(1, 0), std::numbers::pi);
    EXPECT_NEAR(d.features(2, 0), std::numbers::pi / 2, 1e-15);
    EXPECT_EQ(d.features(1, 1), 0.0); // constant column
    // "B" sorts before "M".
    EXPECT_EQ(d.labels, Tensor::matrix({{0, 1}, {1, 0}, {1, 0}}));
}

TEST(ParseCsv, NumericLabelsOrderedByValue) {
    CsvSpec spec;
    const Dataset d = parse_csv("a,c\n1,10\n2,9\n3,10\n", spec);
    EXPECT_EQ(d.labels, Tensor::matrix({{0, 1}, {1, 0}, {0, 1}}));
    spec.label_kind = LabelKind::kReal;
    const Dataset r = parse_csv("a,c\n1,10\n2,9.5\n", spec);
    EXPECT_EQ(r.labels, Tensor::vector({10, 9.5}));
    spec = {};
    spec.one_hot_width = 3;
    EXPECT_EQ(parse_csv("a,c\n1,0\n2,1\n", spec).labels.cols(), 3);
}

TEST(ParseCsv, Errors) {
    CsvSpec spec;
    try {
        (void)parse_csv("a,b,c\n1,2,0\n1,x,1\n", spec);
        FAIL() << "expected DataError";
    } catch (const DataError &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
            << e.what();
        EXPECT_NE(std::string(e.what()).find("column 2"), std::string::npos)
            << e.what();
    }
    EXPECT_THROW((void)parse_csv("a,b\n1,2,3\n", spec), DataError);
    EXPECT_THROW((void)parse_csv("", spec), DataError);
    EXPECT_THROW((void)parse_csv("a,b\n", spec), DataError);
    spec.label_column = "nope";
    EXPECT_THROW((void)parse_csv("a,b\n1,0\n", spec), DataError);
    spec = {};
    spec.last_features = 3;
    EXPECT_THROW((void)parse_csv("a,b\n1,0\n", spec), DataError);
    spec = {};
    spec.one_hot_width = 1;
    EXPECT_THROW((void)parse_csv("a,b\n1,0\n2,1\n", spec), DataError);
    EXPECT_THROW((void)load_csv("/nonexistent.csv", {}), IoError);
}

TEST(Dataset, SplitAndScale) {
    CsvSpec spec;
    const Dataset d = parse_csv(wide_csv(20), spec);
    Split s = split_dataset(d, 0.7, 3);
    EXPECT_EQ(s.train.size(), 14);
    EXPECT_EQ(s.test.size(), 6);
    const Split again = split_dataset(d, 0.7, 3);
    EXPECT_EQ(s.train.features, again.train.features);
    scale_features(s, 0.0, std::numbers::pi);
    EXPECT_EQ(s.train.features.matrix().minCoeff(), 0.0);
    EXPECT_EQ(s.train.features.matrix().maxCoeff(), std::numbers::pi);
    EXPECT_GE(s.test.features.matrix().minCoeff(), 0.0);
    EXPECT_LE(s.test.features.matrix().maxCoeff(), std::numbers::pi);
    EXPECT_THROW((void)split_dataset(d, 1.0, 0), ArgumentError);
}

TEST(Dataset, MakeSeparable) {
    const Split s = make_separable(200, 100, 11);
    EXPECT_EQ(s.train.size(), 200);
    EXPECT_EQ(s.test.size(), 100);
    s.train.validate(true);
    const auto cls = class_indices(s.train.labels);
    for (Eigen::Index r = 0; r < s.train.size(); ++r) {
        const double a = s.train.features(r, 0);
        EXPECT_GE(std::abs(a - 0.5), 0.05);
        EXPECT_EQ(cls[static_cast<std::size_t>(r)], a > 0.5 ? 1 : 0);
    }
    EXPECT_EQ(make_separable(5, 5, 11).train.features,
              make_separable(5, 5, 11).train.features);
}

// Plain batch gradient descent logistic regression; the reference model
// for "linearly separable".
double logistic_accuracy(const Split &s) {
    double w0 = 0, w1 = 0, b = 0;
    const auto ytr = class_indices(s.train.labels);
    for (int it = 0; it < 3000; ++it) {
        double g0 = 0, g1 = 0, gb = 0;
        for (Eigen::Index r = 0; r < s.train.size(); ++r) {
            const double z = w0 * s.train.features(r, 0) +
                             w1 * s.train.features(r, 1) + b;
            const double err =
                1 / (1 + std::exp(-z)) - ytr[static_cast<std::size_t>(r)];
            g0 += err * s.train.features(r, 0);
            g1 += err * s.train.features(r, 1);
            gb += err;
        }
        const double n = static_cast<double>(s.train.size());
        w0 -= 2.0 * g0 / n;
        w1 -= 2.0 * g1 / n;
        b -= 2.0 * gb / n;
    }
    const auto yte = class_indices(s.test.labels);
    int hits = 0;
    for (Eigen::Index r = 0; r < s.test.size(); ++r) {
        const double z =
            w0 * s.test.features(r, 0) + w1 * s.test.features(r, 1) + b;
        hits += (z > 0 ? 1 : 0) == yte[static_cast<std::size_t>(r)];
    }
    return hits / static_cast<double>(s.test.size());
}

TEST(Dataset, SeparableSetPassesLogisticReference) {
    for (std::uint64_t seed : {0U, 1U, 2U}) {
        Split s = make_separable(200, 100, seed);
        scale_features(s, 0.0, std::numbers::pi);
        EXPECT_GE(logistic_accuracy(s), 0.95) << "seed " << seed;
    }
}

constexpr int kProbePoints = 201;

RunReport sample_report() {
    RunReport r;
    r.app = "qcl";
    r.config = {{"target", "square"}, {"points", 50}};
    r.loss = {3.0, 2.5, 0.1 + 0.2};
    r.metrics = {{"mse", 1e-3}, {"coef", -0.75}};
    r.wall_seconds = 1.25;
    r.seed = 42;
    r.notes = {"note"};
    for (int i = 0; i < kProbePoints; ++i) {
        const double x = -1.0 + 2.0 * i / (kProbePoints - 1);
        r.predictions.push_back({x, x * x, x * x / 3});
    }
    return r;
}

TEST(Report, CurveCsv) {
    RunReport r = sample_report();
    EXPECT_EQ(curve_csv(r),
              "step,loss\n0,3\n1,2.5\n2,0.30000000000000004\n");
    r.accuracy = {0.5, 0.75, 1.0};
    EXPECT_EQ(curve_csv(r),
              "step,loss,accuracy\n0,3,0.5\n1,2.5,0.75\n2,0.30000000000000004,1\n");
    r.accuracy = {0.5};
    EXPECT_THROW((void)curve_csv(r), DataError);
}

TEST(Report, EmitAndRoundTrip) {
    const auto dir = temp_dir("report");
    const RunReport r = sample_report();
    emit_report(r, dir / "nested");
    const std::string curve = read_file(dir / "nested" / "curve.csv");
    EXPECT_EQ(count_lines(curve), 1 + 3);
    const std::string preds = read_file(dir / "nested" / "predictions.csv");
    EXPECT_EQ(count_lines(preds), 1 + kProbePoints);
    EXPECT_EQ(preds.substr(0, preds.find('\n')), "x,y_target,y_trained");

    const RunReport back = load_report(dir / "nested");
    EXPECT_EQ(back.app, r.app);
    EXPECT_EQ(back.config, r.config);
    EXPECT_EQ(back.loss, r.loss);
    EXPECT_EQ(back.metrics, r.metrics);
    EXPECT_EQ(back.wall_seconds, r.wall_seconds);
    EXPECT_EQ(back.seed, r.seed);
    EXPECT_EQ(back.notes, r.notes);
    EXPECT_EQ(back.predictions, r.predictions);
}

TEST(Report, NoPredictionsFileWithoutPredictions) {
    const auto dir = temp_dir("nopred");
    RunReport r = sample_report();
    r.predictions.clear();
    emit_report(r, dir);
    EXPECT_FALSE(std::filesystem::exists(dir / "predictions.csv"));
    EXPECT_THROW((void)load_report(dir / "missing"), IoError);
    std::ofstream(dir / "report.json") << "{\"app\": 1}";
    EXPECT_THROW((void)load_report(dir), DataError);
}

} // namespace
} // namespace vqnet::apps
