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
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace vqnet::apps {

struct Prediction {
    double x = 0.0;
    double target = 0.0;
    double trained = 0.0;

    friend bool operator==(const Prediction &, const Prediction &) = default;
};

/// Outcome of one application run.
struct RunReport {
    std::string app;
    nlohmann::json config = nlohmann::json::object();
    /// Pre-update loss of every iteration.
    std::vector<double> loss;
    /// Training accuracy per iteration (classifier only).
    std::vector<double> accuracy;
    std::map<std::string, double> metrics;
    double wall_seconds = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
    /// Dense prediction curve (circuit learning only).
    std::vector<Prediction> predictions;
};

[[nodiscard]] nlohmann::json to_json(const RunReport &r);
[[nodiscard]] RunReport report_from_json(const nlohmann::json &j);

/// `step,loss[,accuracy]` rows, numbers printed with 17 significant digits.
[[nodiscard]] std::string curve_csv(const RunReport &r);
[[nodiscard]] std::string predictions_csv(const RunReport &r);

/// Writes curve.csv, report.json and, when predictions are present,
/// predictions.csv into `dir` (created if needed). Throws IoError.
void emit_report(const RunReport &r, const std::filesystem::path &dir);
/// Reads report.json from `dir`.
[[nodiscard]] RunReport load_report(const std::filesystem::path &dir);

} // namespace vqnet::apps
