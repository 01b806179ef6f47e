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

#include "vqnet/apps/report.hpp"

#include <cstdio>
#include <fstream>

#include "vqnet/apps/io.hpp"
#include "vqnet/error.hpp"

namespace vqnet::apps {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    out << text;
    if (!out) {
        throw IoError("write to '" + path.string() + "' failed");
    }
}

} // namespace

nlohmann::json to_json(const RunReport &r) {
    nlohmann::json j;
    j["app"] = r.app;
    j["config"] = r.config;
    j["seed"] = r.seed;
    j["loss"] = r.loss;
    if (!r.accuracy.empty()) {
        j["accuracy"] = r.accuracy;
    }
    j["metrics"] = r.metrics;
    j["wall_seconds"] = r.wall_seconds;
    j["notes"] = r.notes;
    if (!r.predictions.empty()) {
        auto &p = j["predictions"];
        p = nlohmann::json::array();
        for (const auto &e : r.predictions) {
            p.push_back({{"x", e.x}, {"y_target", e.target},
                         {"y_trained", e.trained}});
        }
    }
    return j;
}

RunReport report_from_json(const nlohmann::json &j) {
    try {
        RunReport r;
        r.app = j.at("app").get<std::string>();
        r.config = j.at("config");
        r.seed = j.at("seed").get<std::uint64_t>();
        r.loss = j.at("loss").get<std::vector<double>>();
        if (j.contains("accuracy")) {
            r.accuracy = j.at("accuracy").get<std::vector<double>>();
        }
        r.metrics = j.at("metrics").get<std::map<std::string, double>>();
        r.wall_seconds = j.at("wall_seconds").get<double>();
        r.notes = j.at("notes").get<std::vector<std::string>>();
        if (j.contains("predictions")) {
            for (const auto &e : j.at("predictions")) {
                r.predictions.push_back({e.at("x").get<double>(),
                                         e.at("y_target").get<double>(),
                                         e.at("y_trained").get<double>()});
            }
        }
        return r;
    } catch (const nlohmann::json::exception &e) {
        throw DataError(std::string("malformed report: ") + e.what());
    }
}

std::string curve_csv(const RunReport &r) {
    const bool acc = !r.accuracy.empty();
    if (acc && r.accuracy.size() != r.loss.size()) {
        throw DataError("accuracy and loss histories differ in length");
    }
    std::string out = acc ? "step,loss,accuracy\n" : "step,loss\n";
    for (std::size_t i = 0; i < r.loss.size(); ++i) {
        out += std::to_string(i) + "," + fmt(r.loss[i]);
        if (acc) {
            out += "," + fmt(r.accuracy[i]);
        }
        out += "\n";
    }
    return out;
}

std::string predictions_csv(const RunReport &r) {
    std::string out = "x,y_target,y_trained\n";
    for (const auto &p : r.predictions) {
        out += fmt(p.x) + "," + fmt(p.target) + "," + fmt(p.trained) + "\n";
    }
    return out;
}

void emit_report(const RunReport &r, const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    }
    write_file(dir / "curve.csv", curve_csv(r));
    write_file(dir / "report.json", to_json(r).dump(2) + "\n");
    if (!r.predictions.empty()) {
        write_file(dir / "predictions.csv", predictions_csv(r));
    }
}

RunReport load_report(const std::filesystem::path &dir) {
    const std::string text = read_file(dir / "report.json");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw DataError(std::string("report.json: ") + e.what());
    }
    return report_from_json(j);
}

} // namespace vqnet::apps
