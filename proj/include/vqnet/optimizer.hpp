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
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vqnet/graph.hpp"

namespace vqnet {

enum class OptimizerKind { kGd, kMomentum, kAdaGrad, kRmsProp, kAdam };

[[nodiscard]] const char *to_string(OptimizerKind kind) noexcept;
/// Accepts gd, momentum, adagrad, rmsprop, adam.
[[nodiscard]] OptimizerKind parse_optimizer_kind(std::string_view name);

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::kMomentum;
    double learning_rate = 0.02;
    double momentum = 0.9;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double decay = 0.9; // rmsprop

    /// Throws ArgumentError on out-of-range settings.
    void validate() const;
};

struct OptimizerState {
    /// Velocity (momentum), accumulated square (adagrad, rmsprop) or first
    /// moment (adam), keyed by variable node.
    std::map<NodeId, Tensor> first;
    /// Second moment (adam).
    std::map<NodeId, Tensor> second;
    std::int64_t t = 0;
};

/**
 * Gradient-based optimizer over the variables of an Expression.
 *
 * Each step runs forward, backward, then the update rule, and returns the
 * loss measured before the update.
 */
class Optimizer {
  public:
    /// `vars` empty means every variable leaf reachable from the root.
    Optimizer(Expression expr, OptimizerConfig cfg, std::vector<Node> vars = {});

    /// `inspect` runs after backward and before the update, while every
    /// node value still reflects the pre-update variables.
    double step(const std::function<void()> &inspect = {});
    /// Runs `max_iterations` steps; `callback(i, loss)` is called after each.
    std::vector<double>
    run(int max_iterations,
        const std::function<void(int, double)> &callback = {});

    /// Loss recorded by the most recent step.
    [[nodiscard]] double get_value() const;

    [[nodiscard]] const OptimizerState &state() const noexcept {
        return state_;
    }
    [[nodiscard]] const OptimizerConfig &config() const noexcept {
        return cfg_;
    }
    [[nodiscard]] const std::vector<Node> &variables() const noexcept {
        return vars_;
    }
    [[nodiscard]] Expression &expression() noexcept { return expr_; }

  private:
    Tensor update(NodeId id, const Tensor &value, const Tensor &grad);

    Expression expr_;
    OptimizerConfig cfg_;
    std::vector<Node> vars_;
    OptimizerState state_;
    std::vector<double> history_;
};

} // namespace vqnet
