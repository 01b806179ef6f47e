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

#include "vqnet/optimizer.hpp"

#include <cmath>

#include "vqnet/error.hpp"

namespace vqnet {

const char *to_string(OptimizerKind kind) noexcept {
    switch (kind) {
    case OptimizerKind::kGd:
        return "gd";
    case OptimizerKind::kMomentum:
        return "momentum";
    case OptimizerKind::kAdaGrad:
        return "adagrad";
    case OptimizerKind::kRmsProp:
        return "rmsprop";
    case OptimizerKind::kAdam:
        return "adam";
    }
    return "?";
}

OptimizerKind parse_optimizer_kind(std::string_view name) {
    for (auto k : {OptimizerKind::kGd, OptimizerKind::kMomentum,
                   OptimizerKind::kAdaGrad, OptimizerKind::kRmsProp,
                   OptimizerKind::kAdam}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw ArgumentError("unknown optimizer '" + std::string(name) + "'");
}

void OptimizerConfig::validate() const {
    auto in_unit = [](double v) { return std::isfinite(v) && v >= 0 && v < 1; };
    if (!std::isfinite(learning_rate) || learning_rate <= 0) {
        throw ArgumentError("learning_rate must be positive");
    }
    if (!in_unit(momentum)) {
        throw ArgumentError("momentum must lie in [0, 1)");
    }
    if (!in_unit(beta1) || !in_unit(beta2)) {
        throw ArgumentError("beta1 and beta2 must lie in [0, 1)");
    }
    if (!in_unit(decay)) {
        throw ArgumentError("decay must lie in [0, 1)");
    }
    if (!std::isfinite(epsilon) || epsilon <= 0) {
        throw ArgumentError("epsilon must be positive");
    }
}

Optimizer::Optimizer(Expression expr, OptimizerConfig cfg,
                     std::vector<Node> vars)
    : expr_(expr), cfg_(cfg), vars_(std::move(vars)) {
    cfg_.validate();
    if (vars_.empty()) {
        vars_ = expr_.variables();
    }
    for (const Node &v : vars_) {
        if (v.kind() != NodeKind::kVariable) {
            throw UsageError("optimizers only update variables");
        }
    }
}

Tensor Optimizer::update(NodeId id, const Tensor &value, const Tensor &grad) {
    const auto zeros = [&] {
        return Tensor::zeros(value.rows(), value.cols());
    };
    auto &s1 = state_.first.try_emplace(id, zeros()).first->second;
    const auto &g = grad.matrix().array();
    auto x = value.matrix().array();
    const double lr = cfg_.learning_rate;
    switch (cfg_.kind) {
    case OptimizerKind::kGd:
        return Tensor((x - lr * g).matrix());
    case OptimizerKind::kMomentum: {
        auto &v = s1.matrix();
        v = (cfg_.momentum * v.array() - lr * g).matrix();
        return Tensor((x + v.array()).matrix());
    }
    case OptimizerKind::kAdaGrad: {
        auto &acc = s1.matrix();
        acc = (acc.array() + g * g).matrix();
        return Tensor(
            (x - lr * g / (acc.array().sqrt() + cfg_.epsilon)).matrix());
    }
    case OptimizerKind::kRmsProp: {
        auto &acc = s1.matrix();
        acc = (cfg_.decay * acc.array() + (1.0 - cfg_.decay) * g * g).matrix();
        return Tensor(
            (x - lr * g / (acc.array().sqrt() + cfg_.epsilon)).matrix());
    }
    case OptimizerKind::kAdam: {
        auto &m = s1.matrix();
        auto &v = state_.second.try_emplace(id, zeros()).first->second.matrix();
        m = (cfg_.beta1 * m.array() + (1.0 - cfg_.beta1) * g).matrix();
        v = (cfg_.beta2 * v.array() + (1.0 - cfg_.beta2) * g * g).matrix();
        const auto t = static_cast<double>(state_.t);
        const double c1 = 1.0 - std::pow(cfg_.beta1, t);
        const double c2 = 1.0 - std::pow(cfg_.beta2, t);
        return Tensor((x - lr * (m.array() / c1) /
                               ((v.array() / c2).sqrt() + cfg_.epsilon))
                          .matrix());
    }
    }
    throw ArgumentError("unknown optimizer kind");
}

double Optimizer::step(const std::function<void()> &inspect) {
    const Tensor &loss_value = expr_.forward();
    if (!loss_value.is_scalar()) {
        throw UsageError("loss must be a scalar, got " +
                         loss_value.shape_string());
    }
    const double loss = loss_value.item();
    const Gradients &grads = expr_.backward();
    if (inspect) {
        inspect();
    }
    ++state_.t;
    for (const Node &v : vars_) {
        auto it = grads.find(v.id());
        if (it == grads.end()) {
            continue;
        }
        v.set_value(update(v.id(), v.get_value(), it->second));
    }
    history_.push_back(loss);
    return loss;
}

std::vector<double>
Optimizer::run(int max_iterations,
               const std::function<void(int, double)> &callback) {
    if (max_iterations < 1) {
        throw ArgumentError("max_iterations must be at least 1");
    }
    std::vector<double> losses;
    losses.reserve(static_cast<std::size_t>(max_iterations));
    for (int i = 0; i < max_iterations; ++i) {
        const double loss = step();
        losses.push_back(loss);
        if (callback) {
            callback(i, loss);
        }
    }
    return losses;
}

double Optimizer::get_value() const {
    if (history_.empty()) {
        throw UsageError("get_value() before any optimization step");
    }
    return history_.back();
}

} // namespace vqnet
