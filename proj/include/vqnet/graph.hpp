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
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "vqnet/pauli.hpp"
#include "vqnet/tensor.hpp"
#include "vqnet/vqc.hpp"

namespace vqnet {

using NodeId = std::size_t;

enum class NodeKind { kVariable, kPlaceholder, kOperator };

enum class OpTag {
    kNone,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kExp,
    kLog,
    kDot,
    kSoftmax,
    kCrossEntropy,
    kReduceSum,
    kLeastSquare,
    kQop,
    kQopPmeasure,
};

[[nodiscard]] const char *op_name(OpTag tag) noexcept;

class Graph;

/// Lightweight handle on a graph node. Valid while its Graph is alive.
class Node {
  public:
    Node() = default;
    Node(Graph *graph, NodeId id) : graph_(graph), id_(id) {}

    [[nodiscard]] Graph &graph() const;
    [[nodiscard]] NodeId id() const noexcept { return id_; }
    [[nodiscard]] bool valid() const noexcept { return graph_ != nullptr; }
    [[nodiscard]] NodeKind kind() const;

    /// Evaluates the subgraph below this node (memoized until the next
    /// set_value/feed) and returns the value.
    [[nodiscard]] Tensor get_value() const;
    /// Variables only.
    void set_value(const Tensor &value) const;
    /// Placeholders only; `batch` is batch_size x feature_dim.
    void feed(const Tensor &batch) const;

    /// Element of this variable, for binding circuit angles.
    [[nodiscard]] ParamRef at(std::size_t element = 0) const;

    friend bool operator==(const Node &a, const Node &b) {
        return a.graph_ == b.graph_ && a.id_ == b.id_;
    }

  private:
    Graph *graph_ = nullptr;
    NodeId id_ = 0;
};

using Gradients = std::map<NodeId, Tensor>;

/**
 * Symbolic computation graph. Nodes are created in topological order, so a
 * node's children always have smaller ids. Not copyable or movable: Node
 * handles refer back to it.
 */
class Graph {
  public:
    Graph() = default;
    Graph(const Graph &) = delete;
    Graph &operator=(const Graph &) = delete;

    /// Trainable leaf holding a scalar, vector or matrix.
    [[nodiscard]] Node var(const Tensor &initial);
    /// Data leaf whose per-sample shape is (feature_dim, 1); fed batches are
    /// batch_size x feature_dim and the batch size may change between feeds.
    [[nodiscard]] Node placeholder(Eigen::Index feature_dim);

    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] NodeKind kind(NodeId id) const;
    [[nodiscard]] OpTag tag(NodeId id) const;
    [[nodiscard]] const std::vector<NodeId> &children(NodeId id) const;
    [[nodiscard]] bool is_leaf(NodeId id) const;

    [[nodiscard]] Tensor get_value(NodeId id);
    void set_value(NodeId id, const Tensor &value);
    void feed(NodeId id, const Tensor &batch);

    /// Recomputes every operator below `root` in one ascending pass.
    const Tensor &forward(NodeId root);
    /// Reverse pass from a scalar root; returns d root / d v for every
    /// variable leaf below it.
    [[nodiscard]] Gradients backward(NodeId root);

    /// Node ids of the subgraph below root, ascending.
    [[nodiscard]] std::vector<NodeId> subgraph(NodeId root) const;
    /// Variable leaves below root, ascending.
    [[nodiscard]] std::vector<NodeId> variables(NodeId root) const;

    // Node construction; called by the free functions below.
    [[nodiscard]] Node make_op(OpTag tag, std::vector<NodeId> children);
    struct QuantumOp;
    [[nodiscard]] Node make_quantum(OpTag tag,
                                    std::shared_ptr<const QuantumOp> q,
                                    std::vector<NodeId> children);

  private:
    struct NodeData {
        NodeKind kind = NodeKind::kOperator;
        OpTag tag = OpTag::kNone;
        std::vector<NodeId> children;
        std::optional<Tensor> value;
        std::uint64_t version = 0;
        Eigen::Index feature_dim = 0;
        std::shared_ptr<const QuantumOp> quantum;
    };

    NodeData &at(NodeId id);
    const NodeData &at(NodeId id) const;
    void evaluate(NodeId id);
    void backprop(NodeId id, const Tensor &upstream, Gradients &slots);

    std::vector<NodeData> nodes_;
    std::uint64_t version_ = 1;
    std::uint64_t forward_version_ = 0;
    std::optional<NodeId> forward_root_;
};

/// Circuit plus observables held by a quantum operator node.
struct Graph::QuantumOp {
    VQC vqc;
    std::vector<PauliOperator> hams;       // qop
    std::vector<int> measured;             // qop_pmeasure
    std::vector<std::size_t> components;   // qop_pmeasure
    SimOptions sim;
    std::optional<NodeId> data;
};

/**
 * Root wrapper driving forward and back propagation.
 */
class Expression {
  public:
    explicit Expression(Node root);

    [[nodiscard]] Node root() const noexcept { return root_; }
    /// One topological pass; caches every node value.
    const Tensor &forward();
    /// Requires a preceding forward with no mutation since, and a scalar
    /// root. Placeholders receive no gradient.
    const Gradients &backward();
    /// Gradient of the last backward pass for a variable.
    [[nodiscard]] const Tensor &gradient(Node variable) const;
    /// Variable leaves reachable from the root, ascending id.
    [[nodiscard]] std::vector<Node> variables() const;

  private:
    Node root_;
    Gradients grads_;
};

[[nodiscard]] inline Expression expression(Node root) {
    return Expression(root);
}

[[nodiscard]] Node operator+(Node a, Node b);
[[nodiscard]] Node operator-(Node a, Node b);
[[nodiscard]] Node operator*(Node a, Node b);
[[nodiscard]] Node operator/(Node a, Node b);
[[nodiscard]] Node exp(Node a);
[[nodiscard]] Node log(Node a);
[[nodiscard]] Node dot(Node a, Node b);
/// Row-wise softmax.
[[nodiscard]] Node softmax(Node z);
/// Per-row -sum label * log(clip(pred, 1e-12, 1)); result is batch x 1.
[[nodiscard]] Node cross_entropy(Node label, Node pred);
[[nodiscard]] Node reduce_sum(Node a);
/// Entrywise (pred - label)^2.
[[nodiscard]] Node least_square(Node label, Node pred);

inline constexpr double kCrossEntropyClip = 1e-12;

/**
 * Expectations of each Hamiltonian on the circuit. Output is
 * batch_size x hams.size(); with a data placeholder the circuit is rebound
 * per fed row, otherwise batch_size is 1. Every bound parameter of the
 * circuit must refer to a variable of `graph`.
 */
[[nodiscard]] Node qop(Graph &graph, VQC vqc, std::vector<PauliOperator> hams,
                       const QuantumMachine &machine,
                       const QubitAllocation &qubits,
                       std::optional<Node> data = std::nullopt);

/// Selected projection probabilities over `measured`; output is
/// batch_size x components.size().
[[nodiscard]] Node qop_pmeasure(Graph &graph, VQC vqc,
                                std::vector<std::size_t> components,
                                const QuantumMachine &machine,
                                const QubitAllocation &measured,
                                std::optional<Node> data = std::nullopt);

} // namespace vqnet
