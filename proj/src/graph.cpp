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

#include "vqnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "vqnet/error.hpp"

namespace vqnet {

namespace {

/// Sums a broadcast gradient back down to a scalar operand's shape.
Tensor unbroadcast(const Tensor &grad, const Tensor &operand) {
    if (operand.is_scalar() && !grad.is_scalar()) {
        return reduce_sum(grad);
    }
    return grad;
}

void accumulate(Gradients &slots, NodeId id, const Tensor &g) {
    auto it = slots.find(id);
    if (it == slots.end()) {
        slots.emplace(id, g);
    } else {
        it->second = it->second + g;
    }
}

void require_same_shape(const Tensor &a, const Tensor &b, const char *op) {
    if (!a.same_shape(b)) {
        throw ShapeError(std::string(op) + ": shapes " + a.shape_string() +
                         " and " + b.shape_string() + " differ");
    }
}

Tensor softmax_rows(const Tensor &z) {
    Tensor::Storage out(z.rows(), z.cols());
    for (Eigen::Index r = 0; r < z.rows(); ++r) {
        const auto row = z.matrix().row(r).array();
        const auto e = (row - row.maxCoeff()).exp();
        out.row(r) = (e / e.sum()).matrix();
    }
    return Tensor(out);
}

Tensor cross_entropy_rows(const Tensor &label, const Tensor &pred) {
    require_same_shape(label, pred, "cross_entropy");
    Tensor::Storage out(pred.rows(), 1);
    const auto clipped =
        pred.matrix().array().max(kCrossEntropyClip).min(1.0).log();
    for (Eigen::Index r = 0; r < pred.rows(); ++r) {
        out(r, 0) = -(label.matrix().row(r).array() * clipped.row(r)).sum();
    }
    return Tensor(out);
}

} // namespace

const char *op_name(OpTag tag) noexcept {
    switch (tag) {
    case OpTag::kNone:
        return "leaf";
    case OpTag::kAdd:
        return "add";
    case OpTag::kSub:
        return "sub";
    case OpTag::kMul:
        return "mul";
    case OpTag::kDiv:
        return "div";
    case OpTag::kExp:
        return "exp";
    case OpTag::kLog:
        return "log";
    case OpTag::kDot:
        return "dot";
    case OpTag::kSoftmax:
        return "softmax";
    case OpTag::kCrossEntropy:
        return "cross_entropy";
    case OpTag::kReduceSum:
        return "reduce_sum";
    case OpTag::kLeastSquare:
        return "least_square";
    case OpTag::kQop:
        return "qop";
    case OpTag::kQopPmeasure:
        return "qop_pmeasure";
    }
    return "?";
}

// --- Node -------------------------------------------------------------------

Graph &Node::graph() const {
    if (graph_ == nullptr) {
        throw UsageError("empty node handle");
    }
    return *graph_;
}

NodeKind Node::kind() const { return graph().kind(id_); }
Tensor Node::get_value() const { return graph().get_value(id_); }
void Node::set_value(const Tensor &value) const {
    graph().set_value(id_, value);
}
void Node::feed(const Tensor &batch) const { graph().feed(id_, batch); }

ParamRef Node::at(std::size_t element) const {
    if (kind() != NodeKind::kVariable) {
        throw UsageError("only variables can drive circuit angles");
    }
    const auto size =
        static_cast<std::size_t>(graph().get_value(id_).size());
    if (element >= size) {
        throw ArgumentError("element " + std::to_string(element) +
                            " outside a variable of " + std::to_string(size) +
                            " entries");
    }
    return {id_, element};
}

// --- Graph ------------------------------------------------------------------

Graph::NodeData &Graph::at(NodeId id) {
    if (id >= nodes_.size()) {
        throw ArgumentError("no node " + std::to_string(id));
    }
    return nodes_[id];
}

const Graph::NodeData &Graph::at(NodeId id) const {
    if (id >= nodes_.size()) {
        throw ArgumentError("no node " + std::to_string(id));
    }
    return nodes_[id];
}

Node Graph::var(const Tensor &initial) {
    NodeData d;
    d.kind = NodeKind::kVariable;
    d.value = initial;
    nodes_.push_back(std::move(d));
    return {this, nodes_.size() - 1};
}

Node Graph::placeholder(Eigen::Index feature_dim) {
    if (feature_dim < 1) {
        throw ShapeError("placeholder feature dimension must be positive");
    }
    NodeData d;
    d.kind = NodeKind::kPlaceholder;
    d.feature_dim = feature_dim;
    nodes_.push_back(std::move(d));
    return {this, nodes_.size() - 1};
}

NodeKind Graph::kind(NodeId id) const { return at(id).kind; }
OpTag Graph::tag(NodeId id) const { return at(id).tag; }
const std::vector<NodeId> &Graph::children(NodeId id) const {
    return at(id).children;
}
bool Graph::is_leaf(NodeId id) const { return at(id).children.empty(); }

Node Graph::make_op(OpTag tag, std::vector<NodeId> children) {
    for (NodeId c : children) {
        (void)at(c);
    }
    NodeData d;
    d.tag = tag;
    d.children = std::move(children);
    nodes_.push_back(std::move(d));
    return {this, nodes_.size() - 1};
}

Node Graph::make_quantum(OpTag tag, std::shared_ptr<const QuantumOp> q,
                         std::vector<NodeId> children) {
    Node n = make_op(tag, std::move(children));
    nodes_[n.id()].quantum = std::move(q);
    return n;
}

void Graph::set_value(NodeId id, const Tensor &value) {
    auto &d = at(id);
    if (d.kind != NodeKind::kVariable) {
        throw UsageError(d.kind == NodeKind::kPlaceholder
                             ? "placeholders take data through feed()"
                             : "cannot set the value of an operator node");
    }
    if (!d.value->same_shape(value)) {
        throw ShapeError("set_value: variable is " + d.value->shape_string() +
                         ", got " + value.shape_string());
    }
    d.value = value;
    ++version_;
}

void Graph::feed(NodeId id, const Tensor &batch) {
    auto &d = at(id);
    if (d.kind != NodeKind::kPlaceholder) {
        throw UsageError("feed() is only valid on placeholders");
    }
    if (batch.cols() != d.feature_dim) {
        throw ShapeError("feed: placeholder expects " +
                         std::to_string(d.feature_dim) +
                         " features per sample, batch is " +
                         batch.shape_string());
    }
    d.value = batch;
    ++version_;
}

std::vector<NodeId> Graph::subgraph(NodeId root) const {
    (void)at(root);
    std::set<NodeId> seen{root};
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
        const NodeId id = stack.back();
        stack.pop_back();
        for (NodeId c : nodes_[id].children) {
            if (seen.insert(c).second) {
                stack.push_back(c);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<NodeId> Graph::variables(NodeId root) const {
    std::vector<NodeId> out;
    for (NodeId id : subgraph(root)) {
        if (nodes_[id].kind == NodeKind::kVariable) {
            out.push_back(id);
        }
    }
    return out;
}

Tensor Graph::get_value(NodeId id) {
    const auto &d = at(id);
    if (d.kind != NodeKind::kOperator || d.version != version_) {
        for (NodeId n : subgraph(id)) {
            if (nodes_[n].kind != NodeKind::kOperator) {
                if (!nodes_[n].value) {
                    throw UnboundError("placeholder " + std::to_string(n) +
                                       " has not been fed");
                }
            } else if (nodes_[n].version != version_) {
                evaluate(n);
            }
        }
    }
    return *at(id).value;
}

const Tensor &Graph::forward(NodeId root) {
    for (NodeId n : subgraph(root)) {
        auto &d = nodes_[n];
        if (d.kind != NodeKind::kOperator) {
            if (!d.value) {
                throw UnboundError("placeholder " + std::to_string(n) +
                                   " has not been fed");
            }
            continue;
        }
        evaluate(n);
    }
    return *nodes_[root].value;
}

namespace {

ParamValues gather_values(const Graph::QuantumOp &q, Graph &g) {
    ParamValues values;
    NodeId last = static_cast<NodeId>(-1);
    Tensor current;
    for (const ParamRef &p : q.vqc.params()) {
        if (p.variable != last) {
            current = g.get_value(p.variable);
            last = p.variable;
        }
        if (p.element >= static_cast<std::size_t>(current.size())) {
            throw ShapeError("circuit binds element " +
                             std::to_string(p.element) + " of a " +
                             current.shape_string() + " variable");
        }
        values[p] = current[static_cast<Eigen::Index>(p.element)];
    }
    return values;
}

std::span<const double> row_of(const std::optional<Tensor> &data,
                               Eigen::Index r) {
    if (!data) {
        return {};
    }
    return {data->matrix().data() + r * data->cols(),
            static_cast<std::size_t>(data->cols())};
}

} // namespace

void Graph::evaluate(NodeId id) {
    auto &d = nodes_[id];
    auto child = [&](std::size_t k) -> const Tensor & {
        return *nodes_[d.children[k]].value;
    };
    Tensor out;
    switch (d.tag) {
    case OpTag::kAdd:
        out = child(0) + child(1);
        break;
    case OpTag::kSub:
        out = child(0) - child(1);
        break;
    case OpTag::kMul:
        out = child(0) * child(1);
        break;
    case OpTag::kDiv:
        out = child(0) / child(1);
        break;
    case OpTag::kExp:
        out = vqnet::exp(child(0));
        break;
    case OpTag::kLog:
        out = vqnet::log(child(0));
        break;
    case OpTag::kDot:
        out = vqnet::dot(child(0), child(1));
        break;
    case OpTag::kSoftmax:
        out = softmax_rows(child(0));
        break;
    case OpTag::kCrossEntropy:
        out = cross_entropy_rows(child(0), child(1));
        break;
    case OpTag::kReduceSum:
        out = vqnet::reduce_sum(child(0));
        break;
    case OpTag::kLeastSquare: {
        require_same_shape(child(0), child(1), "least_square");
        const auto diff = child(1) - child(0);
        out = diff * diff;
        break;
    }
    case OpTag::kQop:
    case OpTag::kQopPmeasure: {
        const auto &q = *d.quantum;
        const ParamValues values = gather_values(q, *this);
        std::optional<Tensor> data;
        if (q.data) {
            data = nodes_[*q.data].value;
        }
        const Eigen::Index rows = data ? data->rows() : 1;
        const bool pm = d.tag == OpTag::kQopPmeasure;
        const auto width = static_cast<Eigen::Index>(
            pm ? q.components.size() : q.hams.size());
        Tensor::Storage m(rows, width);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const auto row = row_of(data, r);
            const std::vector<double> e =
                pm ? pmeasure_of(q.vqc, values, q.measured, q.components, row,
                                 q.sim)
                   : expectations_of(q.vqc, values, q.hams, row, q.sim);
            for (Eigen::Index k = 0; k < width; ++k) {
                m(r, k) = e[static_cast<std::size_t>(k)];
            }
        }
        out = Tensor(m);
        break;
    }
    case OpTag::kNone:
        throw UsageError("evaluate() on a leaf");
    }
    nodes_[id].value = std::move(out);
    nodes_[id].version = version_;
}

Gradients Graph::backward(NodeId root) {
    const std::vector<NodeId> ids = subgraph(root);
    for (NodeId n : ids) {
        const auto &d = nodes_[n];
        if (d.kind == NodeKind::kOperator && d.version != version_) {
            throw UsageError("backward() needs a forward pass over the "
                             "current leaf values");
        }
    }
    const Tensor &rv = *nodes_[root].value;
    if (!rv.is_scalar()) {
        throw UsageError("backward() needs a scalar root, got " +
                         rv.shape_string());
    }
    Gradients slots;
    slots.emplace(root, Tensor(1.0));
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
        const auto &d = nodes_[*it];
        if (d.kind != NodeKind::kOperator) {
            continue;
        }
        auto g = slots.find(*it);
        if (g == slots.end()) {
            continue;
        }
        const Tensor upstream = g->second;
        backprop(*it, upstream, slots);
    }
    Gradients out;
    for (NodeId n : ids) {
        const auto &d = nodes_[n];
        if (d.kind != NodeKind::kVariable) {
            continue;
        }
        auto g = slots.find(n);
        out.emplace(n, g != slots.end()
                           ? g->second
                           : Tensor::zeros(d.value->rows(), d.value->cols()));
    }
    return out;
}

void Graph::backprop(NodeId id, const Tensor &upstream, Gradients &slots) {
    const auto &d = nodes_[id];
    const auto &ch = d.children;
    auto val = [&](std::size_t k) -> const Tensor & {
        return *nodes_[ch[k]].value;
    };
    const Tensor &out = *d.value;
    switch (d.tag) {
    case OpTag::kAdd:
        accumulate(slots, ch[0], unbroadcast(upstream, val(0)));
        accumulate(slots, ch[1], unbroadcast(upstream, val(1)));
        break;
    case OpTag::kSub:
        accumulate(slots, ch[0], unbroadcast(upstream, val(0)));
        accumulate(slots, ch[1], unbroadcast(-upstream, val(1)));
        break;
    case OpTag::kMul:
        accumulate(slots, ch[0], unbroadcast(upstream * val(1), val(0)));
        accumulate(slots, ch[1], unbroadcast(upstream * val(0), val(1)));
        break;
    case OpTag::kDiv: {
        const Tensor &a = val(0);
        const Tensor &b = val(1);
        accumulate(slots, ch[0], unbroadcast(upstream / b, val(0)));
        accumulate(slots, ch[1],
                   unbroadcast(-(upstream * a / (b * b)), val(1)));
        break;
    }
    case OpTag::kExp:
        accumulate(slots, ch[0], upstream * out);
        break;
    case OpTag::kLog:
        accumulate(slots, ch[0], upstream / val(0));
        break;
    case OpTag::kDot: {
        const Tensor &a = val(0);
        const Tensor &b = val(1);
        if (a.cols() == b.rows()) {
            accumulate(slots, ch[0], vqnet::dot(upstream, transpose(b)));
            accumulate(slots, ch[1], vqnet::dot(transpose(a), upstream));
        } else {
            accumulate(slots, ch[0], upstream * b);
            accumulate(slots, ch[1], upstream * a);
        }
        break;
    }
    case OpTag::kSoftmax: {
        Tensor::Storage gz(out.rows(), out.cols());
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            const auto y = out.matrix().row(r).array();
            const auto gy = upstream.matrix().row(r).array();
            gz.row(r) = (y * (gy - (gy * y).sum())).matrix();
        }
        accumulate(slots, ch[0], Tensor(gz));
        break;
    }
    case OpTag::kCrossEntropy: {
        const Tensor &label = val(0);
        const Tensor &pred = val(1);
        Tensor::Storage gp(pred.rows(), pred.cols());
        for (Eigen::Index r = 0; r < pred.rows(); ++r) {
            for (Eigen::Index c = 0; c < pred.cols(); ++c) {
                const double p = pred(r, c);
                const bool clipped = p < kCrossEntropyClip || p > 1.0;
                gp(r, c) = clipped ? 0.0 : -upstream(r, 0) * label(r, c) / p;
            }
        }
        accumulate(slots, ch[1], Tensor(gp));
        break;
    }
    case OpTag::kReduceSum: {
        const Tensor &a = val(0);
        accumulate(slots, ch[0],
                   Tensor::constant(a.rows(), a.cols(), upstream.item()));
        break;
    }
    case OpTag::kLeastSquare: {
        const Tensor diff = val(1) - val(0);
        const Tensor g = Tensor(2.0) * upstream * diff;
        accumulate(slots, ch[0], -g);
        accumulate(slots, ch[1], g);
        break;
    }
    case OpTag::kQop:
    case OpTag::kQopPmeasure: {
        const auto &q = *d.quantum;
        const ParamValues values = gather_values(q, *this);
        std::optional<Tensor> data;
        if (q.data) {
            data = nodes_[*q.data].value;
        }
        const bool pm = d.tag == OpTag::kQopPmeasure;
        std::map<NodeId, Tensor> var_grads;
        for (const ParamRef &p : q.vqc.params()) {
            if (!var_grads.contains(p.variable)) {
                const Tensor &v = *nodes_[p.variable].value;
                var_grads.emplace(p.variable, Tensor::zeros(v.rows(), v.cols()));
            }
        }
        for (Eigen::Index r = 0; r < upstream.rows(); ++r) {
            const auto row = row_of(data, r);
            const std::vector<Gradient> grads =
                pm ? pmeasure_grad(q.vqc, values, q.measured, q.components,
                                   row, q.sim)
                   : parameter_shift_grads(q.vqc, values, q.hams, row, q.sim);
            for (std::size_t k = 0; k < grads.size(); ++k) {
                const double w = upstream(r, static_cast<Eigen::Index>(k));
                for (const auto &[p, dv] : grads[k]) {
                    var_grads[p.variable][static_cast<Eigen::Index>(
                        p.element)] += w * dv;
                }
            }
        }
        for (const auto &[var, g] : var_grads) {
            accumulate(slots, var, g);
        }
        break;
    }
    case OpTag::kNone:
        break;
    }
}

// --- Expression -------------------------------------------------------------

Expression::Expression(Node root) : root_(root) {
    if (!root.valid()) {
        throw UsageError("expression over an empty node handle");
    }
    (void)root.kind();
}

const Tensor &Expression::forward() {
    return root_.graph().forward(root_.id());
}

const Gradients &Expression::backward() {
    grads_ = root_.graph().backward(root_.id());
    return grads_;
}

const Tensor &Expression::gradient(Node variable) const {
    auto it = grads_.find(variable.id());
    if (it == grads_.end()) {
        throw UsageError("no gradient recorded for node " +
                         std::to_string(variable.id()));
    }
    return it->second;
}

std::vector<Node> Expression::variables() const {
    std::vector<Node> out;
    for (NodeId id : root_.graph().variables(root_.id())) {
        out.emplace_back(&root_.graph(), id);
    }
    return out;
}

// --- constructors -----------------------------------------------------------

namespace {

Graph &same_graph(Node a, Node b) {
    if (&a.graph() != &b.graph()) {
        throw UsageError("operands belong to different graphs");
    }
    return a.graph();
}

Node binary(OpTag tag, Node a, Node b) {
    return same_graph(a, b).make_op(tag, {a.id(), b.id()});
}

Node unary(OpTag tag, Node a) { return a.graph().make_op(tag, {a.id()}); }

Node make_qnode(Graph &graph, OpTag tag, Graph::QuantumOp q,
                const QuantumMachine &machine,
                const QubitAllocation &qubits, std::optional<Node> data) {
    if (q.vqc.n_qubits() > machine.options().max_qubits) {
        throw ResourceError("circuit exceeds the machine's qubit cap");
    }
    if (tag == OpTag::kQop && q.vqc.n_qubits() > qubits.size()) {
        throw ResourceError(std::to_string(q.vqc.n_qubits()) +
                            "-qubit circuit on an allocation of " +
                            std::to_string(qubits.size()));
    }
    q.sim = machine.options();
    std::vector<NodeId> children;
    for (const ParamRef &p : q.vqc.params()) {
        if (p.variable >= graph.size() ||
            graph.kind(p.variable) != NodeKind::kVariable) {
            throw UsageError("circuit parameter refers to node " +
                             std::to_string(p.variable) +
                             ", which is not a variable of this graph");
        }
        if (children.empty() || children.back() != p.variable) {
            children.push_back(p.variable);
        }
    }
    if (data) {
        if (&data->graph() != &graph ||
            data->kind() != NodeKind::kPlaceholder) {
            throw UsageError("circuit data must come from a placeholder of "
                             "this graph");
        }
        q.data = data->id();
        children.push_back(data->id());
    } else if (q.vqc.data_width() > 0) {
        throw UsageError("circuit encodes data but no placeholder was given");
    }
    return graph.make_quantum(
        tag, std::make_shared<const Graph::QuantumOp>(std::move(q)),
        std::move(children));
}

} // namespace

Node operator+(Node a, Node b) { return binary(OpTag::kAdd, a, b); }
Node operator-(Node a, Node b) { return binary(OpTag::kSub, a, b); }
Node operator*(Node a, Node b) { return binary(OpTag::kMul, a, b); }
Node operator/(Node a, Node b) { return binary(OpTag::kDiv, a, b); }
Node exp(Node a) { return unary(OpTag::kExp, a); }
Node log(Node a) { return unary(OpTag::kLog, a); }
Node dot(Node a, Node b) { return binary(OpTag::kDot, a, b); }
Node softmax(Node z) { return unary(OpTag::kSoftmax, z); }
Node cross_entropy(Node label, Node pred) {
    return binary(OpTag::kCrossEntropy, label, pred);
}
Node reduce_sum(Node a) { return unary(OpTag::kReduceSum, a); }
Node least_square(Node label, Node pred) {
    return binary(OpTag::kLeastSquare, label, pred);
}

Node qop(Graph &graph, VQC vqc, std::vector<PauliOperator> hams,
         const QuantumMachine &machine, const QubitAllocation &qubits,
         std::optional<Node> data) {
    if (hams.empty()) {
        throw ArgumentError("qop needs at least one Hamiltonian");
    }
    for (const auto &h : hams) {
        if (max_qubit(h) >= vqc.n_qubits()) {
            throw ArgumentError("Hamiltonian acts on qubit " +
                                std::to_string(max_qubit(h)) + " of a " +
                                std::to_string(vqc.n_qubits()) +
                                "-qubit circuit");
        }
    }
    Graph::QuantumOp q{std::move(vqc), std::move(hams), {}, {}, {}, {}};
    return make_qnode(graph, OpTag::kQop, std::move(q), machine, qubits, data);
}

Node qop_pmeasure(Graph &graph, VQC vqc, std::vector<std::size_t> components,
                  const QuantumMachine &machine,
                  const QubitAllocation &measured, std::optional<Node> data) {
    detail::check_measured(measured.qubits, vqc.n_qubits());
    const std::size_t limit = std::size_t(1) << measured.qubits.size();
    for (std::size_t c : components) {
        if (c >= limit) {
            throw ArgumentError("component label " + std::to_string(c) +
                                " out of range for " +
                                std::to_string(measured.qubits.size()) +
                                " measured qubits");
        }
    }
    Graph::QuantumOp q{std::move(vqc), {}, measured.qubits,
                       std::move(components), {}, {}};
    return make_qnode(graph, OpTag::kQopPmeasure, std::move(q), machine,
                      measured, data);
}

} // namespace vqnet
