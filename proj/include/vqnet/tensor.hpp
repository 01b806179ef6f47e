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

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "vqnet/error.hpp"

namespace vqnet {

/**
 * Dense real tensor of rank at most two.
 *
 * A scalar is stored as a 1x1 matrix and a vector as an n x 1 column. The
 * storage is row-major so that row r of a batched value is contiguous.
 * Tensors are plain values: every operation returns a new tensor.
 */
template <typename Scalar> class BasicTensor {
  public:
    using Storage =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    BasicTensor() : data_(1, 1) { data_(0, 0) = Scalar(0); }

    /// Scalar tensor.
    BasicTensor(Scalar value) : data_(1, 1) { data_(0, 0) = value; } // NOLINT

    template <typename Derived>
    explicit BasicTensor(const Eigen::MatrixBase<Derived> &m) : data_(m) {}

    [[nodiscard]] static BasicTensor zeros(Eigen::Index rows,
                                           Eigen::Index cols = 1) {
        return BasicTensor(Storage::Zero(rows, cols));
    }
    [[nodiscard]] static BasicTensor constant(Eigen::Index rows,
                                              Eigen::Index cols, Scalar v) {
        return BasicTensor(Storage::Constant(rows, cols, v));
    }
    [[nodiscard]] static BasicTensor identity(Eigen::Index n) {
        return BasicTensor(Storage::Identity(n, n));
    }
    /// Column vector from a list of entries.
    [[nodiscard]] static BasicTensor vector(std::initializer_list<Scalar> v) {
        Storage s(static_cast<Eigen::Index>(v.size()), 1);
        Eigen::Index i = 0;
        for (Scalar x : v) {
            s(i++, 0) = x;
        }
        return BasicTensor(std::move(s));
    }
    /// Matrix from nested row lists; rows must have equal length.
    [[nodiscard]] static BasicTensor
    matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
        const auto n_rows = static_cast<Eigen::Index>(rows.size());
        const auto n_cols =
            n_rows == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
        Storage s(n_rows, n_cols);
        Eigen::Index r = 0;
        for (const auto &row : rows) {
            if (static_cast<Eigen::Index>(row.size()) != n_cols) {
                throw ShapeError("ragged matrix literal");
            }
            Eigen::Index c = 0;
            for (Scalar x : row) {
                s(r, c++) = x;
            }
            ++r;
        }
        return BasicTensor(std::move(s));
    }

    [[nodiscard]] Eigen::Index rows() const noexcept { return data_.rows(); }
    [[nodiscard]] Eigen::Index cols() const noexcept { return data_.cols(); }
    [[nodiscard]] Eigen::Index size() const noexcept { return data_.size(); }
    [[nodiscard]] bool is_scalar() const noexcept {
        return data_.rows() == 1 && data_.cols() == 1;
    }
    [[nodiscard]] bool is_column() const noexcept { return data_.cols() == 1; }
    [[nodiscard]] bool same_shape(const BasicTensor &o) const noexcept {
        return rows() == o.rows() && cols() == o.cols();
    }

    [[nodiscard]] Scalar operator()(Eigen::Index r, Eigen::Index c) const {
        return data_(r, c);
    }
    [[nodiscard]] Scalar &operator()(Eigen::Index r, Eigen::Index c) {
        return data_(r, c);
    }
    /// Row-major flat access.
    [[nodiscard]] Scalar operator[](Eigen::Index i) const {
        return data_.data()[i];
    }
    [[nodiscard]] Scalar &operator[](Eigen::Index i) { return data_.data()[i]; }

    /// Value of a 1x1 tensor.
    [[nodiscard]] Scalar item() const {
        if (!is_scalar()) {
            throw ShapeError("item() on a " + shape_string() + " tensor");
        }
        return data_(0, 0);
    }

    [[nodiscard]] const Storage &matrix() const noexcept { return data_; }
    [[nodiscard]] Storage &matrix() noexcept { return data_; }

    [[nodiscard]] std::string shape_string() const {
        return "(" + std::to_string(rows()) + "," + std::to_string(cols()) +
               ")";
    }

    friend bool operator==(const BasicTensor &a, const BasicTensor &b) {
        return a.same_shape(b) && a.data_ == b.data_;
    }

  private:
    Storage data_;
};

using Tensor = BasicTensor<double>;

enum class Elementwise { kAdd, kSub, kMul, kDiv };
enum class Transcendental { kExp, kLog };

namespace detail {

template <typename Scalar>
void require_broadcastable(const BasicTensor<Scalar> &a,
                           const BasicTensor<Scalar> &b, const char *op) {
    if (!a.same_shape(b) && !a.is_scalar() && !b.is_scalar()) {
        throw ShapeError(std::string(op) + ": shapes " + a.shape_string() +
                         " and " + b.shape_string() + " do not conform");
    }
}

} // namespace detail

/// Entrywise binary operation. A scalar operand is broadcast to the shape of
/// the other one.
template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> elementwise(const BasicTensor<Scalar> &a,
                                              const BasicTensor<Scalar> &b,
                                              Elementwise kind) {
    detail::require_broadcastable(a, b, "elementwise");
    if (kind == Elementwise::kDiv && (b.matrix().array() == Scalar(0)).any()) {
        throw DomainError("elementwise: division by zero");
    }
    const bool a_wide = !a.is_scalar() || b.is_scalar();
    const Eigen::Index rows = a_wide ? a.rows() : b.rows();
    const Eigen::Index cols = a_wide ? a.cols() : b.cols();
    auto expand = [&](const BasicTensor<Scalar> &t) {
        return t.is_scalar() && (rows != 1 || cols != 1)
                   ? BasicTensor<Scalar>::constant(rows, cols, t.item())
                   : t;
    };
    const auto lhs = expand(a);
    const auto rhs = expand(b);
    const auto &x = lhs.matrix().array();
    const auto &y = rhs.matrix().array();
    switch (kind) {
    case Elementwise::kAdd:
        return BasicTensor<Scalar>((x + y).matrix());
    case Elementwise::kSub:
        return BasicTensor<Scalar>((x - y).matrix());
    case Elementwise::kMul:
        return BasicTensor<Scalar>((x * y).matrix());
    case Elementwise::kDiv:
        return BasicTensor<Scalar>((x / y).matrix());
    }
    throw ArgumentError("elementwise: unknown kind");
}

template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> map(const BasicTensor<Scalar> &a,
                                      Transcendental kind) {
    if (kind == Transcendental::kLog) {
        if ((a.matrix().array() <= Scalar(0)).any()) {
            throw DomainError("log: non-positive argument");
        }
        return BasicTensor<Scalar>(a.matrix().array().log().matrix());
    }
    return BasicTensor<Scalar>(a.matrix().array().exp().matrix());
}

template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> operator+(const BasicTensor<Scalar> &a,
                                            const BasicTensor<Scalar> &b) {
    return elementwise(a, b, Elementwise::kAdd);
}
template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> operator-(const BasicTensor<Scalar> &a,
                                            const BasicTensor<Scalar> &b) {
    return elementwise(a, b, Elementwise::kSub);
}
template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> operator*(const BasicTensor<Scalar> &a,
                                            const BasicTensor<Scalar> &b) {
    return elementwise(a, b, Elementwise::kMul);
}
template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> operator/(const BasicTensor<Scalar> &a,
                                            const BasicTensor<Scalar> &b) {
    return elementwise(a, b, Elementwise::kDiv);
}
template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> operator-(const BasicTensor<Scalar> &a) {
    return BasicTensor<Scalar>((-a.matrix()).eval());
}

template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> exp(const BasicTensor<Scalar> &a) {
    return map(a, Transcendental::kExp);
}
template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> log(const BasicTensor<Scalar> &a) {
    return map(a, Transcendental::kLog);
}

/// True when dot(a, b) is the inner product of two equal-length columns
/// rather than a matrix product.
template <typename Scalar>
[[nodiscard]] bool is_inner_product(const BasicTensor<Scalar> &a,
                                    const BasicTensor<Scalar> &b) {
    return a.cols() != b.rows() && a.is_column() && b.is_column() &&
           a.rows() == b.rows();
}

/**
 * Matrix product when the inner extents conform (matrix x matrix,
 * matrix x vector); otherwise two equal-length column vectors give their
 * scalar inner product.
 */
template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> dot(const BasicTensor<Scalar> &a,
                                      const BasicTensor<Scalar> &b) {
    if (a.cols() == b.rows()) {
        return BasicTensor<Scalar>((a.matrix() * b.matrix()).eval());
    }
    if (is_inner_product(a, b)) {
        return BasicTensor<Scalar>(
            a.matrix().col(0).dot(b.matrix().col(0)));
    }
    throw ShapeError("dot: shapes " + a.shape_string() + " and " +
                     b.shape_string() + " do not conform");
}

template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> reduce_sum(const BasicTensor<Scalar> &a) {
    return BasicTensor<Scalar>(a.matrix().sum());
}

template <typename Scalar>
[[nodiscard]] BasicTensor<Scalar> transpose(const BasicTensor<Scalar> &a) {
    return BasicTensor<Scalar>(a.matrix().transpose().eval());
}

} // namespace vqnet
