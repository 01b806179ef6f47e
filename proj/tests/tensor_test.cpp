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

#include "vqnet/tensor.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace vqnet {
namespace {

Tensor random_tensor(std::mt19937_64 &rng, Eigen::Index r, Eigen::Index c) {
    Tensor t = Tensor::zeros(r, c);
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        t[i] = testing::uniform(rng, -10, 10);
    }
    return t;
}

void expect_near_rel(const Tensor &a, const Tensor &b, double rel) {
    ASSERT_TRUE(a.same_shape(b));
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double scale = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
        EXPECT_NEAR(a[i], b[i], rel * scale) << "entry " << i;
    }
}

TEST(Tensor, ScalarIsOneByOne) {
    const Tensor s(5.0);
    EXPECT_TRUE(s.is_scalar());
    EXPECT_EQ(s.rows(), 1);
    EXPECT_EQ(s.cols(), 1);
    EXPECT_EQ(s.item(), 5.0);
    EXPECT_THROW((void)Tensor::vector({1, 2}).item(), ShapeError);
}

TEST(Tensor, DataLengthMatchesExtents) {
    const Tensor m = Tensor::zeros(4, 3);
    EXPECT_EQ(m.size(), 12);
    EXPECT_THROW(Tensor::matrix({{1, 2}, {3}}), ShapeError);
}

TEST(Tensor, ElementwiseExamples) {
    const Tensor x = Tensor::vector({1, 2, 3});
    EXPECT_EQ(x - x, Tensor::vector({0, 0, 0}));
    EXPECT_EQ(Tensor::vector({1, 2}) * Tensor(2.0), Tensor::vector({2, 4}));
    EXPECT_EQ(Tensor(2.0) * Tensor::vector({1, 2}), Tensor::vector({2, 4}));
    EXPECT_EQ(Tensor::vector({6, 8}) / Tensor::vector({3, 2}),
              Tensor::vector({2, 4}));
}

TEST(Tensor, ElementwiseErrors) {
    EXPECT_THROW((void)(Tensor::vector({1, 2}) + Tensor::vector({1, 2, 3})),
                 ShapeError);
    EXPECT_THROW((void)(Tensor::vector({1, 2}) / Tensor::vector({1, 0})),
                 DomainError);
    EXPECT_THROW((void)(Tensor::zeros(2, 3) - Tensor::zeros(3, 2)),
                 ShapeError);
}

TEST(Tensor, MapExamples) {
    EXPECT_EQ(exp(Tensor::vector({0})).item(), 1.0);
    EXPECT_EQ(log(Tensor::vector({1})).item(), 0.0);
    EXPECT_NEAR(exp(Tensor::vector({1})).item(), 2.718281828459045, 1e-15);
    EXPECT_THROW((void)log(Tensor::vector({1, 0})), DomainError);
    EXPECT_THROW((void)log(Tensor::vector({-1})), DomainError);
}

TEST(Tensor, DotExamples) {
    const Tensor ab = Tensor::vector({0.25, -7.5});
    EXPECT_EQ(dot(Tensor::identity(2), ab), ab);
    const Tensor s = dot(Tensor::vector({1, 2, 3}), Tensor::vector({1, 1, 1}));
    EXPECT_TRUE(s.is_scalar());
    EXPECT_EQ(s.item(), 6.0);
    EXPECT_EQ(dot(Tensor::matrix({{1, 2}, {3, 4}}), Tensor::matrix({{5}, {6}})),
              Tensor::matrix({{17}, {39}}));
    EXPECT_THROW((void)dot(Tensor::zeros(2, 3), Tensor::zeros(2, 3)),
                 ShapeError);
    EXPECT_THROW((void)dot(Tensor::vector({1, 2}), Tensor::vector({1, 2, 3})),
                 ShapeError);
}

TEST(Tensor, ReduceSumExamples) {
    EXPECT_EQ(reduce_sum(Tensor::vector({1, 2, 3})).item(), 6.0);
    EXPECT_EQ(reduce_sum(Tensor(5.0)).item(), 5.0);
    EXPECT_EQ(reduce_sum(Tensor::matrix({{1, 1}, {1, 1}})).item(), 4.0);
}

TEST(TensorProperty, AddMulCommuteAndAssociate) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = static_cast<Eigen::Index>(1 + rng() % 5);
        const auto c = static_cast<Eigen::Index>(1 + rng() % 5);
        const Tensor a = random_tensor(rng, r, c);
        const Tensor b = random_tensor(rng, r, c);
        const Tensor d = random_tensor(rng, r, c);
        expect_near_rel(a + b, b + a, 1e-12);
        expect_near_rel(a * b, b * a, 1e-12);
        expect_near_rel((a + b) + d, a + (b + d), 1e-12);
        expect_near_rel((a * b) * d, a * (b * d), 1e-12);
    }
}

TEST(TensorProperty, IdentityDotIsExact) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<Eigen::Index>(1 + rng() % 8);
        const Tensor x = random_tensor(rng, n, 1 + static_cast<Eigen::Index>(rng() % 3));
        EXPECT_EQ(dot(Tensor::identity(n), x), x);
    }
}

TEST(TensorProperty, ReduceSumIsAdditive) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = static_cast<Eigen::Index>(1 + rng() % 6);
        const auto c = static_cast<Eigen::Index>(1 + rng() % 6);
        const Tensor a = random_tensor(rng, r, c);
        const Tensor b = random_tensor(rng, r, c);
        const double lhs = reduce_sum(a + b).item();
        const double rhs = reduce_sum(a).item() + reduce_sum(b).item();
        EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST(TensorProperty, FiniteInFiniteOut) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Tensor a = random_tensor(rng, 3, 3);
        const Tensor b = random_tensor(rng, 3, 3);
        for (const Tensor &t : {a + b, a - b, a * b, exp(a), dot(a, b)}) {
            EXPECT_TRUE(t.matrix().allFinite());
        }
    }
}

TEST(Tensor, FloatInstantiation) {
    using TensorF = BasicTensor<float>;
    const TensorF a = TensorF::vector({1.5f, 2.0f});
    EXPECT_FLOAT_EQ(reduce_sum(a * TensorF(2.0f)).item(), 7.0f);
}

} // namespace
} // namespace vqnet
