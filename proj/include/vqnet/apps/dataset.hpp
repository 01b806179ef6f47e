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
#include <optional>
#include <string>
#include <vector>

#include "vqnet/tensor.hpp"

namespace vqnet::apps {

/// Rows are samples. Labels are one-hot (classification) or a single real
/// column (regression).
struct Dataset {
    Tensor features;
    Tensor labels;

    [[nodiscard]] Eigen::Index size() const noexcept { return features.rows(); }
    /// Throws DataError when row counts differ or a one-hot row does not sum
    /// to one.
    void validate(bool one_hot) const;
};

struct Split {
    Dataset train;
    Dataset test;
};

/// Seeded shuffle, then the first `train_fraction` of rows go to train.
[[nodiscard]] Split split_dataset(const Dataset &data, double train_fraction,
                                  std::uint64_t seed);

/// Per-column affine map taking the training minimum to `lo` and maximum to
/// `hi`; constant columns map to `lo`. Test rows use the same map and are
/// clamped into [lo, hi].
struct MinMaxScaler {
    std::vector<double> min;
    std::vector<double> max;
    double lo = 0.0;
    double hi = 1.0;

    [[nodiscard]] static MinMaxScaler fit(const Tensor &features, double lo,
                                          double hi);
    [[nodiscard]] Tensor transform(const Tensor &features) const;
};

/// Fits on train, transforms both halves.
void scale_features(Split &split, double lo, double hi);

/**
 * Two features uniform in [0, 1); class 1 iff the first exceeds 0.5, with
 * samples inside a 0.05 margin of the boundary rejected. Features are raw
 * (unscaled); the first n_train rows form the training split.
 */
[[nodiscard]] Split make_separable(int n_train, int n_test, std::uint64_t seed);

/// Index of the largest label column per row.
[[nodiscard]] std::vector<int> class_indices(const Tensor &one_hot);

} // namespace vqnet::apps
