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

#include "vqnet/apps/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "vqnet/apps/random.hpp"
#include "vqnet/error.hpp"

namespace vqnet::apps {

void Dataset::validate(bool one_hot) const {
    if (features.rows() != labels.rows()) {
        throw DataError("dataset has " + std::to_string(features.rows()) +
                        " feature rows but " + std::to_string(labels.rows()) +
                        " label rows");
    }
    if (!one_hot) {
        return;
    }
    for (Eigen::Index r = 0; r < labels.rows(); ++r) {
        double sum = 0.0;
        for (Eigen::Index c = 0; c < labels.cols(); ++c) {
            const double v = labels(r, c);
            if (v != 0.0 && v != 1.0) {
                throw DataError("label row " + std::to_string(r) +
                                " is not one-hot");
            }
            sum += v;
        }
        if (sum != 1.0) {
            throw DataError("label row " + std::to_string(r) +
                            " is not one-hot");
        }
    }
}

namespace {

Tensor take_rows(const Tensor &t, const std::vector<Eigen::Index> &rows) {
    Tensor::Storage out(static_cast<Eigen::Index>(rows.size()), t.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.row(static_cast<Eigen::Index>(i)) = t.matrix().row(rows[i]);
    }
    return Tensor(out);
}

} // namespace

Split split_dataset(const Dataset &data, double train_fraction,
                    std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw ArgumentError("train fraction must lie in (0, 1)");
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(data.size()));
    std::iota(order.begin(), order.end(), Eigen::Index(0));
    // Fisher-Yates with the portable uniform draw.
    std::mt19937_64 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(
            uniform(rng, 0.0, static_cast<double>(i)));
        std::swap(order[i - 1], order[std::min(j, i - 1)]);
    }
    const auto n_train = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(order.size())));
    if (n_train == 0 || n_train == order.size()) {
        throw DataError("split leaves an empty half");
    }
    const std::vector<Eigen::Index> train(order.begin(),
                                          order.begin() + n_train);
    const std::vector<Eigen::Index> test(order.begin() + n_train, order.end());
    return {{take_rows(data.features, train), take_rows(data.labels, train)},
            {take_rows(data.features, test), take_rows(data.labels, test)}};
}

MinMaxScaler MinMaxScaler::fit(const Tensor &features, double lo, double hi) {
    if (features.rows() < 1) {
        throw DataError("cannot fit a scaler on an empty dataset");
    }
    if (!(lo < hi)) {
        throw ArgumentError("scaling range needs lo < hi");
    }
    MinMaxScaler s;
    s.lo = lo;
    s.hi = hi;
    for (Eigen::Index c = 0; c < features.cols(); ++c) {
        s.min.push_back(features.matrix().col(c).minCoeff());
        s.max.push_back(features.matrix().col(c).maxCoeff());
    }
    return s;
}

Tensor MinMaxScaler::transform(const Tensor &features) const {
    if (static_cast<std::size_t>(features.cols()) != min.size()) {
        throw ShapeError("scaler fitted on " + std::to_string(min.size()) +
                         " columns, got " + features.shape_string());
    }
    Tensor out = features;
    for (Eigen::Index c = 0; c < features.cols(); ++c) {
        const double a = min[static_cast<std::size_t>(c)];
        const double span = max[static_cast<std::size_t>(c)] - a;
        for (Eigen::Index r = 0; r < features.rows(); ++r) {
            const double t = span > 0 ? (features(r, c) - a) / span : 0.0;
            out(r, c) = std::clamp(lo + (hi - lo) * t, lo, hi);
        }
    }
    return out;
}

void scale_features(Split &split, double lo, double hi) {
    const auto s = MinMaxScaler::fit(split.train.features, lo, hi);
    split.train.features = s.transform(split.train.features);
    split.test.features = s.transform(split.test.features);
}

Split make_separable(int n_train, int n_test, std::uint64_t seed) {
    if (n_train < 1 || n_test < 1) {
        throw ArgumentError("dataset sizes must be positive");
    }
    std::mt19937_64 rng(seed);
    auto draw = [&](int n) {
        Dataset d{Tensor::zeros(n, 2), Tensor::zeros(n, 2)};
        for (Eigen::Index r = 0; r < n;) {
            const double a = uniform(rng, 0.0, 1.0);
            const double b = uniform(rng, 0.0, 1.0);
            if (std::abs(a - 0.5) < 0.05) {
                continue;
            }
            d.features(r, 0) = a;
            d.features(r, 1) = b;
            d.labels(r, a > 0.5 ? 1 : 0) = 1.0;
            ++r;
        }
        return d;
    };
    Split s;
    s.train = draw(n_train);
    s.test = draw(n_test);
    return s;
}

std::vector<int> class_indices(const Tensor &one_hot) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(one_hot.rows()));
    for (Eigen::Index r = 0; r < one_hot.rows(); ++r) {
        Eigen::Index best = 0;
        one_hot.matrix().row(r).maxCoeff(&best);
        out.push_back(static_cast<int>(best));
    }
    return out;
}

} // namespace vqnet::apps
