// Copyright 2026 The qrisnet developers.
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

#include "qrisnet/dataset/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrisnet/util/rng.hpp"

namespace qrisnet {
namespace {

constexpr int kDim = 16;

// Mean image patterns per class. Blocked and unblocked are separable blobs
// (even-heavy vs odd-heavy pixel patterns); absent sits between them and
// relies on its wide spread to stay ambiguous in image space.
const double kMeanAbsent[kDim] = {0.65, 0.5, 0.65, 0.5, 0.65, 0.5, 0.65, 0.5,
                                  0.65, 0.5, 0.65, 0.5, 0.65, 0.5, 0.65, 0.5};
const double kMeanBlocked[kDim] = {1.0, 0.1, 1.0, 0.1, 1.0, 0.1, 1.0, 0.1,
                                   1.0, 0.1, 1.0, 0.1, 1.0, 0.1, 1.0, 0.1};
const double kMeanUnblocked[kDim] = {0.1, 1.0, 0.1, 1.0, 0.1, 1.0, 0.1, 1.0,
                                     0.1, 1.0, 0.1, 1.0, 0.1, 1.0, 0.1, 1.0};

void check_params(const ClassParams& cp) {
    if (!(cp.sigma > 0.0) || !std::isfinite(cp.sigma))
        throw std::invalid_argument("class sigma must be > 0");
    if (!(cp.sigma_ambiguous > 0.0) || !std::isfinite(cp.sigma_ambiguous))
        throw std::invalid_argument("class sigma_ambiguous must be > 0");
    if (!(cp.r_min < cp.r_max))
        throw std::invalid_argument("rate bounds must satisfy r_min < r_max");
    for (const auto& w : cp.rate_windows) {
        if (!(w[0] >= 0.0 && w[0] < w[1] && w[1] <= 1.0))
            throw std::invalid_argument(
                "rate windows must be increasing sub-intervals of [0, 1]");
    }
}

Sample draw_sample(int label, const ClassParams& cp, Rng& rng) {
    const double* mean = nullptr;
    double sigma = cp.sigma;
    int window = 0;
    switch (label) {
        case -1:
            mean = kMeanAbsent;
            sigma = cp.sigma_ambiguous;
            window = 0;
            break;
        case 0:
            mean = kMeanBlocked;
            window = 1;
            break;
        default:
            mean = kMeanUnblocked;
            window = 2;
            break;
    }

    Sample s;
    s.label = label;
    s.image.resize(kDim);
    double norm2 = 0.0;
    for (int i = 0; i < kDim; ++i) {
        // Pixel intensities: floor at a small positive value. Also keeps the
        // vector away from all-zero degeneracy.
        s.image[i] = std::max(0.01, rng.normal(mean[i], sigma));
        norm2 += s.image[i] * s.image[i];
    }
    (void)norm2;
    const auto& w = cp.rate_windows[window];
    s.rate = cp.r_min + (cp.r_max - cp.r_min) * rng.uniform(w[0], w[1]);
    s.alpha = rng.uniform();
    return s;
}

}  // namespace

std::pair<std::vector<Sample>, DatasetMeta> generate(int n, std::uint64_t seed,
                                                     const ClassParams& params) {
    if (n < 3) throw std::invalid_argument("dataset needs at least 3 samples");
    check_params(params);

    Rng rng(derive_seed(seed, /*tag=*/0x67656eULL));

    // Balanced labels within +-1, remainder spread in label order (-1, 0, 1).
    const int base = n / 3;
    const int rem = n % 3;
    std::array<int, 3> counts{base + (rem > 0 ? 1 : 0),
                              base + (rem > 1 ? 1 : 0), base};
    static const int kLabels[3] = {-1, 0, 1};

    std::vector<Sample> samples;
    samples.reserve(n);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < counts[c]; ++i)
            samples.push_back(draw_sample(kLabels[c], params, rng));
    rng.shuffle(samples);

    DatasetMeta meta;
    meta.seed = seed;
    meta.r_min = params.r_min;
    meta.r_max = params.r_max;
    meta.feature_dim = kDim;
    meta.n_total = n;
    meta.class_counts = counts;
    meta.sigma = params.sigma;
    meta.sigma_ambiguous = params.sigma_ambiguous;
    return {std::move(samples), meta};
}

std::pair<std::vector<Sample>, std::vector<Sample>> split(
    const std::vector<Sample>& samples, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0))
        throw std::invalid_argument("split fraction must lie in (0, 1)");

    // Stratified: shuffle within each class, cut each class by the fraction
    // (largest-remainder rounding toward the overall train count), then
    // shuffle each side.
    std::array<std::vector<std::size_t>, 3> by_class;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        switch (samples[i].label) {
            case -1:
                by_class[0].push_back(i);
                break;
            case 0:
                by_class[1].push_back(i);
                break;
            case 1:
                by_class[2].push_back(i);
                break;
            default:
                throw std::invalid_argument("sample label must be -1, 0 or 1");
        }
    }

    const int total = static_cast<int>(samples.size());
    const int want_train =
        static_cast<int>(std::lround(fraction * static_cast<double>(total)));
    if (want_train <= 0 || want_train >= total)
        throw std::invalid_argument("split would leave an empty side");

    Rng rng(derive_seed(seed, /*tag=*/0x73706c6974ULL));
    for (auto& idx : by_class) rng.shuffle(idx);

    std::array<int, 3> take{};
    std::array<double, 3> frac_part{};
    int assigned = 0;
    for (int c = 0; c < 3; ++c) {
        const double exact =
            fraction * static_cast<double>(by_class[c].size());
        take[c] = static_cast<int>(std::floor(exact));
        frac_part[c] = exact - std::floor(exact);
        assigned += take[c];
    }
    // Hand out the remaining train slots by largest fractional part.
    while (assigned < want_train) {
        int best = -1;
        double best_frac = -1.0;
        for (int c = 0; c < 3; ++c) {
            if (take[c] >= static_cast<int>(by_class[c].size())) continue;
            if (frac_part[c] > best_frac) {
                best_frac = frac_part[c];
                best = c;
            }
        }
        if (best < 0) break;
        take[best] += 1;
        frac_part[best] = -1.0;
        ++assigned;
    }

    std::vector<Sample> train, test;
    train.reserve(want_train);
    test.reserve(total - want_train);
    for (int c = 0; c < 3; ++c) {
        for (std::size_t k = 0; k < by_class[c].size(); ++k) {
            if (static_cast<int>(k) < take[c])
                train.push_back(samples[by_class[c][k]]);
            else
                test.push_back(samples[by_class[c][k]]);
        }
    }
    if (train.empty() || test.empty())
        throw std::invalid_argument("split would leave an empty side");
    rng.shuffle(train);
    rng.shuffle(test);
    return {std::move(train), std::move(test)};
}

}  // namespace qrisnet
