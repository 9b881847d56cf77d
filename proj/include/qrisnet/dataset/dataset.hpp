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

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace qrisnet {

/// One labeled observation: raw image vector (pre-normalization), observed
/// link rate, ternary label (-1 absent, 0 blocked, 1 unblocked) and the
/// sample's direct-path mixture weight.
struct Sample {
    std::vector<double> image;
    double rate = 0.0;
    int label = 0;
    double alpha = 0.5;
};

struct DatasetMeta {
    int version = 1;
    std::uint64_t seed = 0;
    double r_min = 0.0;
    double r_max = 8.0;
    int feature_dim = 16;
    int n_total = 0;
    double split_fraction = 0.7;
    std::array<int, 3> class_counts{};  // labels (-1, 0, 1)
    double sigma = 0.0;
    double sigma_ambiguous = 0.0;
};

/// Generator knobs. Class structure is deliberately split across the two
/// modalities: the absent class is only clean in the rate (its image is
/// ambiguous), while blocked/unblocked rates overlap and are separated by
/// the image blobs.
struct ClassParams {
    double sigma = 0.05;            // blob std-dev, blocked/unblocked images
    double sigma_ambiguous = 0.45;  // absent-class image spread
    // Normalized per-class rate windows in label order (-1, 0, 1). Blocked
    // and unblocked overlap a little, so the rate alone cannot fully
    // separate them; the image patterns close that gap.
    std::array<std::array<double, 2>, 3> rate_windows{
        {{0.00, 0.05}, {0.30, 0.64}, {0.56, 0.95}}};
    double r_min = 0.0;
    double r_max = 8.0;
};

/// Balanced three-class synthetic set (counts within +-1), deterministic for
/// a given seed. n >= 3; invalid class parameters are rejected.
std::pair<std::vector<Sample>, DatasetMeta> generate(
    int n, std::uint64_t seed, const ClassParams& params = {});

/// Stratified split: per-class seeded shuffle, per-class fraction, then a
/// seeded shuffle of each side. Keeps class proportions within +-1 sample of
/// exact per class. Throws when either side would be empty.
std::pair<std::vector<Sample>, std::vector<Sample>> split(
    const std::vector<Sample>& samples, double fraction, std::uint64_t seed);

}  // namespace qrisnet
