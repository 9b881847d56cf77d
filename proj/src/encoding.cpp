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

#include "qrisnet/encoding/encoding.hpp"

#include <cmath>
#include <stdexcept>

#include "qrisnet/core/types.hpp"

namespace qrisnet {
namespace {

bool power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_size(std::size_t v) {
    int n = 0;
    while (v > 1) {
        v >>= 1;
        ++n;
    }
    return n;
}

}  // namespace

ImageFeature normalize_image(const std::vector<double>& raw,
                             std::size_t target_dim, int h, int w, int c) {
    if (raw.empty()) throw std::invalid_argument("image vector is empty");
    if (!power_of_two(target_dim))
        throw std::invalid_argument("target_dim must be a power of two");
    for (double v : raw)
        if (!std::isfinite(v))
            throw std::invalid_argument("image vector has non-finite entries");

    std::vector<double> pooled(target_dim, 0.0);
    const std::size_t n = raw.size();
    if (n >= target_dim) {
        // Average-pool into target_dim contiguous buckets of near-equal size.
        for (std::size_t k = 0; k < target_dim; ++k) {
            const std::size_t lo = k * n / target_dim;
            const std::size_t hi = (k + 1) * n / target_dim;
            double acc = 0.0;
            for (std::size_t i = lo; i < hi; ++i) acc += raw[i];
            pooled[k] = acc / static_cast<double>(hi - lo);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) pooled[i] = raw[i];
    }

    double norm2 = 0.0;
    for (double v : pooled) norm2 += v * v;
    if (norm2 < 1e-24)
        throw std::invalid_argument(
            "degenerate image: zero norm after pooling, cannot normalize");
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : pooled) v *= inv;

    return ImageFeature{std::move(pooled), h, w, c};
}

ImageFeature normalize_image(const std::vector<double>& raw,
                             std::size_t target_dim) {
    return normalize_image(raw, target_dim, static_cast<int>(raw.size()), 1,
                           1);
}

double rate_to_theta(const RateObservation& obs) {
    if (!std::isfinite(obs.rate))
        throw std::invalid_argument("rate must be finite");
    if (!(obs.r_min < obs.r_max) || !std::isfinite(obs.r_min) ||
        !std::isfinite(obs.r_max))
        throw std::invalid_argument("rate bounds must satisfy r_min < r_max");
    double t = (obs.rate - obs.r_min) / (obs.r_max - obs.r_min);
    t = std::min(1.0, std::max(0.0, t));
    return kPi * t;
}

StateVector amplitude_encode_damped(const ImageFeature& feature, double gamma,
                                    double gamma_max) {
    if (!(gamma_max > 0.0 && gamma_max < 1.0))
        throw std::domain_error("gamma_max must lie in (0, 1)");
    if (!(gamma > 0.0 && gamma <= gamma_max))
        throw std::domain_error("gamma outside (0, gamma_max]");
    const std::size_t fdim = feature.values.size();
    if (!power_of_two(fdim) || fdim < 2)
        throw std::invalid_argument("feature size must be a power of two >= 2");

    double norm2 = 0.0;
    for (double v : feature.values) norm2 += v * v;
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("feature vector must be unit-norm");

    const int m = log2_size(fdim);
    std::vector<cplx> amps(2 * fdim, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < fdim; ++i)
        amps[i] = cplx(gamma * feature.values[i], 0.0);
    amps[fdim] = cplx(std::sqrt(1.0 - gamma * gamma), 0.0);
    return StateVector::from_amplitudes_unchecked(std::move(amps), m + 1);
}

StateVector encode_channel_state(double theta) {
    if (!(theta >= 0.0 && theta <= kPi))
        throw std::domain_error("theta outside [0, pi]");
    return StateVector::from_amplitudes_unchecked(
        {cplx(std::cos(theta / 2.0), 0.0), cplx(std::sin(theta / 2.0), 0.0)},
        1);
}

HybridInput hybrid_encode(const ImageFeature& feature,
                          const RateObservation& obs, double gamma,
                          double gamma_max) {
    const double theta = rate_to_theta(obs);
    StateVector image = amplitude_encode_damped(feature, gamma, gamma_max);
    StateVector channel = encode_channel_state(theta);
    StateVector state = tensor_product(image, channel);
    if (state.num_qubits() != kRegisterQubits)
        throw std::invalid_argument(
            "hybrid register must be six qubits (16-entry image feature)");
    return HybridInput{std::move(state), gamma, theta};
}

}  // namespace qrisnet
