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

#include <cstddef>
#include <vector>

#include "qrisnet/core/statevector.hpp"

namespace qrisnet {

inline constexpr double kDefaultGammaMax = 0.85;
inline constexpr int kFeatureDim = 16;  // image amplitudes per sample
inline constexpr int kRegisterQubits = 6;

/// Unit-norm flattened image vector (pre-damping).
struct ImageFeature {
    std::vector<double> values;
    int src_h = 0, src_w = 0, src_c = 0;
};

/// Pools (or zero-pads) a raw vector to target_dim entries and normalizes to
/// unit Euclidean norm. target_dim must be a power of two. Throws on empty,
/// all-zero, or pooling-cancelled input (nothing to normalize).
ImageFeature normalize_image(const std::vector<double>& raw,
                             std::size_t target_dim);
ImageFeature normalize_image(const std::vector<double>& raw,
                             std::size_t target_dim, int h, int w, int c);

struct RateObservation {
    double rate = 0.0;
    double r_min = 0.0;
    double r_max = 1.0;
};

/// theta = pi * clamp((rate - r_min) / (r_max - r_min), 0, 1).
/// Throws std::invalid_argument on non-finite rate or bad bounds.
double rate_to_theta(const RateObservation& obs);

/// Damped amplitude encoding. For a unit feature vector of 2^m entries, the
/// (m+1)-qubit output carries gamma * x_i on the first 2^m amplitudes and the
/// residual sqrt(1 - gamma^2) on the reserved sink index 2^m. Damping trades
/// feature amplitude against probability parked in the noise-immune sink
/// slot. Throws std::domain_error for gamma outside (0, gamma_max].
StateVector amplitude_encode_damped(const ImageFeature& feature, double gamma,
                                    double gamma_max = kDefaultGammaMax);

/// R_y(theta)|0> = (cos(theta/2), sin(theta/2)); theta must lie in [0, pi].
StateVector encode_channel_state(double theta);

/// Composed six-qubit input with its encoding provenance.
struct HybridInput {
    StateVector state;
    double gamma_used = 0.0;
    double theta_used = 0.0;
};

/// amplitude_encode_damped(feature) ⊗ encode_channel_state(rate_to_theta).
/// The composed register must come out at six qubits (16-entry feature).
HybridInput hybrid_encode(const ImageFeature& feature,
                          const RateObservation& obs, double gamma,
                          double gamma_max = kDefaultGammaMax);

}  // namespace qrisnet
