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
#include <vector>

#include "qrisnet/channels/noise_model.hpp"
#include "qrisnet/core/density_matrix.hpp"
#include "qrisnet/core/statevector.hpp"
#include "qrisnet/encoding/encoding.hpp"
#include "qrisnet/vqc/ansatz.hpp"

namespace qrisnet {

/// Trainable state of the classifier: circuit angles plus the encoding
/// damping coefficient.
struct VqcParams {
    double gamma = kDefaultGammaMax;
    std::vector<double> thetas;
};

struct ForwardResult {
    std::array<double, 3> probs{};  // classes (-1, 0, 1)
    DensityMatrix rho_ideal;
    DensityMatrix rho_noisy;
    double fidelity = 0.0;
};

/// Raw marginal masses of readout qubits (4, 5): outcomes 00, 01, 10, 11.
std::array<double, 4> readout_masses(const DensityMatrix& rho);

/// Three-class readout: outcomes {00, 01, 10} of the last two qubits,
/// renormalized over the triple; uniform fallback when the triple mass
/// vanishes (< 1e-9). Order maps to labels (-1, 0, 1).
std::array<double, 3> class_readout(const DensityMatrix& rho);

/// Full pass: ideal path evolves the clean input under the circuit; noisy
/// path sends the input through effective_state first, then the identical
/// circuit. probs come from the noisy state; fidelity compares the two.
ForwardResult forward(const HybridInput& input, const VqcParams& params,
                      const NoiseModel& noise, const Ansatz& ansatz);

/// Lean variant for inner loops; skips materializing the full result.
struct ForwardLite {
    std::array<double, 4> masses{};
    std::array<double, 3> probs{};
    double fidelity = 0.0;
};
ForwardLite forward_lite(const HybridInput& input, const VqcParams& params,
                         const NoiseModel& noise, const Ansatz& ansatz);

}  // namespace qrisnet
