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

#include <optional>

#include "qrisnet/channels/channel.hpp"
#include "qrisnet/core/gates.hpp"

namespace qrisnet {

/// Two-path propagation model: the state reaches the receiver directly with
/// weight alpha, or reflected through the programmable surface (unitary
/// u_qris) with weight 1-alpha. Each path is a dephasing-after-depolarizing
/// channel applied independently to every register qubit.
struct NoiseModel {
    double p = 0.0;      // depolarization probability
    double q = 0.0;      // dephasing probability
    double alpha = 1.0;  // direct-path weight
    Gate u_qris;         // reflected-path unitary (full register)

    // Optional distinct noise on the reflected path; defaults to (p, q).
    std::optional<double> p_reflected;
    std::optional<double> q_reflected;

    static NoiseModel make(double p, double q, double alpha, Gate u_qris);
};

/// Convenience: per-qubit R_z(pi/4) surface unitary and equal path noise.
NoiseModel default_noise_model(int num_qubits, double p, double q,
                               double alpha);

/// alpha * E_direct(rho0) + (1-alpha) * E_reflected(U rho0 U†), with each
/// branch channel = dephasing ∘ depolarizing applied per qubit.
DensityMatrix effective_state(const DensityMatrix& rho0, const NoiseModel& m);

/// In-place single branch: per-qubit depolarizing then dephasing.
void apply_link_noise_in_place(DensityMatrix& rho, double p, double q);

}  // namespace qrisnet
