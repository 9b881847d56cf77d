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

#include "qrisnet/channels/noise_model.hpp"

#include <stdexcept>

#include "qrisnet/kernels/kernels.hpp"

namespace qrisnet {

NoiseModel NoiseModel::make(double p, double q, double alpha, Gate u_qris) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("noise model p outside [0,1]");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("noise model q outside [0,1]");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("noise model alpha outside [0,1]");
    NoiseModel m;
    m.p = p;
    m.q = q;
    m.alpha = alpha;
    m.u_qris = std::move(u_qris);
    return m;
}

NoiseModel default_noise_model(int num_qubits, double p, double q,
                               double alpha) {
    return NoiseModel::make(p, q, alpha,
                            phase_rotation_unitary(num_qubits, kPi / 4.0));
}

void apply_link_noise_in_place(DensityMatrix& rho, double p, double q) {
    const QuantumChannel dep = depolarizing_channel(p);
    const QuantumChannel deph = dephasing_channel(q);
    for (int t = 0; t < rho.num_qubits(); ++t) {
        apply_local_channel_in_place(rho, t, dep);
        apply_local_channel_in_place(rho, t, deph);
    }
}

DensityMatrix effective_state(const DensityMatrix& rho0, const NoiseModel& m) {
    const double pr = m.p_reflected.value_or(m.p);
    const double qr = m.q_reflected.value_or(m.q);

    if (m.alpha >= 1.0) {
        DensityMatrix direct = rho0;
        apply_link_noise_in_place(direct, m.p, m.q);
        return direct;
    }

    DensityMatrix reflected = rho0;
    apply_gate_in_place(reflected, m.u_qris);
    apply_link_noise_in_place(reflected, pr, qr);

    if (m.alpha <= 0.0) return reflected;

    DensityMatrix direct = rho0;
    apply_link_noise_in_place(direct, m.p, m.q);

    auto& k = kern::active();
    k.scale(direct.mutable_elements().data(), direct.elements().size(),
            m.alpha);
    k.add_scaled(direct.mutable_elements().data(),
                 reflected.elements().data(), reflected.elements().size(),
                 1.0 - m.alpha);
    return direct;
}

}  // namespace qrisnet
