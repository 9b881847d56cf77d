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

#include "qrisnet/vqc/ansatz.hpp"

#include <cmath>
#include <stdexcept>

#include "qrisnet/core/gates.hpp"

namespace qrisnet {
namespace {

void rotation_matrices(double ry_theta, double rz_theta, cplx ry[4],
                       cplx rz[4]) {
    const double c = std::cos(ry_theta / 2.0);
    const double s = std::sin(ry_theta / 2.0);
    ry[0] = cplx(c, 0);
    ry[1] = cplx(-s, 0);
    ry[2] = cplx(s, 0);
    ry[3] = cplx(c, 0);
    rz[0] = std::exp(cplx(0.0, -rz_theta / 2.0));
    rz[1] = cplx(0, 0);
    rz[2] = cplx(0, 0);
    rz[3] = std::exp(cplx(0.0, rz_theta / 2.0));
}

template <typename State>
void apply_layers(State& state, const Ansatz& a,
                  std::span<const double> thetas) {
    if (static_cast<int>(thetas.size()) != a.param_count())
        throw std::invalid_argument("ansatz parameter count mismatch");
    if (state.num_qubits() != a.num_qubits)
        throw std::invalid_argument("ansatz register size mismatch");
    cplx ry[4], rz[4];
    for (int layer = 0; layer < a.num_layers; ++layer) {
        for (int qb = 0; qb < a.num_qubits; ++qb) {
            rotation_matrices(thetas[ry_param_index(a, layer, qb)],
                              thetas[rz_param_index(a, layer, qb)], ry, rz);
            apply_1q_in_place(state, qb, ry);
            apply_1q_in_place(state, qb, rz);
        }
        for (int qb = 0; qb < a.num_qubits; ++qb)
            apply_cnot_in_place(state, qb, (qb + 1) % a.num_qubits);
    }
}

}  // namespace

Ansatz Ansatz::make(int num_layers) {
    if (num_layers < 1)
        throw std::invalid_argument("ansatz needs at least one layer");
    Ansatz a;
    a.num_layers = num_layers;
    return a;
}

void apply_ansatz(DensityMatrix& rho, const Ansatz& a,
                  std::span<const double> thetas) {
    apply_layers(rho, a, thetas);
}

void apply_ansatz(StateVector& psi, const Ansatz& a,
                  std::span<const double> thetas) {
    apply_layers(psi, a, thetas);
}

}  // namespace qrisnet
