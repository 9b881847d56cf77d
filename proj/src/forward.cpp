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

#include "qrisnet/vqc/forward.hpp"

#include <stdexcept>

#include "qrisnet/core/fidelity.hpp"
#include "qrisnet/core/measurement.hpp"
#include "qrisnet/kernels/kernels.hpp"

namespace qrisnet {
namespace {

constexpr double kTripleMassFloor = 1e-9;

std::array<double, 3> renormalize_triple(const std::array<double, 4>& m) {
    const double mass = m[0] + m[1] + m[2];
    if (mass < kTripleMassFloor)
        return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return {m[0] / mass, m[1] / mass, m[2] / mass};
}

void check_register(const HybridInput& input, const Ansatz& ansatz) {
    if (input.state.num_qubits() != ansatz.num_qubits)
        throw std::invalid_argument(
            "input register does not match the circuit");
}

// The ideal trajectory is the zero-noise limit of the same propagation:
// both routing branches survive, only the link noise is switched off. The
// circuit then evolves the direct and reflected branch states; their
// alpha-mixture is rho_ideal (rank <= 2).
struct IdealBranches {
    StateVector direct;
    StateVector reflected;
    double alpha;
};

IdealBranches ideal_branches(const HybridInput& input, const VqcParams& params,
                             const NoiseModel& noise, const Ansatz& ansatz) {
    IdealBranches b{input.state, input.state, noise.alpha};
    if (noise.alpha < 1.0) apply_gate_in_place(b.reflected, noise.u_qris);
    apply_ansatz(b.direct, ansatz, params.thetas);
    if (noise.alpha < 1.0)
        apply_ansatz(b.reflected, ansatz, params.thetas);
    else
        b.reflected = b.direct;
    return b;
}

DensityMatrix mixture_density(const IdealBranches& b) {
    DensityMatrix direct = DensityMatrix::from_state(b.direct);
    if (b.alpha >= 1.0) return direct;
    const DensityMatrix reflected = DensityMatrix::from_state(b.reflected);
    auto& k = kern::active();
    k.scale(direct.mutable_elements().data(), direct.elements().size(),
            b.alpha);
    k.add_scaled(direct.mutable_elements().data(),
                 reflected.elements().data(), reflected.elements().size(),
                 1.0 - b.alpha);
    return direct;
}

}  // namespace

std::array<double, 4> readout_masses(const DensityMatrix& rho) {
    const int n = rho.num_qubits();
    const std::vector<double> marg = measure_probabilities(rho, {n - 2, n - 1});
    return {marg[0], marg[1], marg[2], marg[3]};
}

std::array<double, 3> class_readout(const DensityMatrix& rho) {
    return renormalize_triple(readout_masses(rho));
}

ForwardLite forward_lite(const HybridInput& input, const VqcParams& params,
                         const NoiseModel& noise, const Ansatz& ansatz) {
    check_register(input, ansatz);

    DensityMatrix noisy = effective_state(DensityMatrix::from_state(input.state),
                                          noise);
    apply_ansatz(noisy, ansatz, params.thetas);

    const IdealBranches ib = ideal_branches(input, params, noise, ansatz);

    ForwardLite out;
    out.masses = readout_masses(noisy);
    out.probs = renormalize_triple(out.masses);
    out.fidelity =
        fidelity_with_mixture2(ib.direct, ib.reflected, ib.alpha, noisy);
    return out;
}

ForwardResult forward(const HybridInput& input, const VqcParams& params,
                      const NoiseModel& noise, const Ansatz& ansatz) {
    check_register(input, ansatz);

    DensityMatrix noisy = effective_state(DensityMatrix::from_state(input.state),
                                          noise);
    apply_ansatz(noisy, ansatz, params.thetas);

    const IdealBranches ib = ideal_branches(input, params, noise, ansatz);

    ForwardResult out{class_readout(noisy), mixture_density(ib),
                      std::move(noisy), 0.0};
    out.fidelity = fidelity_with_mixture2(ib.direct, ib.reflected, ib.alpha,
                                          out.rho_noisy);
    return out;
}

}  // namespace qrisnet
