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

#include "qrisnet/training/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace qrisnet {

AdamState AdamState::init(int num_thetas) {
    AdamState s;
    s.m.assign(num_thetas, 0.0);
    s.v.assign(num_thetas, 0.0);
    return s;
}

void adam_step(VqcParams& params, const std::vector<double>& theta_grads,
               double gamma_gradient, AdamState& state, const AdamConfig& cfg) {
    const std::size_t n = params.thetas.size();
    if (theta_grads.size() != n || state.m.size() != n || state.v.size() != n)
        throw std::invalid_argument("adam_step dimension mismatch");

    state.step += 1;
    const double t = static_cast<double>(state.step);
    const double bc1 = 1.0 - std::pow(cfg.beta1, t);
    const double bc2 = 1.0 - std::pow(cfg.beta2, t);

    for (std::size_t i = 0; i < n; ++i) {
        const double g = theta_grads[i] + cfg.weight_decay * params.thetas[i];
        state.m[i] = cfg.beta1 * state.m[i] + (1.0 - cfg.beta1) * g;
        state.v[i] = cfg.beta2 * state.v[i] + (1.0 - cfg.beta2) * g * g;
        const double mhat = state.m[i] / bc1;
        const double vhat = state.v[i] / bc2;
        params.thetas[i] -=
            cfg.learning_rate * mhat / (std::sqrt(vhat) + cfg.epsilon);
    }

    if (cfg.update_gamma) {
        // No weight decay on gamma; it is a physical coefficient, not a
        // circuit angle.
        state.gamma_m =
            cfg.beta1 * state.gamma_m + (1.0 - cfg.beta1) * gamma_gradient;
        state.gamma_v = cfg.beta2 * state.gamma_v +
                        (1.0 - cfg.beta2) * gamma_gradient * gamma_gradient;
        const double mhat = state.gamma_m / bc1;
        const double vhat = state.gamma_v / bc2;
        params.gamma -=
            cfg.learning_rate * mhat / (std::sqrt(vhat) + cfg.epsilon);
    }
    // Projection keeps gamma feasible whether or not it was updated.
    params.gamma = std::min(cfg.gamma_max, std::max(cfg.gamma_lo, params.gamma));
}

double lambda_update(double lambda, double mean_fidelity, double f_min,
                     double growth, double cap) {
    if (lambda < 0.0 || growth <= 1.0 || cap < 0.0)
        throw std::invalid_argument("lambda_update arguments out of range");
    if (mean_fidelity < f_min) return std::min(lambda * growth, cap);
    return lambda;
}

}  // namespace qrisnet
