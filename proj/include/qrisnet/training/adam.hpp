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

#include <vector>

#include "qrisnet/vqc/forward.hpp"

namespace qrisnet {

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double weight_decay = 2e-3;  // L2, applied to circuit angles only
    double gamma_lo = 1e-3;      // projection floor for gamma
    double gamma_max = 0.85;     // projection ceiling for gamma
    bool update_gamma = true;
};

struct AdamState {
    std::vector<double> m, v;  // first/second moments for thetas
    double gamma_m = 0.0, gamma_v = 0.0;
    long step = 0;

    static AdamState init(int num_thetas);
};

/// One optimizer step. Thetas get Adam with L2 decay folded into the
/// gradient; gamma gets plain Adam followed by projection onto
/// [gamma_lo, gamma_max]. Throws on dimension mismatch.
void adam_step(VqcParams& params, const std::vector<double>& theta_grads,
               double gamma_gradient, AdamState& state,
               const AdamConfig& cfg);

/// lambda <- min(lambda * growth, cap) when mean_fidelity < f_min, else
/// unchanged. lambda = 0 stays 0 (penalty disabled).
double lambda_update(double lambda, double mean_fidelity, double f_min,
                     double growth, double cap);

}  // namespace qrisnet
