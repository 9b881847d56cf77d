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

#include "qrisnet/training/gradients.hpp"

#include <cmath>
#include <stdexcept>

#include "qrisnet/core/types.hpp"

namespace qrisnet {

double param_shift_grad(const LossFn& loss_fn, const VqcParams& params,
                        int index) {
    if (index < 0 || index >= static_cast<int>(params.thetas.size()))
        throw std::invalid_argument("parameter index out of range");
    VqcParams shifted = params;
    shifted.thetas[index] = params.thetas[index] + kPi / 2.0;
    const double plus = loss_fn(shifted);
    shifted.thetas[index] = params.thetas[index] - kPi / 2.0;
    const double minus = loss_fn(shifted);
    return 0.5 * (plus - minus);
}

double gamma_grad(const LossFn& loss_fn, const VqcParams& params,
                  double gamma_lo, double gamma_max, double step) {
    const double g = params.gamma;
    double hi = std::min(g + step, gamma_max);
    double lo = std::max(g - step, gamma_lo);
    if (hi - lo < 1e-12) {
        // Pinned interval; widen one-sided as far as the domain allows.
        hi = gamma_max;
        lo = std::max(gamma_lo, gamma_max - step);
        if (hi - lo < 1e-12) return 0.0;
    }
    VqcParams shifted = params;
    shifted.gamma = hi;
    const double fhi = loss_fn(shifted);
    shifted.gamma = lo;
    const double flo = loss_fn(shifted);
    return (fhi - flo) / (hi - lo);
}

double finite_diff_grad(const LossFn& loss_fn, const VqcParams& params,
                        int index, double step) {
    if (index < 0 || index >= static_cast<int>(params.thetas.size()))
        throw std::invalid_argument("parameter index out of range");
    VqcParams shifted = params;
    shifted.thetas[index] = params.thetas[index] + step;
    const double plus = loss_fn(shifted);
    shifted.thetas[index] = params.thetas[index] - step;
    const double minus = loss_fn(shifted);
    return (plus - minus) / (2.0 * step);
}

}  // namespace qrisnet
