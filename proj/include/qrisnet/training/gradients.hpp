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

#include <functional>

#include "qrisnet/vqc/forward.hpp"

namespace qrisnet {

using LossFn = std::function<double(const VqcParams&)>;

/// Two-point shift rule: (L(theta_i + pi/2) - L(theta_i - pi/2)) / 2.
/// Exact derivative for objectives that are single-harmonic in theta_i
/// (observable expectations behind R_y/R_z rotations).
double param_shift_grad(const LossFn& loss_fn, const VqcParams& params,
                        int index);

/// Central finite difference in gamma. The step shrinks at the (gamma_lo,
/// gamma_max] boundary so both evaluation points stay feasible; falls back to
/// a one-sided secant when pinned at an edge.
double gamma_grad(const LossFn& loss_fn, const VqcParams& params,
                  double gamma_lo, double gamma_max, double step = 1e-4);

/// Central finite difference in theta_i (test oracle for the shift rule).
double finite_diff_grad(const LossFn& loss_fn, const VqcParams& params,
                        int index, double step = 1e-5);

}  // namespace qrisnet
