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

#include "qrisnet/vqc/forward.hpp"

namespace qrisnet {

struct LossBreakdown {
    double ce = 0.0;           // cross-entropy term (nats)
    double fid_penalty = 0.0;  // 1 - fidelity
    double lambda = 0.0;       // penalty weight in effect
    double total = 0.0;        // ce + lambda * fid_penalty
};

/// Ternary labels {-1, 0, 1} map to class indices {0, 1, 2}.
int label_to_class_index(int label);

/// -log(max(b_true, 1e-12)). Throws std::invalid_argument on a bad label.
double cross_entropy(const std::array<double, 3>& probs, int label);

/// ce + lambda * (1 - fidelity); lambda must be >= 0 (lambda = 0 switches the
/// penalty off for ablation runs).
LossBreakdown total_loss(const ForwardResult& fw, int label, double lambda);
LossBreakdown total_loss(const ForwardLite& fw, int label, double lambda);

}  // namespace qrisnet
