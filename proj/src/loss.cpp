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

#include "qrisnet/training/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace qrisnet {
namespace {

constexpr double kProbFloor = 1e-12;

LossBreakdown combine(double ce, double fidelity, double lambda) {
    if (lambda < 0.0)
        throw std::invalid_argument("penalty weight must be >= 0");
    LossBreakdown lb;
    lb.ce = ce;
    lb.fid_penalty = 1.0 - fidelity;
    lb.lambda = lambda;
    lb.total = lb.ce + lambda * lb.fid_penalty;
    return lb;
}

}  // namespace

int label_to_class_index(int label) {
    switch (label) {
        case -1:
            return 0;
        case 0:
            return 1;
        case 1:
            return 2;
        default:
            throw std::invalid_argument("label must be -1, 0 or 1");
    }
}

double cross_entropy(const std::array<double, 3>& probs, int label) {
    const int idx = label_to_class_index(label);
    return -std::log(std::max(probs[idx], kProbFloor));
}

LossBreakdown total_loss(const ForwardResult& fw, int label, double lambda) {
    return combine(cross_entropy(fw.probs, label), fw.fidelity, lambda);
}

LossBreakdown total_loss(const ForwardLite& fw, int label, double lambda) {
    return combine(cross_entropy(fw.probs, label), fw.fidelity, lambda);
}

}  // namespace qrisnet
