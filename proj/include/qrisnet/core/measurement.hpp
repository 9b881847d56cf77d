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

#include "qrisnet/core/density_matrix.hpp"

namespace qrisnet {

/// Marginal computational-basis distribution over the listed qubits (partial
/// trace over the rest, then the diagonal). Outcome index packs the listed
/// qubits in order, qubits[0] most significant. Entries sum to 1 (1e-10).
/// Throws std::invalid_argument on an empty list, duplicates, or
/// out-of-range indices.
std::vector<double> measure_probabilities(const DensityMatrix& rho,
                                          const std::vector<int>& qubits);

}  // namespace qrisnet
