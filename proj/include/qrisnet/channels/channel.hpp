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

#include <string>
#include <vector>

#include "qrisnet/core/density_matrix.hpp"
#include "qrisnet/core/types.hpp"

namespace qrisnet {

/// Completely positive trace-preserving map in Kraus form:
/// rho -> sum_m K_m rho K_m†, with sum_m K_m† K_m = I (checked to 1e-10).
struct QuantumChannel {
    std::vector<std::vector<cplx>> kraus;  // each 2^arity x 2^arity
    int arity = 1;
    std::string label;

    static QuantumChannel make(std::vector<std::vector<cplx>> kraus, int arity,
                               std::string label);

    std::size_t dim() const { return std::size_t{1} << arity; }
};

QuantumChannel identity_channel(int arity = 1);

/// rho -> (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z).
/// Kraus set {sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z}.
/// Throws std::invalid_argument for p outside [0, 1].
QuantumChannel depolarizing_channel(double p);

/// rho -> (1-q) rho + q Z rho Z; off-diagonals scale by (1-2q).
QuantumChannel dephasing_channel(double q);

/// outer ∘ inner: Kraus set of all pairwise products. Equal arity required.
QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner);

/// Identity-pads a single-qubit channel onto `target` of an n-qubit register,
/// materializing full 2^n x 2^n Kraus operators.
QuantumChannel lift_to_register(const QuantumChannel& ch, int target,
                                int num_qubits);

/// Kraus-sum application; channel arity must match the register.
DensityMatrix apply_channel(const DensityMatrix& rho,
                            const QuantumChannel& ch);

/// Fast path: single-qubit channel applied at `target` without materializing
/// padded operators. Exactly equivalent to lifting then applying (tested).
void apply_local_channel_in_place(DensityMatrix& rho, int target,
                                  const QuantumChannel& ch);

}  // namespace qrisnet
