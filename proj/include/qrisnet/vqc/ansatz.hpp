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

#include <span>
#include <vector>

#include "qrisnet/core/density_matrix.hpp"
#include "qrisnet/core/statevector.hpp"

namespace qrisnet {

/// Layered hardware-style circuit on six qubits. Each layer applies R_y then
/// R_z on every qubit, followed by a CNOT ring (qubit k controls k+1 mod 6).
/// Parameter layout per layer: [ry q0..q5, rz q0..q5] -> 12 L parameters.
struct Ansatz {
    int num_layers = 0;
    int num_qubits = 6;

    /// Throws std::invalid_argument for num_layers < 1.
    static Ansatz make(int num_layers);

    int param_count() const { return num_layers * num_qubits * 2; }
};

/// Index helpers for the flat parameter vector.
inline int ry_param_index(const Ansatz& a, int layer, int qubit) {
    return layer * a.num_qubits * 2 + qubit;
}
inline int rz_param_index(const Ansatz& a, int layer, int qubit) {
    return layer * a.num_qubits * 2 + a.num_qubits + qubit;
}

void apply_ansatz(DensityMatrix& rho, const Ansatz& a,
                  std::span<const double> thetas);
void apply_ansatz(StateVector& psi, const Ansatz& a,
                  std::span<const double> thetas);

}  // namespace qrisnet
