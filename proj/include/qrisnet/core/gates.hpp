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

#include <cstddef>
#include <vector>

#include "qrisnet/core/density_matrix.hpp"
#include "qrisnet/core/statevector.hpp"
#include "qrisnet/core/types.hpp"

namespace qrisnet {

/// k-qubit unitary with an ordered target list. targets[0] is the most
/// significant bit of the gate's own 2^k-dimensional basis, matching the
/// register-wide convention (qubit 0 = most significant).
struct Gate {
    std::vector<cplx> matrix;  // 2^k x 2^k, row-major
    std::vector<int> targets;
    bool diagonal = false;  // cached at construction

    /// Validates unitarity (||UU† - I||_max <= 1e-10), matching sizes and
    /// distinct targets.
    static Gate make(std::vector<cplx> matrix, std::vector<int> targets);

    std::size_t arity() const { return targets.size(); }
    std::size_t dim() const { return std::size_t{1} << targets.size(); }

    /// Same matrix retargeted onto other qubits.
    Gate on(std::vector<int> new_targets) const;
};

/// R_y(theta) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]] on target 0.
/// Throws std::invalid_argument for non-finite theta.
Gate ry_gate(double theta);
/// R_z(theta) = diag(e^{-i t/2}, e^{+i t/2}).
Gate rz_gate(double theta);
Gate pauli_x();
Gate pauli_y();
Gate pauli_z();
Gate identity_gate(int arity = 1);
/// CNOT with targets {control, target}.
Gate cnot_gate(int control, int target);
/// Diagonal unitary from explicit phase factors (each |d|=1 within 1e-10).
Gate diagonal_gate(std::vector<cplx> diag, std::vector<int> targets);
/// Product of per-qubit R_z(phi) rotations over a full register; the default
/// programmable-surface unitary.
Gate phase_rotation_unitary(int num_qubits, double phi);

/// rho -> U_full rho U_full†, the gate lifted to the register by identity
/// padding. Preserves trace to 1e-12. Throws on out-of-range/duplicate
/// targets or dimension mismatch.
DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g);

/// In-place variants used by the simulator internals.
void apply_gate_in_place(DensityMatrix& rho, const Gate& g);
void apply_gate_in_place(StateVector& psi, const Gate& g);

/// Fast CNOT paths (pure basis permutation).
void apply_cnot_in_place(DensityMatrix& rho, int control, int target);
void apply_cnot_in_place(StateVector& psi, int control, int target);

/// Single-qubit fast paths taking the 2x2 matrix directly.
void apply_1q_in_place(DensityMatrix& rho, int target, const cplx u[4]);
void apply_1q_in_place(StateVector& psi, int target, const cplx u[4]);

}  // namespace qrisnet
