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

#include "qrisnet/core/types.hpp"

namespace qrisnet {

/// Pure n-qubit state. Amplitudes are held normalized (checked to 1e-10 at
/// the validated entry points); states only exist transiently on the way to
/// density matrices, which are the canonical runtime representation.
class StateVector {
  public:
    /// Computational-basis state |index> on num_qubits qubits.
    static StateVector basis(int num_qubits, std::size_t index);

    /// Validates: size is 2^n for some n >= 1, norm within 1e-10 of 1.
    static StateVector from_amplitudes(std::vector<cplx> amps);

    /// Internal entry point; caller guarantees the invariants.
    static StateVector from_amplitudes_unchecked(std::vector<cplx> amps,
                                                 int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& mutable_amplitudes() { return amps_; }
    cplx amplitude(std::size_t i) const { return amps_[i]; }

    double norm() const;

  private:
    StateVector(std::vector<cplx> amps, int num_qubits)
        : amps_(std::move(amps)), num_qubits_(num_qubits) {}

    std::vector<cplx> amps_;
    int num_qubits_ = 0;
};

/// Kronecker composition: amplitude of |i>⊗|j> lands at index i*2^b.n + j.
StateVector tensor_product(const StateVector& a, const StateVector& b);

}  // namespace qrisnet
