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

#include "qrisnet/core/statevector.hpp"
#include "qrisnet/core/types.hpp"

namespace qrisnet {

/// Mixed n-qubit state: 2^n x 2^n Hermitian, unit-trace, PSD matrix stored
/// row-major. The canonical state representation of the simulator — channels
/// are non-unitary, so pure states are promoted here before any noise acts.
class DensityMatrix {
  public:
    /// |psi><psi| outer-product promotion.
    static DensityMatrix from_state(const StateVector& psi);

    /// Validates hermiticity (1e-10 max-norm) and unit trace (1e-10).
    /// Positivity is not checked here; call validate() when needed.
    static DensityMatrix from_matrix(std::vector<cplx> elements,
                                     int num_qubits);

    static DensityMatrix from_matrix_unchecked(std::vector<cplx> elements,
                                               int num_qubits);

    static DensityMatrix maximally_mixed(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return dim_; }
    const std::vector<cplx>& elements() const { return m_; }
    std::vector<cplx>& mutable_elements() { return m_; }

    cplx at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }

    cplx trace() const;
    /// Tr(rho^2), real.
    double purity() const;
    /// Smallest eigenvalue (Hermitian eigensolve; used by checks and tests).
    double min_eigenvalue() const;

    /// Full invariant check: hermiticity, unit trace, PSD. Throws
    /// std::invalid_argument naming the violated property.
    void validate(double herm_tol = 1e-10, double trace_tol = 1e-10,
                  double psd_tol = 1e-9) const;

  private:
    DensityMatrix(std::vector<cplx> m, int num_qubits, std::size_t dim)
        : m_(std::move(m)), num_qubits_(num_qubits), dim_(dim) {}

    std::vector<cplx> m_;
    int num_qubits_ = 0;
    std::size_t dim_ = 0;
};

}  // namespace qrisnet
