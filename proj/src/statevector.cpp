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

#include "qrisnet/core/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qrisnet {
namespace {

int qubits_for_dim(std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("state dimension must be >= 2");
    int n = 0;
    std::size_t d = dim;
    while (d > 1) {
        if (d & 1)
            throw std::invalid_argument(
                "state dimension must be a power of two");
        d >>= 1;
        ++n;
    }
    return n;
}

}  // namespace

StateVector StateVector::basis(int num_qubits, std::size_t index) {
    if (num_qubits < 1)
        throw std::invalid_argument("num_qubits must be >= 1");
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim)
        throw std::invalid_argument("basis index out of range");
    std::vector<cplx> amps(dim, cplx(0.0, 0.0));
    amps[index] = cplx(1.0, 0.0);
    return StateVector(std::move(amps), num_qubits);
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps) {
    const int n = qubits_for_dim(amps.size());
    double norm2 = 0.0;
    for (const cplx& a : amps) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("state vector is not normalized");
    return StateVector(std::move(amps), n);
}

StateVector StateVector::from_amplitudes_unchecked(std::vector<cplx> amps,
                                                   int num_qubits) {
    return StateVector(std::move(amps), num_qubits);
}

double StateVector::norm() const {
    double norm2 = 0.0;
    for (const cplx& a : amps_) norm2 += std::norm(a);
    return std::sqrt(norm2);
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    const std::size_t db = b.dim();
    std::vector<cplx> out(a.dim() * db);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const cplx ai = a.amplitude(i);
        for (std::size_t j = 0; j < db; ++j)
            out[i * db + j] = ai * b.amplitude(j);
    }
    return StateVector::from_amplitudes_unchecked(
        std::move(out), a.num_qubits() + b.num_qubits());
}

}  // namespace qrisnet
