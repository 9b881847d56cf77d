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

#include "qrisnet/core/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qrisnet/core/linalg.hpp"

namespace qrisnet {

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
    const std::size_t dim = psi.dim();
    std::vector<cplx> m(dim * dim);
    const auto& a = psi.amplitudes();
    for (std::size_t r = 0; r < dim; ++r) {
        const cplx ar = a[r];
        for (std::size_t c = 0; c < dim; ++c)
            m[r * dim + c] = ar * std::conj(a[c]);
    }
    return DensityMatrix(std::move(m), psi.num_qubits(), dim);
}

DensityMatrix DensityMatrix::from_matrix(std::vector<cplx> elements,
                                         int num_qubits) {
    if (num_qubits < 1)
        throw std::invalid_argument("num_qubits must be >= 1");
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (elements.size() != dim * dim)
        throw std::invalid_argument("element count does not match 4^n");

    double herm = 0.0;
    cplx tr(0.0, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
        tr += elements[r * dim + r];
        for (std::size_t c = r; c < dim; ++c) {
            const cplx d =
                elements[r * dim + c] - std::conj(elements[c * dim + r]);
            herm = std::max(herm, std::abs(d));
        }
    }
    if (herm > 1e-10)
        throw std::invalid_argument("matrix is not Hermitian");
    if (std::abs(tr - cplx(1.0, 0.0)) > 1e-10)
        throw std::invalid_argument("matrix trace is not 1");
    return DensityMatrix(std::move(elements), num_qubits, dim);
}

DensityMatrix DensityMatrix::from_matrix_unchecked(std::vector<cplx> elements,
                                                   int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    return DensityMatrix(std::move(elements), num_qubits, dim);
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<cplx> m(dim * dim, cplx(0.0, 0.0));
    const double w = 1.0 / static_cast<double>(dim);
    for (std::size_t r = 0; r < dim; ++r) m[r * dim + r] = cplx(w, 0.0);
    return DensityMatrix(std::move(m), num_qubits, dim);
}

cplx DensityMatrix::trace() const {
    cplx tr(0.0, 0.0);
    for (std::size_t r = 0; r < dim_; ++r) tr += m_[r * dim_ + r];
    return tr;
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum_{r,c} rho[r,c] rho[c,r] = sum |rho[r,c]|^2 (Hermitian).
    double s = 0.0;
    for (const cplx& v : m_) s += std::norm(v);
    return s;
}

double DensityMatrix::min_eigenvalue() const {
    EigResult eig = hermitian_eig(m_, dim_);
    return eig.values.front();
}

void DensityMatrix::validate(double herm_tol, double trace_tol,
                             double psd_tol) const {
    double herm = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            herm = std::max(
                herm, std::abs(m_[r * dim_ + c] - std::conj(m_[c * dim_ + r])));
    if (herm > herm_tol)
        throw std::invalid_argument("density matrix not Hermitian (dev=" +
                                    std::to_string(herm) + ")");
    const double tdev = std::abs(trace() - cplx(1.0, 0.0));
    if (tdev > trace_tol)
        throw std::invalid_argument("density matrix trace != 1 (dev=" +
                                    std::to_string(tdev) + ")");
    const double lam = min_eigenvalue();
    if (lam < -psd_tol)
        throw std::invalid_argument("density matrix not PSD (min eig=" +
                                    std::to_string(lam) + ")");
}

}  // namespace qrisnet
