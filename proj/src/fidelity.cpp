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

#include "qrisnet/core/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrisnet/core/linalg.hpp"
#include "qrisnet/kernels/kernels.hpp"

namespace qrisnet {
namespace {

constexpr double kPurityTol = 1e-12;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Extracts |psi> from a (numerically) rank-1 rho = |psi><psi|: the column
// with the largest diagonal entry, normalized.
StateVector pure_component(const DensityMatrix& rho) {
    const std::size_t dim = rho.dim();
    std::size_t best = 0;
    double best_diag = -1.0;
    for (std::size_t r = 0; r < dim; ++r) {
        const double d = rho.at(r, r).real();
        if (d > best_diag) {
            best_diag = d;
            best = r;
        }
    }
    std::vector<cplx> psi(dim);
    double norm2 = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        psi[r] = rho.at(r, best);
        norm2 += std::norm(psi[r]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (cplx& z : psi) z *= inv;
    return StateVector::from_amplitudes_unchecked(std::move(psi),
                                                  rho.num_qubits());
}

// Eigenvalues below this (relative to the largest) are numerical zeros;
// letting them through would smuggle sqrt(eps)-sized terms into the trace.
constexpr double kEigCutoff = 1e-13;

std::vector<cplx> matrix_sqrt_psd(const std::vector<cplx>& m,
                                  std::size_t dim) {
    const EigResult eig = hermitian_eig(m, dim);
    const double cutoff =
        kEigCutoff * std::max(1.0, std::abs(eig.values.back()));
    std::vector<cplx> s(dim * dim, cplx(0.0, 0.0));
    // V diag(sqrt(w)) V† with small w zeroed.
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            cplx acc(0.0, 0.0);
            for (std::size_t k = 0; k < dim; ++k) {
                const double w = eig.values[k] < cutoff
                                     ? 0.0
                                     : std::sqrt(eig.values[k]);
                acc += eig.vectors[r * dim + k] * w *
                       std::conj(eig.vectors[c * dim + k]);
            }
            s[r * dim + c] = acc;
        }
    return s;
}

}  // namespace

double fidelity_with_pure(const StateVector& psi, const DensityMatrix& rho) {
    if (psi.dim() != rho.dim())
        throw std::invalid_argument("fidelity dimension mismatch");
    const cplx q = kern::active().quadform(psi.amplitudes().data(),
                                           rho.elements().data(), rho.dim());
    return clamp01(q.real());
}

double fidelity_general(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("fidelity dimension mismatch");
    const std::size_t dim = a.dim();
    const std::vector<cplx> sa = matrix_sqrt_psd(a.elements(), dim);
    const std::vector<cplx> inner =
        matmul(sa, matmul(b.elements(), sa, dim), dim);
    const EigResult eig = hermitian_eig(inner, dim);
    const double cutoff =
        kEigCutoff * std::max(1.0, std::abs(eig.values.back()));
    double tr = 0.0;
    for (double w : eig.values)
        if (w >= cutoff) tr += std::sqrt(w);
    return clamp01(tr * tr);
}

double fidelity_with_mixture2(const StateVector& u1, const StateVector& u2,
                              double w1, const DensityMatrix& rho) {
    if (u1.dim() != rho.dim() || u2.dim() != rho.dim())
        throw std::invalid_argument("fidelity dimension mismatch");
    if (!(w1 >= 0.0 && w1 <= 1.0))
        throw std::invalid_argument("mixture weight outside [0,1]");
    const double w2 = 1.0 - w1;
    if (w1 >= 1.0 - 1e-15) return fidelity_with_pure(u1, rho);
    if (w2 >= 1.0 - 1e-15) return fidelity_with_pure(u2, rho);

    const std::size_t dim = rho.dim();
    const auto& a1 = u1.amplitudes();
    const auto& a2 = u2.amplitudes();

    cplx t(0.0, 0.0);  // <u1|u2>
    for (std::size_t i = 0; i < dim; ++i) t += std::conj(a1[i]) * a2[i];
    const double n2sq = std::max(0.0, 1.0 - std::norm(t));
    if (n2sq < 1e-14)  // u2 is u1 up to phase; the mixture is pure
        return fidelity_with_pure(u1, rho);
    const double n2 = std::sqrt(n2sq);

    // Orthonormal plane basis {e1 = u1, e2}.
    std::vector<cplx> e2(dim);
    for (std::size_t i = 0; i < dim; ++i) e2[i] = (a2[i] - t * a1[i]) / n2;

    // Compressions: p_k = rho e_k, B = [<e_i| p_j>].
    std::vector<cplx> p1(dim, cplx(0, 0)), p2(dim, cplx(0, 0));
    const auto& m = rho.elements();
    for (std::size_t r = 0; r < dim; ++r) {
        const cplx* row = m.data() + r * dim;
        cplx acc1(0, 0), acc2(0, 0);
        for (std::size_t c = 0; c < dim; ++c) {
            acc1 += row[c] * a1[c];
            acc2 += row[c] * e2[c];
        }
        p1[r] = acc1;
        p2[r] = acc2;
    }
    cplx b11(0, 0), b12(0, 0), b22(0, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        b11 += std::conj(a1[i]) * p1[i];
        b12 += std::conj(a1[i]) * p2[i];
        b22 += std::conj(e2[i]) * p2[i];
    }

    // a in the plane basis: [[w1 + w2|t|^2, w2 t n2], [w2 conj(t) n2, w2 n2^2]]
    const double A11 = w1 + w2 * std::norm(t);
    const cplx A12 = w2 * t * n2;
    const double A22 = w2 * n2sq;

    const double tr_ab = A11 * b11.real() + A22 * b22.real() +
                         2.0 * (A12 * std::conj(b12)).real();
    const double det_a = w1 * w2 * n2sq;
    const double det_b = b11.real() * b22.real() - std::norm(b12);
    return clamp01(tr_ab + 2.0 * std::sqrt(std::max(0.0, det_a) *
                                           std::max(0.0, det_b)));
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("fidelity dimension mismatch");
    if (a.purity() > 1.0 - kPurityTol)
        return fidelity_with_pure(pure_component(a), b);
    if (b.purity() > 1.0 - kPurityTol)
        return fidelity_with_pure(pure_component(b), a);
    return fidelity_general(a, b);
}

}  // namespace qrisnet
