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

#include "qrisnet/core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qrisnet/kernels/kernels.hpp"

namespace qrisnet {

std::vector<cplx> matmul(const std::vector<cplx>& a, const std::vector<cplx>& b,
                         std::size_t n) {
    if (a.size() != n * n || b.size() != n * n)
        throw std::invalid_argument("matmul size mismatch");
    std::vector<cplx> c(n * n);
    kern::active().matmul(c.data(), a.data(), b.data(), n);
    return c;
}

std::vector<cplx> adjoint(const std::vector<cplx>& m, std::size_t n) {
    std::vector<cplx> out(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[c * n + r] = std::conj(m[r * n + c]);
    return out;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Cyclic complex Jacobi. Each rotation zeroes one off-diagonal pair with the
// unitary G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q).
EigResult hermitian_eig(const std::vector<cplx>& m, std::size_t dim) {
    if (m.size() != dim * dim)
        throw std::invalid_argument("hermitian_eig size mismatch");

    std::vector<cplx> a = m;
    std::vector<cplx> v(dim * dim, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < dim; ++i) v[i * dim + i] = cplx(1.0, 0.0);

    double scale = 0.0;
    for (const cplx& z : m) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) scale = 1.0;
    const double stop = 1e-15 * scale;
    const int max_sweeps = 64;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < dim; ++p)
            for (std::size_t q = p + 1; q < dim; ++q)
                off = std::max(off, std::abs(a[p * dim + q]));
        if (off <= stop) break;

        for (std::size_t p = 0; p + 1 < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const cplx apq = a[p * dim + q];
                const double w = std::abs(apq);
                if (w <= stop * 1e-2) continue;

                const double app = a[p * dim + p].real();
                const double aqq = a[q * dim + q].real();
                const cplx phase = apq / w;  // e^{i phi}

                const double tau = (aqq - app) / (2.0 * w);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const cplx g10 = -s * std::conj(phase);  // -s e^{-i phi}
                const cplx g11 = c * std::conj(phase);   //  c e^{-i phi}

                // A <- A G (columns p, q).
                for (std::size_t i = 0; i < dim; ++i) {
                    const cplx aip = a[i * dim + p];
                    const cplx aiq = a[i * dim + q];
                    a[i * dim + p] = c * aip + g10 * aiq;
                    a[i * dim + q] = s * aip + g11 * aiq;
                }
                // A <- G† A (rows p, q).
                for (std::size_t i = 0; i < dim; ++i) {
                    const cplx api = a[p * dim + i];
                    const cplx aqi = a[q * dim + i];
                    a[p * dim + i] = c * api - s * phase * aqi;
                    a[q * dim + i] = s * api + c * phase * aqi;
                }
                // V <- V G.
                for (std::size_t i = 0; i < dim; ++i) {
                    const cplx vip = v[i * dim + p];
                    const cplx viq = v[i * dim + q];
                    v[i * dim + p] = c * vip + g10 * viq;
                    v[i * dim + q] = s * vip + g11 * viq;
                }
                // Clean the pair explicitly; rounding leaves ~1e-17 residue.
                a[p * dim + q] = cplx(0.0, 0.0);
                a[q * dim + p] = cplx(0.0, 0.0);
            }
        }
    }

    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * dim + x].real() < a[y * dim + y].real();
    });

    EigResult out;
    out.values.resize(dim);
    out.vectors.assign(dim * dim, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < dim; ++k) {
        out.values[k] = a[order[k] * dim + order[k]].real();
        for (std::size_t i = 0; i < dim; ++i)
            out.vectors[i * dim + k] = v[i * dim + order[k]];
    }
    return out;
}

}  // namespace qrisnet
