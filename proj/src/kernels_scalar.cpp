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

// Scalar reference kernels. These are the semantics the SIMD variants are
// equivalence-tested against; keep them simple and obviously correct.

#include "qrisnet/kernels/kernels.hpp"

namespace qrisnet::kern {
namespace {

void gate_rows_scalar(cplx* m, std::size_t dim, std::size_t mask,
                      const cplx u[4]) {
    for (std::size_t r = 0; r < dim; ++r) {
        if (r & mask) continue;
        cplx* row0 = m + r * dim;
        cplx* row1 = m + (r | mask) * dim;
        for (std::size_t j = 0; j < dim; ++j) {
            const cplx x = row0[j];
            const cplx y = row1[j];
            row0[j] = u[0] * x + u[1] * y;
            row1[j] = u[2] * x + u[3] * y;
        }
    }
}

void gate_cols_scalar(cplx* m, std::size_t dim, std::size_t mask,
                      const cplx u[4]) {
    // m <- m U†: new[r,c0] = m[r,c0] conj(u00) + m[r,c1] conj(u01)
    //            new[r,c1] = m[r,c0] conj(u10) + m[r,c1] conj(u11)
    const cplx a = std::conj(u[0]);
    const cplx b = std::conj(u[1]);
    const cplx c = std::conj(u[2]);
    const cplx d = std::conj(u[3]);
    for (std::size_t r = 0; r < dim; ++r) {
        cplx* row = m + r * dim;
        for (std::size_t j = 0; j < dim; ++j) {
            if (j & mask) continue;
            const cplx x = row[j];
            const cplx y = row[j | mask];
            row[j] = x * a + y * b;
            row[j | mask] = x * c + y * d;
        }
    }
}

void gate_cols_accum_scalar(cplx* dst, const cplx* src, std::size_t dim,
                            std::size_t mask, const cplx u[4]) {
    const cplx a = std::conj(u[0]);
    const cplx b = std::conj(u[1]);
    const cplx c = std::conj(u[2]);
    const cplx d = std::conj(u[3]);
    for (std::size_t r = 0; r < dim; ++r) {
        const cplx* srow = src + r * dim;
        cplx* drow = dst + r * dim;
        for (std::size_t j = 0; j < dim; ++j) {
            if (j & mask) continue;
            const cplx x = srow[j];
            const cplx y = srow[j | mask];
            drow[j] += x * a + y * b;
            drow[j | mask] += x * c + y * d;
        }
    }
}

void gate_vec_scalar(cplx* v, std::size_t dim, std::size_t mask,
                     const cplx u[4]) {
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const cplx x = v[i];
        const cplx y = v[i | mask];
        v[i] = u[0] * x + u[1] * y;
        v[i | mask] = u[2] * x + u[3] * y;
    }
}

void add_scaled_scalar(cplx* dst, const cplx* src, std::size_t n, double w) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += w * src[i];
}

void scale_scalar(cplx* v, std::size_t n, double w) {
    for (std::size_t i = 0; i < n; ++i) v[i] *= w;
}

void matmul_scalar(cplx* c, const cplx* a, const cplx* b, std::size_t n) {
    for (std::size_t i = 0; i < n * n; ++i) c[i] = cplx(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

cplx quadform_scalar(const cplx* psi, const cplx* rho, std::size_t dim) {
    cplx acc(0.0, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
        const cplx* row = rho + r * dim;
        cplx t(0.0, 0.0);
        for (std::size_t c = 0; c < dim; ++c) t += row[c] * psi[c];
        acc += std::conj(psi[r]) * t;
    }
    return acc;
}

}  // namespace

extern const KernelTable kScalarTable;
const KernelTable kScalarTable = {
    "scalar",          gate_rows_scalar, gate_cols_scalar,
    gate_cols_accum_scalar, gate_vec_scalar,  add_scaled_scalar,
    scale_scalar,      matmul_scalar,    quadform_scalar,
};

}  // namespace qrisnet::kern
