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

// AVX2/FMA variants of the dense complex kernels. One __m256d holds two
// interleaved complex doubles. This translation unit is compiled with
// -mavx2 -mfma; callers must gate on avx2_supported() before dispatching
// here (see kernels_dispatch.cpp).

#include "qrisnet/kernels/kernels.hpp"

#if defined(QRISNET_HAVE_AVX2)

#include <immintrin.h>

namespace qrisnet::kern {
namespace {

// Broadcast complex scalar as separate (re, im) registers.
struct CScal {
    __m256d re, im;
};

inline CScal cs(const cplx& z) {
    return {_mm256_set1_pd(z.real()), _mm256_set1_pd(z.imag())};
}

// s * x for complex scalar s and two packed complex x.
inline __m256d cmul_s(const CScal& s, __m256d x) {
    const __m256d x_swap = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(s.re, x, _mm256_mul_pd(s.im, x_swap));
}

// Element-wise complex product of two packed pairs.
inline __m256d cmul_v(__m256d a, __m256d b) {
    const __m256d a_re = _mm256_movedup_pd(a);
    const __m256d a_im = _mm256_permute_pd(a, 0xF);
    const __m256d b_swap = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

void gate_rows_avx2(cplx* m, std::size_t dim, std::size_t mask,
                    const cplx u[4]) {
    const CScal u00 = cs(u[0]), u01 = cs(u[1]), u10 = cs(u[2]), u11 = cs(u[3]);
    for (std::size_t r = 0; r < dim; ++r) {
        if (r & mask) continue;
        double* p0 = reinterpret_cast<double*>(m + r * dim);
        double* p1 = reinterpret_cast<double*>(m + (r | mask) * dim);
        std::size_t j = 0;
        for (; j + 2 <= dim; j += 2) {
            const __m256d x = _mm256_loadu_pd(p0 + 2 * j);
            const __m256d y = _mm256_loadu_pd(p1 + 2 * j);
            const __m256d n0 = _mm256_add_pd(cmul_s(u00, x), cmul_s(u01, y));
            const __m256d n1 = _mm256_add_pd(cmul_s(u10, x), cmul_s(u11, y));
            _mm256_storeu_pd(p0 + 2 * j, n0);
            _mm256_storeu_pd(p1 + 2 * j, n1);
        }
        for (; j < dim; ++j) {
            cplx* row0 = m + r * dim;
            cplx* row1 = m + (r | mask) * dim;
            const cplx x = row0[j];
            const cplx y = row1[j];
            row0[j] = u[0] * x + u[1] * y;
            row1[j] = u[2] * x + u[3] * y;
        }
    }
}

// Column-pair transform of one row segment: runs of `mask` complex at px/py.
inline void col_run(double* px, double* py, std::size_t run, const CScal& a,
                    const CScal& b, const CScal& c, const CScal& d,
                    const cplx sa, const cplx sb, const cplx sc,
                    const cplx sd) {
    std::size_t j = 0;
    for (; j + 2 <= run; j += 2) {
        const __m256d x = _mm256_loadu_pd(px + 2 * j);
        const __m256d y = _mm256_loadu_pd(py + 2 * j);
        _mm256_storeu_pd(px + 2 * j,
                         _mm256_add_pd(cmul_s(a, x), cmul_s(b, y)));
        _mm256_storeu_pd(py + 2 * j,
                         _mm256_add_pd(cmul_s(c, x), cmul_s(d, y)));
    }
    for (; j < run; ++j) {
        cplx* cx = reinterpret_cast<cplx*>(px) + j;
        cplx* cy = reinterpret_cast<cplx*>(py) + j;
        const cplx x = *cx;
        const cplx y = *cy;
        *cx = sa * x + sb * y;
        *cy = sc * x + sd * y;
    }
}

inline void col_run_accum(double* dx, double* dy, const double* px,
                          const double* py, std::size_t run, const CScal& a,
                          const CScal& b, const CScal& c, const CScal& d,
                          const cplx sa, const cplx sb, const cplx sc,
                          const cplx sd) {
    std::size_t j = 0;
    for (; j + 2 <= run; j += 2) {
        const __m256d x = _mm256_loadu_pd(px + 2 * j);
        const __m256d y = _mm256_loadu_pd(py + 2 * j);
        __m256d ox = _mm256_loadu_pd(dx + 2 * j);
        __m256d oy = _mm256_loadu_pd(dy + 2 * j);
        ox = _mm256_add_pd(ox, _mm256_add_pd(cmul_s(a, x), cmul_s(b, y)));
        oy = _mm256_add_pd(oy, _mm256_add_pd(cmul_s(c, x), cmul_s(d, y)));
        _mm256_storeu_pd(dx + 2 * j, ox);
        _mm256_storeu_pd(dy + 2 * j, oy);
    }
    for (; j < run; ++j) {
        const cplx x = reinterpret_cast<const cplx*>(px)[j];
        const cplx y = reinterpret_cast<const cplx*>(py)[j];
        reinterpret_cast<cplx*>(dx)[j] += sa * x + sb * y;
        reinterpret_cast<cplx*>(dy)[j] += sc * x + sd * y;
    }
}

// mask == 1: pairs are adjacent complex; transform one packed (x, y) register.
// AC and BD pack the matrix columns: result = (a x + b y, c x + d y).
inline __m256d pair_transform(__m256d t, __m256d ac, __m256d bd) {
    const __m256d xx = _mm256_permute2f128_pd(t, t, 0x00);
    const __m256d yy = _mm256_permute2f128_pd(t, t, 0x11);
    return _mm256_add_pd(cmul_v(xx, ac), cmul_v(yy, bd));
}

void gate_cols_avx2(cplx* m, std::size_t dim, std::size_t mask,
                    const cplx u[4]) {
    const cplx sa = std::conj(u[0]), sb = std::conj(u[1]);
    const cplx sc = std::conj(u[2]), sd = std::conj(u[3]);
    if (mask == 1) {
        const __m256d ac =
            _mm256_setr_pd(sa.real(), sa.imag(), sc.real(), sc.imag());
        const __m256d bd =
            _mm256_setr_pd(sb.real(), sb.imag(), sd.real(), sd.imag());
        for (std::size_t r = 0; r < dim; ++r) {
            double* row = reinterpret_cast<double*>(m + r * dim);
            for (std::size_t j = 0; j + 2 <= dim; j += 2) {
                const __m256d t = _mm256_loadu_pd(row + 2 * j);
                _mm256_storeu_pd(row + 2 * j, pair_transform(t, ac, bd));
            }
        }
        return;
    }
    const CScal a = cs(sa), b = cs(sb), c = cs(sc), d = cs(sd);
    for (std::size_t r = 0; r < dim; ++r) {
        cplx* row = m + r * dim;
        for (std::size_t blk = 0; blk < dim; blk += 2 * mask) {
            col_run(reinterpret_cast<double*>(row + blk),
                    reinterpret_cast<double*>(row + blk + mask), mask, a, b, c,
                    d, sa, sb, sc, sd);
        }
    }
}

void gate_cols_accum_avx2(cplx* dst, const cplx* src, std::size_t dim,
                          std::size_t mask, const cplx u[4]) {
    const cplx sa = std::conj(u[0]), sb = std::conj(u[1]);
    const cplx sc = std::conj(u[2]), sd = std::conj(u[3]);
    if (mask == 1) {
        const __m256d ac =
            _mm256_setr_pd(sa.real(), sa.imag(), sc.real(), sc.imag());
        const __m256d bd =
            _mm256_setr_pd(sb.real(), sb.imag(), sd.real(), sd.imag());
        for (std::size_t r = 0; r < dim; ++r) {
            const double* srow = reinterpret_cast<const double*>(src + r * dim);
            double* drow = reinterpret_cast<double*>(dst + r * dim);
            for (std::size_t j = 0; j + 2 <= dim; j += 2) {
                const __m256d t = _mm256_loadu_pd(srow + 2 * j);
                const __m256d o = _mm256_loadu_pd(drow + 2 * j);
                _mm256_storeu_pd(drow + 2 * j,
                                 _mm256_add_pd(o, pair_transform(t, ac, bd)));
            }
        }
        return;
    }
    const CScal a = cs(sa), b = cs(sb), c = cs(sc), d = cs(sd);
    for (std::size_t r = 0; r < dim; ++r) {
        const cplx* srow = src + r * dim;
        cplx* drow = dst + r * dim;
        for (std::size_t blk = 0; blk < dim; blk += 2 * mask) {
            col_run_accum(reinterpret_cast<double*>(drow + blk),
                          reinterpret_cast<double*>(drow + blk + mask),
                          reinterpret_cast<const double*>(srow + blk),
                          reinterpret_cast<const double*>(srow + blk + mask),
                          mask, a, b, c, d, sa, sb, sc, sd);
        }
    }
}

void gate_vec_avx2(cplx* v, std::size_t dim, std::size_t mask,
                   const cplx u[4]) {
    if (mask == 1) {
        const __m256d ac =
            _mm256_setr_pd(u[0].real(), u[0].imag(), u[2].real(), u[2].imag());
        const __m256d bd =
            _mm256_setr_pd(u[1].real(), u[1].imag(), u[3].real(), u[3].imag());
        double* p = reinterpret_cast<double*>(v);
        for (std::size_t j = 0; j + 2 <= dim; j += 2) {
            const __m256d t = _mm256_loadu_pd(p + 2 * j);
            _mm256_storeu_pd(p + 2 * j, pair_transform(t, ac, bd));
        }
        return;
    }
    const CScal u00 = cs(u[0]), u01 = cs(u[1]), u10 = cs(u[2]), u11 = cs(u[3]);
    for (std::size_t blk = 0; blk < dim; blk += 2 * mask) {
        col_run(reinterpret_cast<double*>(v + blk),
                reinterpret_cast<double*>(v + blk + mask), mask, u00, u01, u10,
                u11, u[0], u[1], u[2], u[3]);
    }
}

void add_scaled_avx2(cplx* dst, const cplx* src, std::size_t n, double w) {
    const __m256d wv = _mm256_set1_pd(w);
    double* d = reinterpret_cast<double*>(dst);
    const double* s = reinterpret_cast<const double*>(src);
    const std::size_t nd = 2 * n;
    std::size_t i = 0;
    for (; i + 4 <= nd; i += 4) {
        const __m256d x = _mm256_loadu_pd(s + i);
        const __m256d o = _mm256_loadu_pd(d + i);
        _mm256_storeu_pd(d + i, _mm256_fmadd_pd(wv, x, o));
    }
    for (; i < nd; ++i) d[i] += w * s[i];
}

void scale_avx2(cplx* v, std::size_t n, double w) {
    const __m256d wv = _mm256_set1_pd(w);
    double* d = reinterpret_cast<double*>(v);
    const std::size_t nd = 2 * n;
    std::size_t i = 0;
    for (; i + 4 <= nd; i += 4)
        _mm256_storeu_pd(d + i, _mm256_mul_pd(wv, _mm256_loadu_pd(d + i)));
    for (; i < nd; ++i) d[i] *= w;
}

void matmul_avx2(cplx* c, const cplx* a, const cplx* b, std::size_t n) {
    double* cd = reinterpret_cast<double*>(c);
    {
        const __m256d z = _mm256_setzero_pd();
        const std::size_t nd = 2 * n * n;
        std::size_t i = 0;
        for (; i + 4 <= nd; i += 4) _mm256_storeu_pd(cd + i, z);
        for (; i < nd; ++i) cd[i] = 0.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const CScal s = cs(aik);
            const cplx* brow = b + k * n;
            const double* bp = reinterpret_cast<const double*>(brow);
            double* cp = reinterpret_cast<double*>(crow);
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                const __m256d x = _mm256_loadu_pd(bp + 2 * j);
                const __m256d o = _mm256_loadu_pd(cp + 2 * j);
                _mm256_storeu_pd(cp + 2 * j, _mm256_add_pd(o, cmul_s(s, x)));
            }
            for (; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

cplx quadform_avx2(const cplx* psi, const cplx* rho, std::size_t dim) {
    cplx acc(0.0, 0.0);
    const double* pp = reinterpret_cast<const double*>(psi);
    for (std::size_t r = 0; r < dim; ++r) {
        const double* row = reinterpret_cast<const double*>(rho + r * dim);
        __m256d vacc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 2 <= dim; j += 2) {
            const __m256d x = _mm256_loadu_pd(row + 2 * j);
            const __m256d y = _mm256_loadu_pd(pp + 2 * j);
            vacc = _mm256_add_pd(vacc, cmul_v(x, y));
        }
        const __m128d lo = _mm256_castpd256_pd128(vacc);
        const __m128d hi = _mm256_extractf128_pd(vacc, 1);
        double out[2];
        _mm_storeu_pd(out, _mm_add_pd(lo, hi));
        cplx t(out[0], out[1]);
        for (; j < dim; ++j) t += (rho + r * dim)[j] * psi[j];
        acc += std::conj(psi[r]) * t;
    }
    return acc;
}

}  // namespace

extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table = {
    "avx2",           gate_rows_avx2, gate_cols_avx2, gate_cols_accum_avx2,
    gate_vec_avx2,    add_scaled_avx2, scale_avx2,    matmul_avx2,
    quadform_avx2,
};

}  // namespace qrisnet::kern

#endif  // QRISNET_HAVE_AVX2
