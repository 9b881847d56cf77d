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

#include <complex>
#include <cstddef>

namespace qrisnet::kern {

using cplx = std::complex<double>;

// Dense complex kernels shared by the state simulator. Matrices are square,
// row-major, dimension `dim` (a power of two in practice, but the kernels do
// not require it except where a pair mask is involved).
//
// The single-qubit transforms take `mask`, the bit of the basis index that
// the 2x2 matrix u acts on. Index pairs are (i, i | mask) with (i & mask)==0.
//
//   gate_rows        m <- (U ⊗ I) m          (transforms row pairs)
//   gate_cols        m <- m (U ⊗ I)†         (transforms column pairs)
//   gate_cols_accum  dst += src (U ⊗ I)†     (same, accumulating)
//   gate_vec         v <- (U ⊗ I) v          (statevector form)
//
// A full single-qubit conjugation  m <- (U⊗I) m (U⊗I)†  is gate_rows followed
// by gate_cols, and one Kraus term of a channel sum is gate_rows on a scratch
// copy followed by gate_cols_accum into the output.
struct KernelTable {
    const char* name;

    void (*gate_rows)(cplx* m, std::size_t dim, std::size_t mask,
                      const cplx u[4]);
    void (*gate_cols)(cplx* m, std::size_t dim, std::size_t mask,
                      const cplx u[4]);
    void (*gate_cols_accum)(cplx* dst, const cplx* src, std::size_t dim,
                            std::size_t mask, const cplx u[4]);
    void (*gate_vec)(cplx* v, std::size_t dim, std::size_t mask,
                     const cplx u[4]);

    // dst += w * src over n complex entries (real weight).
    void (*add_scaled)(cplx* dst, const cplx* src, std::size_t n, double w);
    // v *= w over n complex entries (real weight).
    void (*scale)(cplx* v, std::size_t n, double w);
    // c = a * b, n x n complex matrices.
    void (*matmul)(cplx* c, const cplx* a, const cplx* b, std::size_t n);
    // <psi| rho |psi> for a dim-vector psi and dim x dim matrix rho.
    cplx (*quadform)(const cplx* psi, const cplx* rho, std::size_t dim);
};

enum class Backend { kScalar, kAvx2 };

/// True when the running CPU (and this build) can execute the AVX2 variants.
bool avx2_supported();

/// Table for an explicit backend. Throws std::runtime_error if unavailable.
const KernelTable& table(Backend b);

/// Active table: best available backend, overridable with the environment
/// variable QRISNET_KERNEL=scalar|avx2 (resolved once, at first use).
const KernelTable& active();

}  // namespace qrisnet::kern
