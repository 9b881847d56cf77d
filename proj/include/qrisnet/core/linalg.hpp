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

/// Eigendecomposition of a Hermitian matrix: values ascending, vectors stored
/// as the columns of `vectors` (row-major dim x dim), so A = V diag(w) V†.
struct EigResult {
    std::vector<double> values;
    std::vector<cplx> vectors;
};

/// Cyclic complex Jacobi. Intended for the small (<= 2^12) Hermitian matrices
/// this library works with; converges to ~1e-14 off-diagonal mass.
EigResult hermitian_eig(const std::vector<cplx>& m, std::size_t dim);

std::vector<cplx> matmul(const std::vector<cplx>& a, const std::vector<cplx>& b,
                         std::size_t n);
std::vector<cplx> adjoint(const std::vector<cplx>& m, std::size_t n);
double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace qrisnet
