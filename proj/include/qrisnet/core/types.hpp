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

namespace qrisnet {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Basis-index convention, fixed once for the whole library:
// qubit 0 is the MOST significant bit of a computational-basis index.
// For an n-qubit register, qubit q maps to bit (n - 1 - q) of the index.
inline std::size_t qubit_mask(int qubit, int num_qubits) {
    return std::size_t{1} << (num_qubits - 1 - qubit);
}

inline int bit_of(std::size_t index, int qubit, int num_qubits) {
    return static_cast<int>((index >> (num_qubits - 1 - qubit)) & 1u);
}

}  // namespace qrisnet
