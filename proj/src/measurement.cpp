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

#include "qrisnet/core/measurement.hpp"

#include <stdexcept>

#include "qrisnet/core/types.hpp"

namespace qrisnet {

std::vector<double> measure_probabilities(const DensityMatrix& rho,
                                          const std::vector<int>& qubits) {
    if (qubits.empty())
        throw std::invalid_argument("measurement qubit list is empty");
    const int n = rho.num_qubits();
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0 || qubits[i] >= n)
            throw std::invalid_argument("measurement qubit out of range");
        for (std::size_t j = i + 1; j < qubits.size(); ++j)
            if (qubits[i] == qubits[j])
                throw std::invalid_argument("measurement qubits not distinct");
    }

    const std::size_t k = qubits.size();
    std::vector<double> probs(std::size_t{1} << k, 0.0);
    const std::size_t dim = rho.dim();
    for (std::size_t z = 0; z < dim; ++z) {
        std::size_t outcome = 0;
        for (std::size_t j = 0; j < k; ++j)
            outcome |= static_cast<std::size_t>(bit_of(z, qubits[j], n))
                       << (k - 1 - j);
        probs[outcome] += rho.at(z, z).real();
    }
    return probs;
}

}  // namespace qrisnet
