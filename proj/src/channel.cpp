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

#include "qrisnet/channels/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qrisnet/core/linalg.hpp"
#include "qrisnet/core/types.hpp"
#include "qrisnet/kernels/kernels.hpp"

namespace qrisnet {

QuantumChannel QuantumChannel::make(std::vector<std::vector<cplx>> kraus,
                                    int arity, std::string label) {
    if (arity < 1) throw std::invalid_argument("channel arity must be >= 1");
    if (kraus.empty())
        throw std::invalid_argument("channel needs at least one Kraus op");
    const std::size_t dim = std::size_t{1} << arity;
    for (const auto& k : kraus)
        if (k.size() != dim * dim)
            throw std::invalid_argument("Kraus operator size mismatch");

    // CPTP completeness: sum K† K = I within 1e-10.
    std::vector<cplx> sum(dim * dim, cplx(0.0, 0.0));
    for (const auto& k : kraus) {
        const std::vector<cplx> kk = matmul(adjoint(k, dim), k, dim);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += kk[i];
    }
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            const cplx expect = (r == c) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            if (std::abs(sum[r * dim + c] - expect) > 1e-10)
                throw std::invalid_argument(
                    "Kraus set is not trace-preserving: " + label);
        }

    QuantumChannel ch;
    ch.kraus = std::move(kraus);
    ch.arity = arity;
    ch.label = std::move(label);
    return ch;
}

QuantumChannel identity_channel(int arity) {
    const std::size_t dim = std::size_t{1} << arity;
    std::vector<cplx> id(dim * dim, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = cplx(1.0, 0.0);
    return QuantumChannel::make({std::move(id)}, arity, "identity");
}

QuantumChannel depolarizing_channel(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("depolarizing probability outside [0,1]");
    const double w0 = std::sqrt(1.0 - p);
    const double w = std::sqrt(p / 3.0);
    std::vector<std::vector<cplx>> kraus;
    kraus.push_back({cplx(w0, 0), cplx(0, 0), cplx(0, 0), cplx(w0, 0)});
    if (p > 0.0) {
        kraus.push_back({cplx(0, 0), cplx(w, 0), cplx(w, 0), cplx(0, 0)});
        kraus.push_back({cplx(0, 0), cplx(0, -w), cplx(0, w), cplx(0, 0)});
        kraus.push_back({cplx(w, 0), cplx(0, 0), cplx(0, 0), cplx(-w, 0)});
    }
    return QuantumChannel::make(std::move(kraus), 1, "depolarizing");
}

QuantumChannel dephasing_channel(double q) {
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("dephasing probability outside [0,1]");
    const double w0 = std::sqrt(1.0 - q);
    const double w = std::sqrt(q);
    std::vector<std::vector<cplx>> kraus;
    kraus.push_back({cplx(w0, 0), cplx(0, 0), cplx(0, 0), cplx(w0, 0)});
    if (q > 0.0)
        kraus.push_back({cplx(w, 0), cplx(0, 0), cplx(0, 0), cplx(-w, 0)});
    return QuantumChannel::make(std::move(kraus), 1, "dephasing");
}

QuantumChannel compose(const QuantumChannel& outer,
                       const QuantumChannel& inner) {
    if (outer.arity != inner.arity)
        throw std::invalid_argument("channel composition arity mismatch");
    const std::size_t dim = outer.dim();
    std::vector<std::vector<cplx>> kraus;
    kraus.reserve(outer.kraus.size() * inner.kraus.size());
    for (const auto& ko : outer.kraus)
        for (const auto& ki : inner.kraus) kraus.push_back(matmul(ko, ki, dim));
    return QuantumChannel::make(std::move(kraus), outer.arity,
                                outer.label + "∘" + inner.label);
}

QuantumChannel lift_to_register(const QuantumChannel& ch, int target,
                                int num_qubits) {
    if (ch.arity != 1)
        throw std::invalid_argument("lift_to_register expects a 1-qubit channel");
    if (target < 0 || target >= num_qubits)
        throw std::invalid_argument("lift target out of range");
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t mask = qubit_mask(target, num_qubits);

    std::vector<std::vector<cplx>> lifted;
    lifted.reserve(ch.kraus.size());
    for (const auto& k : ch.kraus) {
        std::vector<cplx> full(dim * dim, cplx(0.0, 0.0));
        for (std::size_t z = 0; z < dim; ++z) {
            const std::size_t b = (z & mask) ? 1 : 0;
            // Row z couples only to columns equal outside the target bit.
            full[z * dim + (z & ~mask)] += k[b * 2 + 0];
            full[z * dim + (z | mask)] += k[b * 2 + 1];
        }
        lifted.push_back(std::move(full));
    }
    return QuantumChannel::make(std::move(lifted), num_qubits,
                                ch.label + "@q" + std::to_string(target));
}

DensityMatrix apply_channel(const DensityMatrix& rho,
                            const QuantumChannel& ch) {
    if (ch.arity != rho.num_qubits())
        throw std::invalid_argument(
            "apply_channel arity mismatch (lift the channel first)");
    const std::size_t dim = rho.dim();
    std::vector<cplx> out(dim * dim, cplx(0.0, 0.0));
    std::vector<cplx> tmp(dim * dim);
    for (const auto& k : ch.kraus) {
        kern::active().matmul(tmp.data(), k.data(), rho.elements().data(),
                              dim);
        const std::vector<cplx> kd = adjoint(k, dim);
        std::vector<cplx> term(dim * dim);
        kern::active().matmul(term.data(), tmp.data(), kd.data(), dim);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
    }
    return DensityMatrix::from_matrix_unchecked(std::move(out),
                                                rho.num_qubits());
}

void apply_local_channel_in_place(DensityMatrix& rho, int target,
                                  const QuantumChannel& ch) {
    if (ch.arity != 1)
        throw std::invalid_argument("local channel must be single-qubit");
    const int n = rho.num_qubits();
    if (target < 0 || target >= n)
        throw std::invalid_argument("local channel target out of range");
    const std::size_t dim = rho.dim();
    const std::size_t mask = qubit_mask(target, n);
    const auto& kt = kern::active();

    if (ch.kraus.size() == 1) {
        kt.gate_rows(rho.mutable_elements().data(), dim, mask,
                     ch.kraus[0].data());
        kt.gate_cols(rho.mutable_elements().data(), dim, mask,
                     ch.kraus[0].data());
        return;
    }

    std::vector<cplx> out(dim * dim, cplx(0.0, 0.0));
    std::vector<cplx> scratch(dim * dim);
    for (const auto& k : ch.kraus) {
        scratch = rho.elements();
        kt.gate_rows(scratch.data(), dim, mask, k.data());
        kt.gate_cols_accum(out.data(), scratch.data(), dim, mask, k.data());
    }
    rho.mutable_elements() = std::move(out);
}

}  // namespace qrisnet
