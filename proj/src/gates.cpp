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

#include "qrisnet/core/gates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrisnet/core/linalg.hpp"
#include "qrisnet/kernels/kernels.hpp"

namespace qrisnet {
namespace {

bool is_diagonal(const std::vector<cplx>& m, std::size_t dim) {
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if (r != c && std::abs(m[r * dim + c]) > 1e-15) return false;
    return true;
}

void check_targets(const std::vector<int>& targets, int num_qubits) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= num_qubits)
            throw std::invalid_argument("gate target out of range");
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j])
                throw std::invalid_argument("gate targets must be distinct");
    }
}

// Bit offsets of each gate sub-basis index within the register index.
std::vector<std::size_t> sub_offsets(const std::vector<int>& targets,
                                     int num_qubits) {
    const std::size_t k = targets.size();
    std::vector<std::size_t> off(std::size_t{1} << k, 0);
    for (std::size_t s = 0; s < off.size(); ++s) {
        std::size_t o = 0;
        for (std::size_t j = 0; j < k; ++j)
            if ((s >> (k - 1 - j)) & 1u)
                o |= qubit_mask(targets[j], num_qubits);
        off[s] = o;
    }
    return off;
}

// Full-register diagonal factor of a diagonal gate.
std::vector<cplx> full_diag(const Gate& g, int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t gd = g.dim();
    const std::size_t k = g.arity();
    std::vector<cplx> d(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        std::size_t s = 0;
        for (std::size_t j = 0; j < k; ++j)
            s |= static_cast<std::size_t>(bit_of(z, g.targets[j], num_qubits))
                 << (k - 1 - j);
        d[z] = g.matrix[s * gd + s];
    }
    return d;
}

void apply_general_dm(DensityMatrix& rho, const Gate& g) {
    const int n = rho.num_qubits();
    const std::size_t dim = rho.dim();
    const std::size_t gd = g.dim();
    const auto off = sub_offsets(g.targets, n);
    std::size_t tmask = 0;
    for (int t : g.targets) tmask |= qubit_mask(t, n);

    auto& m = rho.mutable_elements();
    std::vector<cplx> x(gd), y(gd);

    // Left pass: m <- U_full m.
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & tmask) continue;
        for (std::size_t c = 0; c < dim; ++c) {
            for (std::size_t s = 0; s < gd; ++s)
                x[s] = m[(base | off[s]) * dim + c];
            for (std::size_t s = 0; s < gd; ++s) {
                cplx acc(0.0, 0.0);
                for (std::size_t t = 0; t < gd; ++t)
                    acc += g.matrix[s * gd + t] * x[t];
                y[s] = acc;
            }
            for (std::size_t s = 0; s < gd; ++s)
                m[(base | off[s]) * dim + c] = y[s];
        }
    }
    // Right pass: m <- m U_full†.
    for (std::size_t r = 0; r < dim; ++r) {
        cplx* row = m.data() + r * dim;
        for (std::size_t base = 0; base < dim; ++base) {
            if (base & tmask) continue;
            for (std::size_t s = 0; s < gd; ++s) x[s] = row[base | off[s]];
            for (std::size_t s = 0; s < gd; ++s) {
                cplx acc(0.0, 0.0);
                for (std::size_t t = 0; t < gd; ++t)
                    acc += x[t] * std::conj(g.matrix[s * gd + t]);
                y[s] = acc;
            }
            for (std::size_t s = 0; s < gd; ++s) row[base | off[s]] = y[s];
        }
    }
}

void apply_general_sv(StateVector& psi, const Gate& g) {
    const int n = psi.num_qubits();
    const std::size_t dim = psi.dim();
    const std::size_t gd = g.dim();
    const auto off = sub_offsets(g.targets, n);
    std::size_t tmask = 0;
    for (int t : g.targets) tmask |= qubit_mask(t, n);

    auto& a = psi.mutable_amplitudes();
    std::vector<cplx> x(gd);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & tmask) continue;
        for (std::size_t s = 0; s < gd; ++s) x[s] = a[base | off[s]];
        for (std::size_t s = 0; s < gd; ++s) {
            cplx acc(0.0, 0.0);
            for (std::size_t t = 0; t < gd; ++t)
                acc += g.matrix[s * gd + t] * x[t];
            a[base | off[s]] = acc;
        }
    }
}

}  // namespace

Gate Gate::make(std::vector<cplx> matrix, std::vector<int> targets) {
    if (targets.empty()) throw std::invalid_argument("gate needs targets");
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j])
                throw std::invalid_argument("gate targets must be distinct");
    const std::size_t dim = std::size_t{1} << targets.size();
    if (matrix.size() != dim * dim)
        throw std::invalid_argument("gate matrix size does not match targets");

    // Unitarity: ||U U† - I||_max <= 1e-10.
    const std::vector<cplx> prod = matmul(matrix, adjoint(matrix, dim), dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            const cplx expect = (r == c) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            if (std::abs(prod[r * dim + c] - expect) > 1e-10)
                throw std::invalid_argument("gate matrix is not unitary");
        }

    Gate g;
    g.diagonal = is_diagonal(matrix, dim);
    g.matrix = std::move(matrix);
    g.targets = std::move(targets);
    return g;
}

Gate Gate::on(std::vector<int> new_targets) const {
    if (new_targets.size() != targets.size())
        throw std::invalid_argument("retarget arity mismatch");
    Gate g = *this;
    g.targets = std::move(new_targets);
    check_targets(g.targets, 1 << 20);  // range checked at apply time
    return g;
}

Gate ry_gate(double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("ry angle must be finite");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return Gate::make({cplx(c, 0), cplx(-s, 0), cplx(s, 0), cplx(c, 0)}, {0});
}

Gate rz_gate(double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("rz angle must be finite");
    const cplx e0 = std::exp(cplx(0.0, -theta / 2.0));
    const cplx e1 = std::exp(cplx(0.0, theta / 2.0));
    return Gate::make({e0, cplx(0, 0), cplx(0, 0), e1}, {0});
}

Gate pauli_x() {
    return Gate::make({cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)}, {0});
}

Gate pauli_y() {
    return Gate::make({cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)}, {0});
}

Gate pauli_z() {
    return Gate::make({cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0)}, {0});
}

Gate identity_gate(int arity) {
    if (arity < 1) throw std::invalid_argument("identity arity must be >= 1");
    const std::size_t dim = std::size_t{1} << arity;
    std::vector<cplx> m(dim * dim, cplx(0, 0));
    for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = cplx(1, 0);
    std::vector<int> t(arity);
    for (int i = 0; i < arity; ++i) t[i] = i;
    return Gate::make(std::move(m), std::move(t));
}

Gate cnot_gate(int control, int target) {
    if (control == target)
        throw std::invalid_argument("cnot control equals target");
    // Basis |c t>: flips t when c = 1.
    std::vector<cplx> m(16, cplx(0, 0));
    m[0 * 4 + 0] = m[1 * 4 + 1] = cplx(1, 0);
    m[2 * 4 + 3] = m[3 * 4 + 2] = cplx(1, 0);
    return Gate::make(std::move(m), {control, target});
}

Gate diagonal_gate(std::vector<cplx> diag, std::vector<int> targets) {
    const std::size_t dim = std::size_t{1} << targets.size();
    if (diag.size() != dim)
        throw std::invalid_argument("diagonal size does not match targets");
    std::vector<cplx> m(dim * dim, cplx(0, 0));
    for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = diag[i];
    return Gate::make(std::move(m), std::move(targets));
}

Gate phase_rotation_unitary(int num_qubits, double phi) {
    if (num_qubits < 1) throw std::invalid_argument("num_qubits must be >= 1");
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<cplx> diag(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        const int pop = __builtin_popcountll(z);
        const double phase = phi * (static_cast<double>(pop) -
                                    static_cast<double>(num_qubits) / 2.0);
        diag[z] = std::exp(cplx(0.0, phase));
    }
    std::vector<int> t(num_qubits);
    for (int i = 0; i < num_qubits; ++i) t[i] = i;
    return diagonal_gate(std::move(diag), std::move(t));
}

void apply_1q_in_place(DensityMatrix& rho, int target, const cplx u[4]) {
    const std::size_t mask = qubit_mask(target, rho.num_qubits());
    auto& k = kern::active();
    k.gate_rows(rho.mutable_elements().data(), rho.dim(), mask, u);
    k.gate_cols(rho.mutable_elements().data(), rho.dim(), mask, u);
}

void apply_1q_in_place(StateVector& psi, int target, const cplx u[4]) {
    const std::size_t mask = qubit_mask(target, psi.num_qubits());
    kern::active().gate_vec(psi.mutable_amplitudes().data(), psi.dim(), mask,
                            u);
}

void apply_cnot_in_place(DensityMatrix& rho, int control, int target) {
    const int n = rho.num_qubits();
    const std::size_t dim = rho.dim();
    const std::size_t cmask = qubit_mask(control, n);
    const std::size_t tmask = qubit_mask(target, n);
    auto& m = rho.mutable_elements();
    for (std::size_t r = 0; r < dim; ++r) {
        if ((r & cmask) && !(r & tmask)) {
            std::swap_ranges(m.begin() + r * dim, m.begin() + (r + 1) * dim,
                             m.begin() + (r | tmask) * dim);
        }
    }
    for (std::size_t r = 0; r < dim; ++r) {
        cplx* row = m.data() + r * dim;
        for (std::size_t c = 0; c < dim; ++c)
            if ((c & cmask) && !(c & tmask)) std::swap(row[c], row[c | tmask]);
    }
}

void apply_cnot_in_place(StateVector& psi, int control, int target) {
    const int n = psi.num_qubits();
    const std::size_t cmask = qubit_mask(control, n);
    const std::size_t tmask = qubit_mask(target, n);
    auto& a = psi.mutable_amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(a[i], a[i | tmask]);
}

void apply_gate_in_place(DensityMatrix& rho, const Gate& g) {
    check_targets(g.targets, rho.num_qubits());
    if (g.dim() > rho.dim())
        throw std::invalid_argument("gate larger than register");
    if (g.arity() == 1) {
        apply_1q_in_place(rho, g.targets[0], g.matrix.data());
        return;
    }
    if (g.diagonal) {
        const std::vector<cplx> d = full_diag(g, rho.num_qubits());
        auto& m = rho.mutable_elements();
        const std::size_t dim = rho.dim();
        for (std::size_t r = 0; r < dim; ++r) {
            const cplx dr = d[r];
            cplx* row = m.data() + r * dim;
            for (std::size_t c = 0; c < dim; ++c)
                row[c] *= dr * std::conj(d[c]);
        }
        return;
    }
    apply_general_dm(rho, g);
}

void apply_gate_in_place(StateVector& psi, const Gate& g) {
    check_targets(g.targets, psi.num_qubits());
    if (g.dim() > psi.dim())
        throw std::invalid_argument("gate larger than register");
    if (g.arity() == 1) {
        apply_1q_in_place(psi, g.targets[0], g.matrix.data());
        return;
    }
    if (g.diagonal) {
        const std::vector<cplx> d = full_diag(g, psi.num_qubits());
        auto& a = psi.mutable_amplitudes();
        for (std::size_t i = 0; i < a.size(); ++i) a[i] *= d[i];
        return;
    }
    apply_general_sv(psi, g);
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g) {
    DensityMatrix out = rho;
    apply_gate_in_place(out, g);
    return out;
}

}  // namespace qrisnet
