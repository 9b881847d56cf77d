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

#include "doctest.h"

#include <complex>
#include <vector>

#include "qrisnet/kernels/kernels.hpp"
#include "qrisnet/util/rng.hpp"
#include "test_util.hpp"

using namespace qrisnet;
using kern::cplx;

namespace {

std::vector<cplx> random_matrix(std::size_t dim, Rng& rng) {
    std::vector<cplx> m(dim * dim);
    for (cplx& z : m) z = cplx(rng.normal(), rng.normal());
    return m;
}

void random_unitary2(Rng& rng, cplx u[4]) {
    const double t = rng.uniform(0.0, 2.0 * kPi);
    const double a = rng.uniform(0.0, 2.0 * kPi);
    const double b = rng.uniform(0.0, 2.0 * kPi);
    const double c = std::cos(t), s = std::sin(t);
    u[0] = std::exp(cplx(0, a)) * c;
    u[1] = std::exp(cplx(0, b)) * s;
    u[2] = -std::exp(cplx(0, -b)) * s;
    u[3] = std::exp(cplx(0, -a)) * c;
}

}  // namespace

TEST_CASE("kernel backends enumerate") {
    const auto& scalar = kern::table(kern::Backend::kScalar);
    CHECK(std::string(scalar.name) == "scalar");
    if (kern::avx2_supported()) {
        const auto& avx2 = kern::table(kern::Backend::kAvx2);
        CHECK(std::string(avx2.name) == "avx2");
    }
}

TEST_CASE("gate_rows/gate_cols match the naive lifted conjugation") {
    Rng rng(11);
    const auto& kt = kern::table(kern::Backend::kScalar);
    for (std::size_t dim : {std::size_t{2}, std::size_t{8}, std::size_t{64}}) {
        for (std::size_t mask = 1; mask < dim; mask <<= 1) {
            std::vector<cplx> rho = random_matrix(dim, rng);
            cplx u[4];
            random_unitary2(rng, u);

            // Reference: explicit dim x dim single-qubit lift, naive products.
            std::vector<cplx> ufull(dim * dim, cplx(0, 0));
            for (std::size_t i = 0; i < dim; ++i) {
                const std::size_t bi = (i & mask) ? 1 : 0;
                ufull[i * dim + (i & ~mask)] = u[bi * 2 + 0];
                ufull[i * dim + (i | mask)] = u[bi * 2 + 1];
            }
            const std::vector<cplx> expect =
                qtest::naive_conjugate(ufull, rho, dim);

            std::vector<cplx> got = rho;
            kt.gate_rows(got.data(), dim, mask, u);
            kt.gate_cols(got.data(), dim, mask, u);
            CHECK(qtest::max_diff(got, expect) < 1e-12);

            // Accumulating column transform: out += (rows-transformed) U†.
            std::vector<cplx> acc(dim * dim, cplx(0, 0));
            std::vector<cplx> rows_only = rho;
            kt.gate_rows(rows_only.data(), dim, mask, u);
            kt.gate_cols_accum(acc.data(), rows_only.data(), dim, mask, u);
            CHECK(qtest::max_diff(acc, expect) < 1e-12);
        }
    }
}

TEST_CASE("gate_vec matches the pairwise matrix-vector product") {
    Rng rng(12);
    const auto& kt = kern::table(kern::Backend::kScalar);
    for (std::size_t dim : {std::size_t{2}, std::size_t{16}, std::size_t{64}}) {
        for (std::size_t mask = 1; mask < dim; mask <<= 1) {
            std::vector<cplx> v(dim);
            for (cplx& z : v) z = cplx(rng.normal(), rng.normal());
            cplx u[4];
            random_unitary2(rng, u);

            std::vector<cplx> expect(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & mask) continue;
                expect[i] = u[0] * v[i] + u[1] * v[i | mask];
                expect[i | mask] = u[2] * v[i] + u[3] * v[i | mask];
            }
            std::vector<cplx> got = v;
            kt.gate_vec(got.data(), dim, mask, u);
            CHECK(qtest::max_diff(got, expect) < 1e-12);
        }
    }
}

TEST_CASE("matmul and quadform match naive references") {
    Rng rng(13);
    const auto& kt = kern::table(kern::Backend::kScalar);
    for (std::size_t n :
         {std::size_t{1}, std::size_t{3}, std::size_t{5}, std::size_t{64}}) {
        const std::vector<cplx> a = random_matrix(n, rng);
        const std::vector<cplx> b = random_matrix(n, rng);
        std::vector<cplx> c(n * n);
        kt.matmul(c.data(), a.data(), b.data(), n);
        CHECK(qtest::max_diff(c, qtest::naive_matmul(a, b, n)) < 1e-11);

        std::vector<cplx> psi(n);
        for (cplx& z : psi) z = cplx(rng.normal(), rng.normal());
        cplx expect(0, 0);
        for (std::size_t r = 0; r < n; ++r) {
            cplx t(0, 0);
            for (std::size_t col = 0; col < n; ++col)
                t += a[r * n + col] * psi[col];
            expect += std::conj(psi[r]) * t;
        }
        const cplx got = kt.quadform(psi.data(), a.data(), n);
        CHECK(std::abs(got - expect) < 1e-10);
    }
}

TEST_CASE("simd variants agree with the scalar reference") {
    if (!kern::avx2_supported()) {
        MESSAGE("AVX2 not available; skipping backend equivalence");
        return;
    }
    const auto& sc = kern::table(kern::Backend::kScalar);
    const auto& vx = kern::table(kern::Backend::kAvx2);
    Rng rng(14);

    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t dim = 64;
        std::vector<cplx> rho = random_matrix(dim, rng);
        cplx u[4];
        random_unitary2(rng, u);

        for (std::size_t mask = 1; mask < dim; mask <<= 1) {
            std::vector<cplx> a = rho, b = rho;
            sc.gate_rows(a.data(), dim, mask, u);
            vx.gate_rows(b.data(), dim, mask, u);
            CHECK(qtest::max_diff(a, b) < 1e-12);

            sc.gate_cols(a.data(), dim, mask, u);
            vx.gate_cols(b.data(), dim, mask, u);
            CHECK(qtest::max_diff(a, b) < 1e-12);

            std::vector<cplx> acc_a(dim * dim, cplx(0, 0)), acc_b = acc_a;
            sc.gate_cols_accum(acc_a.data(), a.data(), dim, mask, u);
            vx.gate_cols_accum(acc_b.data(), a.data(), dim, mask, u);
            CHECK(qtest::max_diff(acc_a, acc_b) < 1e-12);

            std::vector<cplx> va(rho.begin(), rho.begin() + dim), vb = va;
            sc.gate_vec(va.data(), dim, mask, u);
            vx.gate_vec(vb.data(), dim, mask, u);
            CHECK(qtest::max_diff(va, vb) < 1e-12);
        }

        std::vector<cplx> pa = rho, pb = rho;
        sc.add_scaled(pa.data(), rho.data(), rho.size(), 0.37);
        vx.add_scaled(pb.data(), rho.data(), rho.size(), 0.37);
        CHECK(qtest::max_diff(pa, pb) < 1e-12);

        sc.scale(pa.data(), pa.size(), 0.11);
        vx.scale(pb.data(), pb.size(), 0.11);
        CHECK(qtest::max_diff(pa, pb) < 1e-12);

        for (std::size_t n : {std::size_t{3}, std::size_t{64}}) {
            const std::vector<cplx> a2 = random_matrix(n, rng);
            const std::vector<cplx> b2 = random_matrix(n, rng);
            std::vector<cplx> c1(n * n), c2(n * n);
            sc.matmul(c1.data(), a2.data(), b2.data(), n);
            vx.matmul(c2.data(), a2.data(), b2.data(), n);
            CHECK(qtest::max_diff(c1, c2) < 1e-10);

            std::vector<cplx> psi(n);
            for (cplx& z : psi) z = cplx(rng.normal(), rng.normal());
            CHECK(std::abs(sc.quadform(psi.data(), a2.data(), n) -
                           vx.quadform(psi.data(), a2.data(), n)) < 1e-10);
        }
    }
}
