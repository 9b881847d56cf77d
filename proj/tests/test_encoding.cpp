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

#include <cmath>

#include "qrisnet/encoding/encoding.hpp"
#include "qrisnet/util/rng.hpp"
#include "test_util.hpp"

using namespace qrisnet;

TEST_CASE("normalize_image pooling and normalization") {
    const ImageFeature f = normalize_image({3.0, 4.0}, 2);
    CHECK(f.values[0] == doctest::Approx(0.6));
    CHECK(f.values[1] == doctest::Approx(0.8));

    const ImageFeature id = normalize_image({1.0, 0.0, 0.0, 0.0}, 4);
    CHECK(id.values[0] == doctest::Approx(1.0));
    CHECK(id.values[3] == doctest::Approx(0.0));

    // Eight ones pool pairwise to four ones, normalized to 1/2 each.
    const ImageFeature pooled =
        normalize_image({1, 1, 1, 1, 1, 1, 1, 1}, 4);
    for (double v : pooled.values) CHECK(v == doctest::Approx(0.5));

    // Zero-padding upward.
    const ImageFeature padded = normalize_image({3.0, 4.0}, 4);
    CHECK(padded.values[0] == doctest::Approx(0.6));
    CHECK(padded.values[2] == doctest::Approx(0.0));

    CHECK_THROWS_AS(normalize_image({}, 4), std::invalid_argument);
    CHECK_THROWS_AS(normalize_image({0.0, 0.0, 0.0}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(normalize_image({1.0, 2.0}, 3), std::invalid_argument);
    // Pooling can cancel a signed vector into zero; that is degenerate too.
    CHECK_THROWS_AS(normalize_image({1.0, -1.0}, 1), std::invalid_argument);
}

TEST_CASE("rate_to_theta mapping") {
    CHECK(rate_to_theta({0.0, 0.0, 8.0}) == doctest::Approx(0.0));
    CHECK(rate_to_theta({8.0, 0.0, 8.0}) == doctest::Approx(kPi));
    CHECK(rate_to_theta({4.0, 0.0, 8.0}) == doctest::Approx(kPi / 2.0));
    // Clamped outside the declared bounds.
    CHECK(rate_to_theta({-3.0, 0.0, 8.0}) == doctest::Approx(0.0));
    CHECK(rate_to_theta({99.0, 0.0, 8.0}) == doctest::Approx(kPi));

    CHECK_THROWS_AS(rate_to_theta({std::nan(""), 0.0, 8.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(rate_to_theta({1.0, 5.0, 5.0}), std::invalid_argument);

    // Monotone non-decreasing in the rate.
    Rng rng(41);
    double prev = -1.0;
    for (double r = -1.0; r <= 9.0; r += 0.37) {
        const double t = rate_to_theta({r, 0.0, 8.0});
        CHECK(t >= prev);
        prev = t;
    }
}

TEST_CASE("amplitude_encode_damped worked values") {
    // gamma = 0.85 on e0: (0.85, 0, sqrt(1 - 0.85^2), 0).
    const ImageFeature e0{{1.0, 0.0}, 2, 1, 1};
    const StateVector s = amplitude_encode_damped(e0, 0.85);
    const double residual = std::sqrt(1.0 - 0.85 * 0.85);
    CHECK(s.num_qubits() == 2);
    CHECK(s.amplitude(0).real() == doctest::Approx(0.85));
    CHECK(std::abs(s.amplitude(1)) < 1e-15);
    CHECK(s.amplitude(2).real() == doctest::Approx(residual));
    CHECK(s.amplitude(2).real() == doctest::Approx(0.5268).epsilon(1e-3));
    CHECK(std::abs(s.amplitude(3)) < 1e-15);

    const ImageFeature f{{0.6, 0.8}, 2, 1, 1};
    const StateVector s2 = amplitude_encode_damped(f, 0.85);
    CHECK(s2.amplitude(0).real() == doctest::Approx(0.51));
    CHECK(s2.amplitude(1).real() == doctest::Approx(0.68));
    CHECK(s2.amplitude(2).real() == doctest::Approx(residual));
    CHECK(s2.norm() == doctest::Approx(1.0).epsilon(1e-12));

    // gamma near its ceiling: residual bounded by sqrt(1 - gamma_max^2).
    const StateVector s3 = amplitude_encode_damped(e0, 0.85, 0.85);
    CHECK(s3.amplitude(2).real() <= std::sqrt(1.0 - 0.85 * 0.85) + 1e-12);

    CHECK_THROWS_AS(amplitude_encode_damped(e0, 0.0), std::domain_error);
    CHECK_THROWS_AS(amplitude_encode_damped(e0, 0.9, 0.85),
                    std::domain_error);
    CHECK_THROWS_AS(amplitude_encode_damped(e0, -0.2), std::domain_error);
    const ImageFeature bad{{0.5, 0.5}, 2, 1, 1};
    CHECK_THROWS_AS(amplitude_encode_damped(bad, 0.5),
                    std::invalid_argument);
}

TEST_CASE("damped encoding norm and exact feature block") {
    Rng rng(42);
    for (int rep = 0; rep < 300; ++rep) {
        const int dim = 16;
        ImageFeature f;
        f.values = qtest::random_unit_real(dim, rng);
        const double gamma = rng.uniform(1e-3, 0.85);
        const StateVector s = amplitude_encode_damped(f, gamma, 0.85);
        CHECK(std::abs(s.norm() - 1.0) <= 1e-10);
        for (int i = 0; i < dim; ++i)
            CHECK(std::abs(s.amplitude(i).real() - gamma * f.values[i]) <=
                  1e-12);
        for (std::size_t i = dim + 1; i < s.dim(); ++i)
            CHECK(std::abs(s.amplitude(i)) == 0.0);
    }
}

TEST_CASE("encode_channel_state endpoints") {
    const StateVector t0 = encode_channel_state(0.0);
    CHECK(t0.amplitude(0).real() == doctest::Approx(1.0));
    const StateVector t1 = encode_channel_state(kPi);
    CHECK(t1.amplitude(1).real() == doctest::Approx(1.0));
    const StateVector th = encode_channel_state(kPi / 2.0);
    CHECK(th.amplitude(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(th.amplitude(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK_THROWS_AS(encode_channel_state(-0.1), std::domain_error);
    CHECK_THROWS_AS(encode_channel_state(3.2), std::domain_error);
}

TEST_CASE("hybrid_encode worked index example") {
    // e0 image (16-dim), gamma 0.85, theta = pi: amplitude 0.85 at basis
    // index 1 and the residual at index 16*2 + 1 = 33.
    ImageFeature e0;
    e0.values.assign(16, 0.0);
    e0.values[0] = 1.0;
    const RateObservation full{8.0, 0.0, 8.0};
    const HybridInput h = hybrid_encode(e0, full, 0.85);
    CHECK(h.state.num_qubits() == 6);
    CHECK(h.theta_used == doctest::Approx(kPi));
    CHECK(h.state.amplitude(1).real() == doctest::Approx(0.85));
    CHECK(h.state.amplitude(33).real() ==
          doctest::Approx(std::sqrt(1.0 - 0.85 * 0.85)));
    CHECK(std::abs(h.state.norm() - 1.0) <= 1e-10);
}

TEST_CASE("hybrid_encode equals its independent composition") {
    Rng rng(43);
    for (int rep = 0; rep < 50; ++rep) {
        ImageFeature f;
        f.values = qtest::random_unit_real(16, rng);
        const RateObservation obs{rng.uniform(0.0, 8.0), 0.0, 8.0};
        const double gamma = rng.uniform(1e-3, 0.85);

        const HybridInput h = hybrid_encode(f, obs, gamma);
        const StateVector expect = tensor_product(
            amplitude_encode_damped(f, gamma),
            encode_channel_state(rate_to_theta(obs)));
        for (std::size_t i = 0; i < expect.dim(); ++i)
            CHECK(std::abs(h.state.amplitude(i) - expect.amplitude(i)) <=
                  1e-14);
        CHECK(std::abs(h.state.norm() - 1.0) <= 1e-10);
    }

    // Wrong feature width cannot make a six-qubit register.
    ImageFeature small;
    small.values = qtest::random_unit_real(8, rng);
    CHECK_THROWS_AS(hybrid_encode(small, {1.0, 0.0, 8.0}, 0.5),
                    std::invalid_argument);
}
