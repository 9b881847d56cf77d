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

#include "qrisnet/dataset/dataset.hpp"
#include "qrisnet/training/adam.hpp"
#include "qrisnet/training/gradients.hpp"
#include "qrisnet/training/loss.hpp"
#include "qrisnet/training/trainer.hpp"
#include "qrisnet/util/rng.hpp"
#include "test_util.hpp"

using namespace qrisnet;

TEST_CASE("cross entropy worked values") {
    CHECK(cross_entropy({1.0, 0.0, 0.0}, -1) == doctest::Approx(0.0));
    CHECK(cross_entropy({1.0 / 3, 1.0 / 3, 1.0 / 3}, 0) ==
          doctest::Approx(std::log(3.0)));
    CHECK(cross_entropy({0.5, 0.3, 0.2}, 0) ==
          doctest::Approx(-std::log(0.3)));
    CHECK_THROWS_AS(cross_entropy({0.5, 0.3, 0.2}, 2),
                    std::invalid_argument);
    CHECK(label_to_class_index(-1) == 0);
    CHECK(label_to_class_index(0) == 1);
    CHECK(label_to_class_index(1) == 2);
}

TEST_CASE("total loss identity") {
    ForwardLite fw;
    fw.probs = {1.0, 0.0, 0.0};
    fw.fidelity = 1.0;
    CHECK(total_loss(fw, -1, 1.0).total == doctest::Approx(0.0));

    fw.probs = {0.2, 0.2, 0.6};
    fw.fidelity = 0.9;
    const LossBreakdown lb = total_loss(fw, 1, 1.0);
    CHECK(lb.total ==
          doctest::Approx(-std::log(0.6) + 1.0 * 0.1).epsilon(1e-12));
    CHECK(lb.total == doctest::Approx(lb.ce + lb.lambda * lb.fid_penalty)
                          .epsilon(1e-12));

    fw.fidelity = 0.95;
    fw.probs = {std::exp(-1.0), 1.0 - std::exp(-1.0) - 0.1, 0.1};
    const LossBreakdown lb2 = total_loss(fw, -1, 2.0);
    CHECK(lb2.total == doctest::Approx(1.0 + 2.0 * 0.05).epsilon(1e-12));

    // lambda = 0 disables the penalty (ablation mode); negative is rejected.
    CHECK(total_loss(fw, -1, 0.0).total == doctest::Approx(1.0));
    CHECK_THROWS_AS(total_loss(fw, -1, -0.5), std::invalid_argument);
}

TEST_CASE("shift rule on a plain expectation objective") {
    // L(theta) = <Z> after R_y(theta)|0> = cos(theta).
    const Ansatz a = Ansatz::make(1);
    auto expectation = [](const VqcParams& p) {
        StateVector psi = StateVector::basis(1, 0);
        apply_gate_in_place(psi, ry_gate(p.thetas[0]));
        const double p0 = std::norm(psi.amplitude(0));
        const double p1 = std::norm(psi.amplitude(1));
        return p0 - p1;
    };
    VqcParams params;
    params.gamma = 0.5;
    params.thetas = {0.0};

    CHECK(param_shift_grad(expectation, params, 0) ==
          doctest::Approx(0.0).epsilon(1e-12));

    params.thetas = {kPi / 2.0};
    CHECK(param_shift_grad(expectation, params, 0) ==
          doctest::Approx(-1.0).epsilon(1e-12));

    params.thetas = {kPi / 4.0};
    const double got = param_shift_grad(expectation, params, 0);
    CHECK(got == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(got ==
          doctest::Approx(finite_diff_grad(expectation, params, 0))
              .epsilon(1e-6));

    CHECK_THROWS_AS(param_shift_grad(expectation, params, 5),
                    std::invalid_argument);
}

TEST_CASE("gamma finite difference") {
    auto constant = [](const VqcParams&) { return 3.0; };
    VqcParams p;
    p.gamma = 0.5;
    p.thetas = {};
    CHECK(std::abs(gamma_grad(constant, p, 1e-3, 0.85)) <= 1e-8);

    auto quadratic = [](const VqcParams& q) { return q.gamma * q.gamma; };
    CHECK(gamma_grad(quadratic, p, 1e-3, 0.85) ==
          doctest::Approx(1.0).epsilon(1e-6));

    // At the ceiling the step adapts instead of leaving the domain.
    p.gamma = 0.85;
    CHECK(gamma_grad(quadratic, p, 1e-3, 0.85) ==
          doctest::Approx(2.0 * 0.85).epsilon(1e-3));
}

TEST_CASE("training gradients match finite differences of the real loss") {
    Rng rng(61);
    auto [samples, meta] = generate(12, 99);

    TrainConfig cfg;
    cfg.num_layers = 2;
    cfg.mode = InputMode::kHybrid;

    const Ansatz a = Ansatz::make(cfg.num_layers);
    for (int rep = 0; rep < 3; ++rep) {
        const Sample& s = samples[rng.uniform_int(samples.size())];
        VqcParams params;
        params.gamma = rng.uniform(0.2, 0.8);
        params.thetas.resize(a.param_count());
        for (double& t : params.thetas) t = rng.uniform(-kPi, kPi);

        const double p = rng.uniform(0.0, 0.1);
        const double q = rng.uniform(0.0, 0.05);
        const double lambda = rng.uniform(0.0, 2.0);

        const SampleGradients sg =
            sample_gradients(s, meta, cfg, params, p, q, lambda);
        LossFn fn = [&](const VqcParams& pp) {
            return sample_loss(s, meta, cfg, pp, p, q, lambda);
        };
        CHECK(sg.loss == doctest::Approx(fn(params)).epsilon(1e-12));

        for (int i = 0; i < a.param_count(); i += 5) {
            const double fd = finite_diff_grad(fn, params, i, 1e-5);
            CHECK(std::abs(sg.theta_grads[i] - fd) <= 1e-5);
        }
        // gamma gradient against a wider two-point check.
        VqcParams lo = params, hi = params;
        hi.gamma = std::min(params.gamma + 1e-4, 0.85);
        lo.gamma = std::max(params.gamma - 1e-4, 1e-3);
        const double fd_gamma = (fn(hi) - fn(lo)) / (hi.gamma - lo.gamma);
        CHECK(std::abs(sg.gamma_gradient - fd_gamma) <= 1e-6);
    }
}

TEST_CASE("adam step worked behaviors") {
    const int n = 4;
    AdamConfig cfg;
    cfg.weight_decay = 0.0;
    AdamState st = AdamState::init(n);

    VqcParams p;
    p.gamma = 0.5;
    p.thetas = {0.1, -0.2, 0.3, -0.4};
    const VqcParams before = p;

    // Zero gradients, zero decay: parameters unchanged.
    adam_step(p, {0, 0, 0, 0}, 0.0, st, cfg);
    for (int i = 0; i < n; ++i)
        CHECK(p.thetas[i] == doctest::Approx(before.thetas[i]));
    CHECK(p.gamma == doctest::Approx(before.gamma));

    // Fresh state, unit gradient: first step is about -lr per coordinate.
    AdamState st2 = AdamState::init(n);
    VqcParams p2;
    p2.gamma = 0.5;
    p2.thetas = {0.0, 0.0, 0.0, 0.0};
    adam_step(p2, {1, 1, 1, 1}, 0.0, st2, cfg);
    for (int i = 0; i < n; ++i)
        CHECK(p2.thetas[i] ==
              doctest::Approx(-cfg.learning_rate).epsilon(1e-6));

    // gamma projection clamps at the ceiling.
    AdamState st3 = AdamState::init(0);
    VqcParams p3;
    p3.gamma = 0.849999;
    p3.thetas = {};
    adam_step(p3, {}, -100.0, st3, cfg);  // pushes gamma up
    CHECK(p3.gamma == doctest::Approx(cfg.gamma_max));

    CHECK_THROWS_AS(adam_step(p3, {1.0}, 0.0, st3, cfg),
                    std::invalid_argument);
}

TEST_CASE("lambda update rule") {
    CHECK(lambda_update(1.0, 0.97, 0.95, 1.1, 100.0) == doctest::Approx(1.0));
    CHECK(lambda_update(1.0, 0.90, 0.95, 1.1, 100.0) == doctest::Approx(1.1));
    double l = 1.0;
    for (int k = 0; k < 100; ++k) l = lambda_update(l, 0.5, 0.95, 1.1, 100.0);
    CHECK(l == doctest::Approx(100.0));
    // lambda = 0 stays off even under violations.
    CHECK(lambda_update(0.0, 0.5, 0.95, 1.1, 0.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(lambda_update(-1.0, 0.5, 0.95, 1.1, 100.0),
                    std::invalid_argument);
}

TEST_CASE("short training run: determinism and constraint mechanics") {
    auto [samples, meta] = generate(30, 7);
    auto [train_set, test_set] = split(samples, 0.7, 7);

    TrainConfig cfg;
    cfg.epochs = 2;
    cfg.batch_size = 10;
    cfg.seed = 7;
    cfg.threads = 2;

    const TrainResult r1 = train(train_set, test_set, meta, cfg);
    const TrainResult r2 = train(train_set, test_set, meta, cfg);

    REQUIRE(r1.epochs.size() == 2);
    for (std::size_t e = 0; e < r1.epochs.size(); ++e) {
        CHECK(r1.epochs[e].mean_total == r2.epochs[e].mean_total);
        CHECK(r1.epochs[e].test_accuracy == r2.epochs[e].test_accuracy);
        CHECK(r1.epochs[e].gamma == r2.epochs[e].gamma);
        CHECK(r1.epochs[e].lambda == r2.epochs[e].lambda);
    }
    for (std::size_t i = 0; i < r1.params.thetas.size(); ++i)
        CHECK(r1.params.thetas[i] == r2.params.thetas[i]);

    // gamma feasible and lambda monotone at every step.
    double prev_lambda = cfg.lambda_init;
    for (const StepRecord& st : r1.steps) {
        CHECK(st.gamma_after > 0.0);
        CHECK(st.gamma_after <= cfg.gamma_max);
        CHECK(st.lambda_after >= prev_lambda);
        CHECK(st.lambda_after <= cfg.lambda_cap());
        prev_lambda = st.lambda_after;
    }

    CHECK_THROWS_AS(train({}, test_set, meta, cfg), std::invalid_argument);
}

TEST_CASE("noiseless training keeps fidelity pinned at one") {
    auto [samples, meta] = generate(24, 11);
    auto [train_set, test_set] = split(samples, 0.7, 11);

    TrainConfig cfg;
    cfg.epochs = 1;
    cfg.batch_size = 8;
    cfg.noise_p = 0.0;
    cfg.noise_q = 0.0;
    cfg.lambda_init = 50.0;
    cfg.seed = 3;

    const TrainResult r = train(train_set, test_set, meta, cfg);
    CHECK(std::abs(r.epochs.back().mean_fidelity - 1.0) <= 1e-10);
    // Penalty inert: lambda never grows in noiseless mode.
    CHECK(r.epochs.back().lambda == doctest::Approx(50.0));
}
