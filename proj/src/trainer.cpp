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

#include "qrisnet/training/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "qrisnet/core/fidelity.hpp"
#include "qrisnet/training/gradients.hpp"
#include "qrisnet/training/loss.hpp"
#include "qrisnet/util/parallel.hpp"
#include "qrisnet/util/rng.hpp"

namespace qrisnet {
namespace {

constexpr std::uint64_t kTagInit = 0x696e6974ULL;
constexpr std::uint64_t kTagEpoch = 0x65706f6368ULL;
constexpr std::uint64_t kTagNoise = 0x6e6f697365ULL;

constexpr double kTripleMassFloor = 1e-9;
constexpr double kProbFloor = 1e-12;
constexpr double kGammaLo = 1e-3;

int argmax3(const std::array<double, 3>& p) {
    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (p[k] > p[best]) best = k;
    return best;
}

// Everything one sample contributes to a batch step.
struct Slot {
    const Sample* sample = nullptr;
    double p = 0.0, q = 0.0;  // jittered noise rates
    std::optional<NoiseModel> noise;
    std::optional<HybridInput> input;
    std::optional<DensityMatrix> rho_eff;  // pre-circuit noisy state
    std::array<double, 4> masses{};
    std::array<double, 3> probs{};
    double fidelity = 0.0;
    double ce = 0.0;
    bool correct = false;
    std::vector<double> theta_grads;
    double gamma_gradient = 0.0;
};

// F(rho_ideal, rho_noisy) with both sides taken before the circuit. The
// circuit applies the same unitary to both arguments, and Uhlmann fidelity is
// unitarily invariant, so the pre-circuit value equals the post-circuit one.
// rho_ideal is the zero-noise limit of the propagation: the alpha-mixture of
// the direct and reflected branch states.
double propagation_fidelity(const HybridInput& input, const NoiseModel& noise,
                            const DensityMatrix& rho_eff) {
    StateVector reflected = input.state;
    if (noise.alpha < 1.0) apply_gate_in_place(reflected, noise.u_qris);
    return fidelity_with_mixture2(input.state, reflected, noise.alpha,
                                  rho_eff);
}

struct Pipeline {
    const DatasetMeta* meta;
    const TrainConfig* cfg;
    Ansatz ansatz;
    Gate qris;  // built once; copied into per-sample noise models

    NoiseModel noise_for(const Sample& s, double p, double q) const {
        const double alpha =
            cfg->mode == InputMode::kNoQrisBaseline ? 1.0 : s.alpha;
        return NoiseModel::make(p, q, alpha, qris);
    }

    HybridInput encode(const Sample& s, double gamma) const {
        return encode_sample(s, *meta, cfg->mode, gamma, cfg->gamma_max);
    }

    // Base forward filling the slot caches.
    void base_forward(Slot& slot, const VqcParams& params) const {
        slot.input = encode(*slot.sample, params.gamma);
        slot.noise = noise_for(*slot.sample, slot.p, slot.q);
        slot.rho_eff = effective_state(
            DensityMatrix::from_state(slot.input->state), *slot.noise);
        slot.fidelity =
            propagation_fidelity(*slot.input, *slot.noise, *slot.rho_eff);

        DensityMatrix dm = *slot.rho_eff;
        apply_ansatz(dm, ansatz, params.thetas);

        slot.masses = readout_masses(dm);
        const double mass = slot.masses[0] + slot.masses[1] + slot.masses[2];
        if (mass < kTripleMassFloor)
            slot.probs = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
        else
            slot.probs = {slot.masses[0] / mass, slot.masses[1] / mass,
                          slot.masses[2] / mass};
        slot.ce = cross_entropy(slot.probs, slot.sample->label);
        slot.correct =
            argmax3(slot.probs) == label_to_class_index(slot.sample->label);
    }

    // Full per-sample loss as a function of (gamma, thetas); used for the
    // finite-difference gamma gradient.
    double loss_at(const Slot& slot, const VqcParams& params,
                   double lambda) const {
        HybridInput in = encode(*slot.sample, params.gamma);
        DensityMatrix eff =
            effective_state(DensityMatrix::from_state(in.state), *slot.noise);
        const double fid = propagation_fidelity(in, *slot.noise, eff);
        apply_ansatz(eff, ansatz, params.thetas);

        const std::array<double, 4> masses = readout_masses(eff);
        const double mass = masses[0] + masses[1] + masses[2];
        std::array<double, 3> probs;
        if (mass < kTripleMassFloor)
            probs = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
        else
            probs = {masses[0] / mass, masses[1] / mass, masses[2] / mass};
        return cross_entropy(probs, slot.sample->label) +
               lambda * (1.0 - fid);
    }

    // Shift-rule gradient of the per-sample loss for one circuit angle.
    // The raw two-point rule is applied to the readout masses (single
    // harmonics of each angle) and chained through the renormalization and
    // the log. The fidelity penalty contributes nothing here: the circuit
    // acts identically on both fidelity arguments, so that term is constant
    // in the angles.
    double theta_gradient(const Slot& slot, const VqcParams& params,
                          int index) const {
        const int tclass = label_to_class_index(slot.sample->label);
        const double mass0 =
            slot.masses[0] + slot.masses[1] + slot.masses[2];
        if (mass0 < kTripleMassFloor) return 0.0;          // uniform fallback
        if (slot.probs[tclass] <= kProbFloor) return 0.0;  // clamped log

        VqcParams shifted = params;
        std::array<double, 4> mp{}, mm{};
        for (int sign = 0; sign < 2; ++sign) {
            shifted.thetas[index] =
                params.thetas[index] + (sign == 0 ? 1.0 : -1.0) * kPi / 2.0;
            DensityMatrix dm = *slot.rho_eff;
            apply_ansatz(dm, ansatz, shifted.thetas);
            (sign == 0 ? mp : mm) = readout_masses(dm);
        }

        const double dm_t = 0.5 * (mp[tclass] - mm[tclass]);
        const double d_mass =
            0.5 * ((mp[0] + mp[1] + mp[2]) - (mm[0] + mm[1] + mm[2]));
        return -dm_t / slot.masses[tclass] + d_mass / mass0;
    }

    // All gradients of one sample's loss. The 2|Γ| shifted circuit
    // evaluations and the damping finite difference are independent and run
    // as parallel tasks.
    void sample_gradients(Slot& slot, const VqcParams& params, double lambda,
                          int threads) const {
        const int np = ansatz.param_count();
        slot.theta_grads.assign(np, 0.0);
        slot.gamma_gradient = 0.0;

        const bool want_gamma = cfg->train_gamma;
        const std::size_t jobs = static_cast<std::size_t>(np) + 1;
        parallel_for(jobs, threads, [&](std::size_t j) {
            if (j < static_cast<std::size_t>(np)) {
                slot.theta_grads[j] =
                    theta_gradient(slot, params, static_cast<int>(j));
            } else if (want_gamma) {
                LossFn fn = [&](const VqcParams& p) {
                    return loss_at(slot, p, lambda);
                };
                slot.gamma_gradient =
                    gamma_grad(fn, params, kGammaLo, cfg->gamma_max);
            }
        });
    }
};

}  // namespace

const char* to_string(InputMode m) {
    switch (m) {
        case InputMode::kHybrid:
            return "hybrid";
        case InputMode::kImageOnly:
            return "image-only";
        case InputMode::kChannelOnly:
            return "channel-only";
        case InputMode::kNoQrisBaseline:
            return "no-qris-baseline";
    }
    return "?";
}

InputMode input_mode_from_string(const std::string& s) {
    if (s == "hybrid") return InputMode::kHybrid;
    if (s == "image-only") return InputMode::kImageOnly;
    if (s == "channel-only") return InputMode::kChannelOnly;
    if (s == "no-qris-baseline") return InputMode::kNoQrisBaseline;
    throw std::invalid_argument("unknown input configuration: " + s);
}

HybridInput encode_sample(const Sample& sample, const DatasetMeta& meta,
                          InputMode mode, double gamma, double gamma_max) {
    StateVector image_state =
        mode == InputMode::kChannelOnly
            ? StateVector::basis(5, 0)
            : amplitude_encode_damped(
                  normalize_image(sample.image, kFeatureDim), gamma,
                  gamma_max);
    const double theta =
        mode == InputMode::kImageOnly
            ? 0.0
            : rate_to_theta({sample.rate, meta.r_min, meta.r_max});
    StateVector state =
        tensor_product(image_state, encode_channel_state(theta));
    return HybridInput{std::move(state), gamma, theta};
}

NoiseModel sample_noise_model(const Sample& sample, const TrainConfig& cfg,
                              double p, double q) {
    const double alpha =
        cfg.mode == InputMode::kNoQrisBaseline ? 1.0 : sample.alpha;
    return NoiseModel::make(
        p, q, alpha, phase_rotation_unitary(kRegisterQubits, cfg.qris_phase));
}

TrainResult train(const std::vector<Sample>& train_set,
                  const std::vector<Sample>& test_set, const DatasetMeta& meta,
                  const TrainConfig& cfg) {
    if (train_set.empty() || test_set.empty())
        throw std::invalid_argument("both dataset splits must be non-empty");
    if (cfg.epochs < 1 || cfg.batch_size < 1)
        throw std::invalid_argument("epochs and batch_size must be >= 1");
    if (!(cfg.f_min > 0.0 && cfg.f_min < 1.0))
        throw std::invalid_argument("f_min must lie in (0, 1)");
    if (!(cfg.gamma_max > 0.0 && cfg.gamma_max < 1.0))
        throw std::invalid_argument("gamma_max must lie in (0, 1)");
    if (!(cfg.lambda_growth > 1.0))
        throw std::invalid_argument("lambda_growth must be > 1");
    if (cfg.lambda_init < 0.0)
        throw std::invalid_argument("lambda_init must be >= 0");

    Pipeline pipe{&meta, &cfg, Ansatz::make(cfg.num_layers),
                  phase_rotation_unitary(kRegisterQubits, cfg.qris_phase)};

    VqcParams params;
    params.gamma =
        std::min(cfg.gamma_max, std::max(kGammaLo, cfg.gamma_init));
    params.thetas.resize(pipe.ansatz.param_count());
    {
        Rng init_rng(derive_seed(cfg.seed, kTagInit));
        for (double& t : params.thetas)
            t = init_rng.uniform(-kPi / 8.0, kPi / 8.0);
    }

    AdamConfig adam_cfg;
    adam_cfg.learning_rate = cfg.learning_rate;
    adam_cfg.weight_decay = cfg.weight_decay;
    adam_cfg.gamma_lo = kGammaLo;
    adam_cfg.gamma_max = cfg.gamma_max;
    adam_cfg.update_gamma = cfg.train_gamma;
    AdamState adam = AdamState::init(pipe.ansatz.param_count());

    double lambda = cfg.lambda_init;
    const double cap = cfg.lambda_cap();

    TrainResult result;
    result.ansatz = pipe.ansatz;

    const int n_train = static_cast<int>(train_set.size());
    std::vector<std::size_t> order(train_set.size());
    std::iota(order.begin(), order.end(), 0);

    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        Rng epoch_rng(derive_seed(cfg.seed, kTagEpoch, epoch));
        epoch_rng.shuffle(order);
        Rng noise_rng(derive_seed(cfg.seed, kTagNoise, epoch));

        double sum_total = 0.0, sum_ce = 0.0, sum_fid = 0.0;
        int correct = 0;

        // One optimizer step per sample; batch_size sets the cadence of the
        // penalty adaptation (block-mean fidelity against f_min).
        double block_fid = 0.0;
        int block_count = 0;
        int block_index = 0;
        for (int s = 0; s < n_train; ++s) {
            Slot slot;
            slot.sample = &train_set[order[s]];
            const double up = 2.0 * noise_rng.uniform() - 1.0;
            const double uq = 2.0 * noise_rng.uniform() - 1.0;
            slot.p = std::clamp(cfg.noise_p * (1.0 + cfg.noise_jitter * up),
                                0.0, 1.0);
            slot.q = std::clamp(cfg.noise_q * (1.0 + cfg.noise_jitter * uq),
                                0.0, 1.0);

            pipe.base_forward(slot, params);

            if (cfg.lambda_per_sample)
                lambda = lambda_update(lambda, slot.fidelity, cfg.f_min,
                                       cfg.lambda_growth, cap);

            sum_ce += slot.ce;
            sum_fid += slot.fidelity;
            sum_total += slot.ce + lambda * (1.0 - slot.fidelity);
            if (slot.correct) ++correct;

            pipe.sample_gradients(slot, params, lambda, cfg.threads);
            adam_step(params, slot.theta_grads, slot.gamma_gradient, adam,
                      adam_cfg);

            block_fid += slot.fidelity;
            ++block_count;
            if (block_count == cfg.batch_size || s + 1 == n_train) {
                const double mean_fid = block_fid / block_count;
                if (!cfg.lambda_per_sample)
                    lambda = lambda_update(lambda, mean_fid, cfg.f_min,
                                           cfg.lambda_growth, cap);
                ++block_index;
                result.steps.push_back(
                    {epoch, block_index, lambda, params.gamma, mean_fid});
                block_fid = 0.0;
                block_count = 0;
            }
        }

        EpochMetrics em;
        em.epoch = epoch;
        em.mean_total = sum_total / n_train;
        em.mean_ce = sum_ce / n_train;
        em.mean_fidelity = sum_fid / n_train;
        em.train_accuracy = static_cast<double>(correct) / n_train;
        em.test_accuracy =
            evaluate(test_set, meta, params, pipe.ansatz, cfg).accuracy;
        em.lambda = lambda;
        em.gamma = params.gamma;
        result.epochs.push_back(em);
    }

    result.params = std::move(params);
    return result;
}

double sample_loss(const Sample& sample, const DatasetMeta& meta,
                   const TrainConfig& cfg, const VqcParams& params, double p,
                   double q, double lambda) {
    Pipeline pipe{&meta, &cfg, Ansatz::make(cfg.num_layers),
                  phase_rotation_unitary(kRegisterQubits, cfg.qris_phase)};
    Slot slot;
    slot.sample = &sample;
    slot.p = p;
    slot.q = q;
    slot.noise = pipe.noise_for(sample, p, q);
    return pipe.loss_at(slot, params, lambda);
}

SampleGradients sample_gradients(const Sample& sample, const DatasetMeta& meta,
                                 const TrainConfig& cfg,
                                 const VqcParams& params, double p, double q,
                                 double lambda) {
    Pipeline pipe{&meta, &cfg, Ansatz::make(cfg.num_layers),
                  phase_rotation_unitary(kRegisterQubits, cfg.qris_phase)};
    Slot slot;
    slot.sample = &sample;
    slot.p = p;
    slot.q = q;
    pipe.base_forward(slot, params);
    pipe.sample_gradients(slot, params, lambda, /*threads=*/1);

    SampleGradients out;
    out.loss = slot.ce + lambda * (1.0 - slot.fidelity);
    out.theta_grads = std::move(slot.theta_grads);
    out.gamma_gradient = slot.gamma_gradient;
    return out;
}

EvalResult evaluate(const std::vector<Sample>& samples, const DatasetMeta& meta,
                    const VqcParams& params, const Ansatz& ansatz,
                    const TrainConfig& cfg) {
    if (samples.empty())
        throw std::invalid_argument("evaluation set is empty");

    const Gate qris = phase_rotation_unitary(kRegisterQubits, cfg.qris_phase);
    struct Cell {
        int pred = 0, truth = 0;
        double fid = 0.0;
    };
    std::vector<Cell> cells(samples.size());

    parallel_for(samples.size(), cfg.threads, [&](std::size_t i) {
        const Sample& s = samples[i];
        const HybridInput in =
            encode_sample(s, meta, cfg.mode, params.gamma, cfg.gamma_max);
        const double alpha =
            cfg.mode == InputMode::kNoQrisBaseline ? 1.0 : s.alpha;
        const NoiseModel nm =
            NoiseModel::make(cfg.noise_p, cfg.noise_q, alpha, qris);
        const ForwardLite fw = forward_lite(in, params, nm, ansatz);
        cells[i] = {argmax3(fw.probs), label_to_class_index(s.label),
                    fw.fidelity};
    });

    EvalResult out;
    out.n = static_cast<int>(samples.size());
    int correct = 0;
    double fid = 0.0;
    for (const Cell& c : cells) {
        out.confusion[c.truth][c.pred] += 1;
        if (c.pred == c.truth) ++correct;
        fid += c.fid;
    }
    out.accuracy = static_cast<double>(correct) / out.n;
    out.mean_fidelity = fid / out.n;
    return out;
}

}  // namespace qrisnet
