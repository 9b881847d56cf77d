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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qrisnet/dataset/dataset.hpp"
#include "qrisnet/training/adam.hpp"
#include "qrisnet/vqc/forward.hpp"

namespace qrisnet {

/// Input-preparation variants of the ablation study. All run the identical
/// pipeline; they differ only in what reaches the encoder:
///   kImageOnly       channel angle forced to 0
///   kChannelOnly     image register prepared as |0...0>
///   kNoQrisBaseline  alpha forced to 1 (direct path only)
enum class InputMode { kHybrid, kImageOnly, kChannelOnly, kNoQrisBaseline };

const char* to_string(InputMode m);
InputMode input_mode_from_string(const std::string& s);

struct TrainConfig {
    int epochs = 10;
    int batch_size = 50;
    int num_layers = 2;
    double learning_rate = 1e-3;
    double weight_decay = 2e-3;
    double lambda_init = 1.0;
    double lambda_growth = 1.1;
    double lambda_cap_factor = 100.0;  // cap = factor * lambda_init
    double f_min = 0.95;
    double gamma_max = 0.85;
    double gamma_init = 0.85;
    double noise_p = 0.05;
    double noise_q = 0.03;
    double noise_jitter = 0.5;  // per-sample uniform in nominal*(1 +- jitter)
    double qris_phase = 0.78539816339744830962;  // pi/4
    std::uint64_t seed = 1;
    InputMode mode = InputMode::kHybrid;
    bool lambda_per_sample = false;  // default: batch-mean fidelity check
    bool train_gamma = true;
    int threads = 0;  // 0 = hardware concurrency

    double lambda_cap() const { return lambda_cap_factor * lambda_init; }
};

struct EpochMetrics {
    int epoch = 0;  // 1-based
    double mean_total = 0.0;
    double mean_ce = 0.0;
    double mean_fidelity = 0.0;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
    double lambda = 0.0;
    double gamma = 0.0;
};

struct StepRecord {
    int epoch = 0;
    int batch = 0;
    double lambda_after = 0.0;
    double gamma_after = 0.0;
    double mean_fidelity = 0.0;
};

struct TrainResult {
    VqcParams params;
    Ansatz ansatz;
    std::vector<EpochMetrics> epochs;
    std::vector<StepRecord> steps;
};

struct EvalResult {
    double accuracy = 0.0;
    double mean_fidelity = 0.0;
    std::array<std::array<int, 3>, 3> confusion{};  // [true][predicted]
    int n = 0;
};

/// Builds the six-qubit input for one sample under the given mode.
HybridInput encode_sample(const Sample& sample, const DatasetMeta& meta,
                          InputMode mode, double gamma, double gamma_max);

/// Noise model for one sample: nominal or jittered (p, q), sample alpha
/// (forced to 1 in the no-reflection baseline).
NoiseModel sample_noise_model(const Sample& sample, const TrainConfig& cfg,
                              double p, double q);

/// Mini-batch training loop: jittered per-sample noise, adaptive fidelity
/// penalty, shift-rule gradients for the angles chained through the readout
/// nonlinearity, finite differences for gamma, Adam with projection.
/// Deterministic for a fixed config. Throws on an empty split.
TrainResult train(const std::vector<Sample>& train_set,
                  const std::vector<Sample>& test_set, const DatasetMeta& meta,
                  const TrainConfig& cfg);

/// Deterministic evaluation at nominal noise (no jitter).
EvalResult evaluate(const std::vector<Sample>& samples, const DatasetMeta& meta,
                    const VqcParams& params, const Ansatz& ansatz,
                    const TrainConfig& cfg);

/// The per-sample objective train() optimizes, as a plain function of the
/// parameters (noise rates fixed at p, q). Exposed so the gradient machinery
/// can be checked against finite differences of the genuine loss.
double sample_loss(const Sample& sample, const DatasetMeta& meta,
                   const TrainConfig& cfg, const VqcParams& params, double p,
                   double q, double lambda);

struct SampleGradients {
    double loss = 0.0;
    std::vector<double> theta_grads;
    double gamma_gradient = 0.0;
};

/// Gradients of sample_loss produced by the identical machinery the training
/// loop uses: two-point shift rule on the readout masses and fidelity
/// overlaps chained through the loss nonlinearity, finite differences for
/// gamma.
SampleGradients sample_gradients(const Sample& sample, const DatasetMeta& meta,
                                 const TrainConfig& cfg,
                                 const VqcParams& params, double p, double q,
                                 double lambda);

}  // namespace qrisnet
