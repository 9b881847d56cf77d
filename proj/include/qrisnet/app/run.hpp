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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrisnet/dataset/dataset.hpp"
#include "qrisnet/training/trainer.hpp"

namespace qrisnet::app {

// Orchestration behind the CLI subcommands. Everything here is deterministic
// for fixed options: identical inputs produce byte-identical output files.

struct GenDataOptions {
    int n = 1000;
    std::uint64_t seed = 1;
    double sigma = 0.05;
    double sigma_ambiguous = 0.45;
    std::string out;
};
void run_gen_data(const GenDataOptions& opt);

struct TrainOptions {
    std::string dataset_path;
    std::string out_dir;
    double split_fraction = 0.7;
    TrainConfig cfg;
};
struct TrainArtifacts {
    TrainResult result;
    EvalResult final_eval;
    std::string metrics_csv;
    std::string params_file;
};
TrainArtifacts run_train(const TrainOptions& opt);

struct EvalOptions {
    std::string dataset_path;
    std::string params_path;
    std::string out_csv;  // empty: skip file output
    std::optional<double> p, q;  // override the trained noise point
    std::optional<std::string> mode;
    int threads = 0;
};
struct EvalArtifacts {
    EvalResult eval;
    TrainConfig cfg;  // configuration the evaluation actually ran with
    std::string experiment_id;
};
EvalArtifacts run_eval(const EvalOptions& opt);

enum class SweepKind { kNoise, kDamping };
SweepKind sweep_kind_from_string(const std::string& s);

struct SweepOptions {
    std::string dataset_path;
    std::string out_csv;
    SweepKind kind = SweepKind::kNoise;
    std::vector<double> grid;           // p values or gamma values
    std::vector<InputMode> modes;
    double split_fraction = 0.7;
    TrainConfig base_cfg;  // seed here is the common base seed of all cells
};
struct SweepCell {
    InputMode mode;
    double p, q, gamma_init, gamma_max;
    double accuracy, mean_fidelity, final_lambda, final_gamma, train_accuracy;
};
std::vector<SweepCell> run_sweep(const SweepOptions& opt);

// Params file: versioned, line-oriented, one value per line, full-precision
// decimals. Carries a config echo so `eval` can rebuild the pipeline.
struct SavedParams {
    VqcParams params;
    TrainConfig cfg;
    double split_fraction = 0.7;
};
void save_params(const std::string& path, const TrainResult& result,
                 const TrainConfig& cfg, double split_fraction);
SavedParams load_params(const std::string& path);

std::string experiment_id(const TrainConfig& cfg);

void write_metrics_csv(const std::string& path, const std::string& experiment,
                       const std::vector<EpochMetrics>& epochs);
void write_eval_csv(const std::string& path, const std::string& experiment,
                    const EvalResult& eval);

}  // namespace qrisnet::app
