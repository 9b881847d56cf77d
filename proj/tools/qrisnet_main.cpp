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

// Command-line front end: gen-data, train, eval, sweep.
// Exit codes: 0 success, 1 usage error, 2 runtime/data error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qrisnet/app/run.hpp"
#include "qrisnet/dataset/io.hpp"
#include "qrisnet/util/format.hpp"

namespace {

using namespace qrisnet;

void add_train_flags(CLI::App* cmd, TrainConfig& cfg, std::string& selector) {
    cmd->add_option("--epochs", cfg.epochs, "Training epochs")
        ->capture_default_str();
    cmd->add_option("--batch", cfg.batch_size, "Mini-batch size")
        ->capture_default_str();
    cmd->add_option("--layers", cfg.num_layers, "Circuit layers")
        ->capture_default_str();
    cmd->add_option("--lr", cfg.learning_rate, "Learning rate")
        ->capture_default_str();
    cmd->add_option("--weight-decay", cfg.weight_decay, "L2 weight decay")
        ->capture_default_str();
    cmd->add_option("--p", cfg.noise_p, "Depolarizing probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--q", cfg.noise_q, "Dephasing probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--jitter", cfg.noise_jitter,
                    "Per-sample noise jitter fraction")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--gamma-max", cfg.gamma_max, "Damping ceiling")
        ->capture_default_str();
    cmd->add_option("--gamma-init", cfg.gamma_init, "Initial damping")
        ->capture_default_str();
    cmd->add_option("--fmin", cfg.f_min, "Fidelity constraint threshold")
        ->capture_default_str();
    cmd->add_option("--lambda", cfg.lambda_init, "Initial penalty weight")
        ->capture_default_str();
    cmd->add_option("--lambda-growth", cfg.lambda_growth,
                    "Penalty growth factor on violation")
        ->capture_default_str();
    cmd->add_option("--lambda-cap-factor", cfg.lambda_cap_factor,
                    "Penalty cap as a multiple of the initial weight")
        ->capture_default_str();
    cmd->add_option("--qris-phase", cfg.qris_phase,
                    "Per-qubit phase of the surface unitary")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--config-selector", selector,
                    "Input configuration: hybrid | image-only | channel-only "
                    "| no-qris-baseline")
        ->capture_default_str();
    cmd->add_flag("--lambda-per-sample", cfg.lambda_per_sample,
                  "Adapt the penalty per sample instead of per batch");
    cmd->add_flag("!--no-train-gamma", cfg.train_gamma,
                  "Freeze the damping coefficient");
    cmd->add_option("--threads", cfg.threads,
                    "Worker threads (0 = hardware)")
        ->capture_default_str();
}

void print_eval(const app::EvalArtifacts& art) {
    static const char* kClasses[3] = {"absent", "blocked", "unblocked"};
    std::cout << "experiment: " << art.experiment_id << "\n";
    std::cout << "n_test: " << art.eval.n << "\n";
    std::cout << "accuracy: " << fmt_fixed(art.eval.accuracy, 4) << "\n";
    std::cout << "mean_fidelity: " << fmt_fixed(art.eval.mean_fidelity, 4)
              << "\n";
    std::cout << "confusion (rows = true, cols = predicted):\n";
    std::printf("%12s %9s %9s %9s\n", "", kClasses[0], kClasses[1],
                kClasses[2]);
    for (int t = 0; t < 3; ++t) {
        std::printf("%12s", kClasses[t]);
        for (int p = 0; p < 3; ++p)
            std::printf(" %9d", art.eval.confusion[t][p]);
        std::printf("\n");
    }
}

int run(int argc, char** argv) {
    CLI::App cli{"Noise-aware variational quantum link-blockage classifier"};
    cli.require_subcommand(1);
    cli.set_config("--config", "", "Read defaults from a config file");

    // gen-data
    auto* gen = cli.add_subcommand("gen-data", "Generate a synthetic dataset");
    app::GenDataOptions gopt;
    gen->add_option("--n", gopt.n, "Number of samples")
        ->check(CLI::Range(3, 1000000))
        ->capture_default_str();
    gen->add_option("--seed", gopt.seed, "RNG seed")->capture_default_str();
    gen->add_option("--sigma", gopt.sigma, "Image blob std-dev")
        ->capture_default_str();
    gen->add_option("--sigma-ambiguous", gopt.sigma_ambiguous,
                    "Absent-class image spread")
        ->capture_default_str();
    gen->add_option("--out", gopt.out, "Output dataset file")->required();

    // train
    auto* tr = cli.add_subcommand("train", "Train the classifier");
    app::TrainOptions topt;
    std::string train_selector = "hybrid";
    tr->add_option("--data", topt.dataset_path, "Dataset file")->required();
    tr->add_option("--out-dir", topt.out_dir, "Output directory")->required();
    tr->add_option("--split", topt.split_fraction, "Train fraction")
        ->check(CLI::Range(0.01, 0.99))
        ->capture_default_str();
    add_train_flags(tr, topt.cfg, train_selector);

    // eval
    auto* ev = cli.add_subcommand("eval", "Evaluate saved parameters");
    app::EvalOptions eopt;
    double ev_p = -1.0, ev_q = -1.0;
    std::string ev_mode;
    ev->add_option("--data", eopt.dataset_path, "Dataset file")->required();
    ev->add_option("--params", eopt.params_path, "Params file")->required();
    ev->add_option("--out", eopt.out_csv, "Output CSV (optional)");
    ev->add_option("--p", ev_p, "Override depolarizing probability");
    ev->add_option("--q", ev_q, "Override dephasing probability");
    ev->add_option("--config-selector", ev_mode,
                   "Override input configuration");
    ev->add_option("--threads", eopt.threads, "Worker threads");

    // sweep
    auto* sw = cli.add_subcommand(
        "sweep", "Train+eval over a parameter grid (noise or damping)");
    app::SweepOptions sopt;
    std::string sweep_kind = "noise";
    std::vector<double> sweep_grid;
    std::vector<std::string> sweep_configs;
    std::string sweep_selector_unused = "hybrid";
    sw->add_option("--data", sopt.dataset_path, "Dataset file")->required();
    sw->add_option("--out", sopt.out_csv, "Output CSV")->required();
    sw->add_option("--kind", sweep_kind, "noise | damping")
        ->capture_default_str();
    sw->add_option("--grid", sweep_grid,
                   "Grid values (default: noise 0,0.05,0.1,0.2; damping "
                   "0.5,0.65,0.8,0.95)");
    sw->add_option("--configs", sweep_configs,
                   "Input configurations to sweep (default: noise = all "
                   "four, damping = hybrid)");
    sw->add_option("--split", sopt.split_fraction, "Train fraction")
        ->check(CLI::Range(0.01, 0.99))
        ->capture_default_str();
    add_train_flags(sw, sopt.base_cfg, sweep_selector_unused);

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            app::run_gen_data(gopt);
            std::cout << "wrote " << gopt.out << " (" << gopt.n
                      << " records)\n";
            return 0;
        }
        if (tr->parsed()) {
            topt.cfg.mode = input_mode_from_string(train_selector);
            const app::TrainArtifacts art = app::run_train(topt);
            for (const EpochMetrics& em : art.result.epochs) {
                std::cout << "epoch " << em.epoch << " loss "
                          << fmt_fixed(em.mean_total, 4) << " ce "
                          << fmt_fixed(em.mean_ce, 4) << " fid "
                          << fmt_fixed(em.mean_fidelity, 4) << " train_acc "
                          << fmt_fixed(em.train_accuracy, 4) << " test_acc "
                          << fmt_fixed(em.test_accuracy, 4) << " lambda "
                          << fmt_fixed(em.lambda, 3) << " gamma "
                          << fmt_fixed(em.gamma, 4) << "\n";
            }
            std::cout << "final test accuracy "
                      << fmt_fixed(art.final_eval.accuracy, 4)
                      << ", mean fidelity "
                      << fmt_fixed(art.final_eval.mean_fidelity, 4) << "\n";
            std::cout << "metrics: " << art.metrics_csv << "\n";
            std::cout << "params:  " << art.params_file << "\n";
            return 0;
        }
        if (ev->parsed()) {
            if (ev_p >= 0.0) eopt.p = ev_p;
            if (ev_q >= 0.0) eopt.q = ev_q;
            if (!ev_mode.empty()) eopt.mode = ev_mode;
            const app::EvalArtifacts art = app::run_eval(eopt);
            print_eval(art);
            if (!eopt.out_csv.empty())
                std::cout << "csv: " << eopt.out_csv << "\n";
            return 0;
        }
        if (sw->parsed()) {
            sopt.kind = app::sweep_kind_from_string(sweep_kind);
            sopt.grid = sweep_grid;
            if (sopt.grid.empty()) {
                sopt.grid = sopt.kind == app::SweepKind::kNoise
                                ? std::vector<double>{0.0, 0.05, 0.1, 0.2}
                                : std::vector<double>{0.5, 0.65, 0.8, 0.95};
            }
            if (sweep_configs.empty()) {
                sopt.modes =
                    sopt.kind == app::SweepKind::kNoise
                        ? std::vector<InputMode>{InputMode::kHybrid,
                                                 InputMode::kImageOnly,
                                                 InputMode::kChannelOnly,
                                                 InputMode::kNoQrisBaseline}
                        : std::vector<InputMode>{InputMode::kHybrid};
            } else {
                for (const std::string& s : sweep_configs)
                    sopt.modes.push_back(input_mode_from_string(s));
            }
            const auto cells = app::run_sweep(sopt);
            std::cout << "wrote " << sopt.out_csv << " (" << cells.size()
                      << " cells)\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
