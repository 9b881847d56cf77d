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

#include "qrisnet/app/run.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qrisnet/dataset/io.hpp"
#include "qrisnet/util/format.hpp"
#include "qrisnet/util/rng.hpp"

namespace qrisnet::app {
namespace {

namespace fs = std::filesystem;

constexpr const char* kParamsHeader = "qrisnet-params v1";
constexpr const char* kMetricsSchema = "metrics_v1";
constexpr const char* kEvalSchema = "eval_v1";
constexpr const char* kSweepSchema = "sweep_v1";

std::ofstream open_out(const std::string& path) {
    if (const fs::path dir = fs::path(path).parent_path(); !dir.empty())
        fs::create_directories(dir);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::pair<std::vector<Sample>, std::vector<Sample>> load_and_split(
    const std::string& dataset_path, double fraction, std::uint64_t seed,
    DatasetMeta* meta_out) {
    auto [samples, meta] = load_dataset(dataset_path);
    *meta_out = meta;
    return split(samples, fraction, seed);
}

}  // namespace

SweepKind sweep_kind_from_string(const std::string& s) {
    if (s == "noise") return SweepKind::kNoise;
    if (s == "damping") return SweepKind::kDamping;
    throw std::invalid_argument("sweep kind must be 'noise' or 'damping'");
}

std::string experiment_id(const TrainConfig& cfg) {
    return std::string(to_string(cfg.mode)) + "-s" +
           std::to_string(cfg.seed);
}

void run_gen_data(const GenDataOptions& opt) {
    ClassParams cp;
    cp.sigma = opt.sigma;
    cp.sigma_ambiguous = opt.sigma_ambiguous;
    auto [samples, meta] = generate(opt.n, opt.seed, cp);
    if (const fs::path dir = fs::path(opt.out).parent_path(); !dir.empty())
        fs::create_directories(dir);
    save_dataset(opt.out, samples, meta);
}

void write_metrics_csv(const std::string& path, const std::string& experiment,
                       const std::vector<EpochMetrics>& epochs) {
    std::ofstream out = open_out(path);
    out << "schema,experiment,epoch,mean_total_loss,mean_ce,mean_fidelity,"
           "train_accuracy,test_accuracy,lambda,gamma\n";
    for (const EpochMetrics& em : epochs) {
        out << kMetricsSchema << ',' << experiment << ',' << em.epoch << ','
            << fmt_full(em.mean_total) << ',' << fmt_full(em.mean_ce) << ','
            << fmt_full(em.mean_fidelity) << ','
            << fmt_full(em.train_accuracy) << ','
            << fmt_full(em.test_accuracy) << ',' << fmt_full(em.lambda) << ','
            << fmt_full(em.gamma) << "\n";
    }
}

void write_eval_csv(const std::string& path, const std::string& experiment,
                    const EvalResult& eval) {
    static const char* kClasses[3] = {"absent", "blocked", "unblocked"};
    std::ofstream out = open_out(path);
    out << "schema,experiment,n_test,accuracy,mean_fidelity";
    for (int t = 0; t < 3; ++t)
        for (int p = 0; p < 3; ++p)
            out << ",cm_" << kClasses[t] << '_' << kClasses[p];
    out << "\n";
    out << kEvalSchema << ',' << experiment << ',' << eval.n << ','
        << fmt_full(eval.accuracy) << ',' << fmt_full(eval.mean_fidelity);
    for (int t = 0; t < 3; ++t)
        for (int p = 0; p < 3; ++p) out << ',' << eval.confusion[t][p];
    out << "\n";
}

void save_params(const std::string& path, const TrainResult& result,
                 const TrainConfig& cfg, double split_fraction) {
    std::ofstream out = open_out(path);
    out << kParamsHeader << "\n";
    out << "layers " << result.ansatz.num_layers << "\n";
    out << "qubits " << result.ansatz.num_qubits << "\n";
    out << "mode " << to_string(cfg.mode) << "\n";
    out << "seed " << cfg.seed << "\n";
    out << "split_fraction " << fmt_full(split_fraction) << "\n";
    out << "p " << fmt_full(cfg.noise_p) << "\n";
    out << "q " << fmt_full(cfg.noise_q) << "\n";
    out << "jitter " << fmt_full(cfg.noise_jitter) << "\n";
    out << "fmin " << fmt_full(cfg.f_min) << "\n";
    out << "gamma_max " << fmt_full(cfg.gamma_max) << "\n";
    out << "qris_phase " << fmt_full(cfg.qris_phase) << "\n";
    out << "gamma " << fmt_full(result.params.gamma) << "\n";
    for (std::size_t i = 0; i < result.params.thetas.size(); ++i)
        out << "theta " << i << ' ' << fmt_full(result.params.thetas[i])
            << "\n";
}

SavedParams load_params(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open params file: " + path);

    std::string line;
    if (!std::getline(in, line) || line != kParamsHeader)
        throw std::runtime_error(
            "params file has unsupported format/version: " + path);

    SavedParams sp;
    int layers = -1, qubits = -1;
    std::vector<std::pair<std::size_t, double>> thetas;

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        auto need = [&](auto& v) {
            if (!(ss >> v))
                throw std::runtime_error("params file line " +
                                         std::to_string(lineno) +
                                         ": bad value for " + key);
        };
        if (key == "layers") {
            need(layers);
        } else if (key == "qubits") {
            need(qubits);
        } else if (key == "mode") {
            std::string m;
            need(m);
            sp.cfg.mode = input_mode_from_string(m);
        } else if (key == "seed") {
            need(sp.cfg.seed);
        } else if (key == "split_fraction") {
            need(sp.split_fraction);
        } else if (key == "p") {
            need(sp.cfg.noise_p);
        } else if (key == "q") {
            need(sp.cfg.noise_q);
        } else if (key == "jitter") {
            need(sp.cfg.noise_jitter);
        } else if (key == "fmin") {
            need(sp.cfg.f_min);
        } else if (key == "gamma_max") {
            need(sp.cfg.gamma_max);
        } else if (key == "qris_phase") {
            need(sp.cfg.qris_phase);
        } else if (key == "gamma") {
            need(sp.params.gamma);
        } else if (key == "theta") {
            std::size_t idx;
            double v;
            need(idx);
            need(v);
            thetas.emplace_back(idx, v);
        } else {
            throw std::runtime_error("params file line " +
                                     std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
        }
    }

    if (layers < 1 || qubits != 6)
        throw std::runtime_error("params file missing layers/qubits header");
    sp.cfg.num_layers = layers;
    const std::size_t expected = static_cast<std::size_t>(layers) * 12;
    sp.params.thetas.assign(expected, 0.0);
    if (thetas.size() != expected)
        throw std::runtime_error(
            "params file theta count does not match layers (" +
            std::to_string(thetas.size()) + " vs " + std::to_string(expected) +
            ")");
    for (const auto& [idx, v] : thetas) {
        if (idx >= expected)
            throw std::runtime_error("params file theta index out of range");
        sp.params.thetas[idx] = v;
    }
    return sp;
}

TrainArtifacts run_train(const TrainOptions& opt) {
    DatasetMeta meta;
    auto [train_set, test_set] = load_and_split(
        opt.dataset_path, opt.split_fraction, opt.cfg.seed, &meta);

    TrainArtifacts art;
    art.result = train(train_set, test_set, meta, opt.cfg);
    art.final_eval =
        evaluate(test_set, meta, art.result.params, art.result.ansatz, opt.cfg);

    fs::create_directories(opt.out_dir);
    art.metrics_csv = (fs::path(opt.out_dir) / "metrics.csv").string();
    art.params_file = (fs::path(opt.out_dir) / "params.txt").string();
    write_metrics_csv(art.metrics_csv, experiment_id(opt.cfg),
                      art.result.epochs);
    save_params(art.params_file, art.result, opt.cfg, opt.split_fraction);
    return art;
}

EvalArtifacts run_eval(const EvalOptions& opt) {
    SavedParams sp = load_params(opt.params_path);
    if (opt.p) sp.cfg.noise_p = *opt.p;
    if (opt.q) sp.cfg.noise_q = *opt.q;
    if (opt.mode) sp.cfg.mode = input_mode_from_string(*opt.mode);
    sp.cfg.threads = opt.threads;

    DatasetMeta meta;
    auto [train_set, test_set] = load_and_split(
        opt.dataset_path, sp.split_fraction, sp.cfg.seed, &meta);
    (void)train_set;

    const Ansatz ansatz = Ansatz::make(sp.cfg.num_layers);
    if (static_cast<int>(sp.params.thetas.size()) != ansatz.param_count())
        throw std::runtime_error(
            "params/config shape mismatch: theta count vs ansatz layers");

    EvalArtifacts art;
    art.cfg = sp.cfg;
    art.experiment_id = experiment_id(sp.cfg);
    art.eval = evaluate(test_set, meta, sp.params, ansatz, sp.cfg);
    if (!opt.out_csv.empty())
        write_eval_csv(opt.out_csv, art.experiment_id, art.eval);
    return art;
}

std::vector<SweepCell> run_sweep(const SweepOptions& opt) {
    if (opt.grid.empty())
        throw std::invalid_argument("sweep grid must be non-empty");
    if (opt.modes.empty())
        throw std::invalid_argument("sweep needs at least one configuration");

    DatasetMeta meta;
    auto [train_set, test_set] = load_and_split(
        opt.dataset_path, opt.split_fraction, opt.base_cfg.seed, &meta);

    std::vector<SweepCell> cells;
    for (InputMode mode : opt.modes) {
        for (double value : opt.grid) {
            TrainConfig cfg = opt.base_cfg;  // common base seed for all cells
            cfg.mode = mode;
            if (opt.kind == SweepKind::kNoise) {
                cfg.noise_p = value;
            } else {
                if (!(value > 0.0 && value < 1.0))
                    throw std::invalid_argument(
                        "damping grid values must lie in (0, 1)");
                cfg.gamma_init = value;
                cfg.gamma_max = value;
                cfg.train_gamma = false;  // measure the fixed damping point
            }
            TrainResult res = train(train_set, test_set, meta, cfg);
            EvalResult ev = evaluate(test_set, meta, res.params, res.ansatz, cfg);
            cells.push_back({mode, cfg.noise_p, cfg.noise_q, cfg.gamma_init,
                             cfg.gamma_max, ev.accuracy, ev.mean_fidelity,
                             res.epochs.back().lambda, res.params.gamma,
                             res.epochs.back().train_accuracy});
        }
    }

    if (!opt.out_csv.empty()) {
        std::ofstream out = open_out(opt.out_csv);
        out << "schema,kind,config,base_seed,p,q,gamma_init,gamma_max,"
               "accuracy,mean_fidelity,final_lambda,final_gamma,"
               "train_accuracy\n";
        for (const SweepCell& c : cells) {
            out << kSweepSchema << ','
                << (opt.kind == SweepKind::kNoise ? "noise" : "damping") << ','
                << to_string(c.mode) << ',' << opt.base_cfg.seed << ','
                << fmt_full(c.p) << ',' << fmt_full(c.q) << ','
                << fmt_full(c.gamma_init) << ',' << fmt_full(c.gamma_max)
                << ',' << fmt_full(c.accuracy) << ','
                << fmt_full(c.mean_fidelity) << ','
                << fmt_full(c.final_lambda) << ',' << fmt_full(c.final_gamma)
                << ',' << fmt_full(c.train_accuracy) << "\n";
        }
    }
    return cells;
}

}  // namespace qrisnet::app
