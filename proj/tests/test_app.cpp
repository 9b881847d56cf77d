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

#include <filesystem>
#include <fstream>
#include <string>

#include "qrisnet/app/run.hpp"
#include "qrisnet/dataset/io.hpp"

using namespace qrisnet;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempTree {
    fs::path root;
    TempTree() {
        root = fs::temp_directory_path() / "qrisnet_app_test";
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~TempTree() { fs::remove_all(root); }
    std::string operator/(const std::string& name) const {
        return (root / name).string();
    }
};

}  // namespace

TEST_CASE("app pipeline: gen, train, eval, sweep") {
    TempTree tmp;

    app::GenDataOptions gopt;
    gopt.n = 45;
    gopt.seed = 17;
    gopt.out = tmp / "data.ds";
    app::run_gen_data(gopt);
    CHECK(fs::exists(gopt.out));

    app::TrainOptions topt;
    topt.dataset_path = gopt.out;
    topt.out_dir = tmp / "run1";
    topt.cfg.epochs = 2;
    topt.cfg.batch_size = 16;
    topt.cfg.seed = 5;
    topt.cfg.threads = 2;
    const app::TrainArtifacts art = app::run_train(topt);
    CHECK(fs::exists(art.metrics_csv));
    CHECK(fs::exists(art.params_file));
    REQUIRE(art.result.epochs.size() == 2);

    // Params round-trip preserves the model and the config echo.
    const app::SavedParams sp = app::load_params(art.params_file);
    CHECK(sp.cfg.num_layers == topt.cfg.num_layers);
    CHECK(sp.cfg.seed == topt.cfg.seed);
    CHECK(sp.params.gamma == art.result.params.gamma);
    REQUIRE(sp.params.thetas.size() == art.result.params.thetas.size());
    for (std::size_t i = 0; i < sp.params.thetas.size(); ++i)
        CHECK(sp.params.thetas[i] == art.result.params.thetas[i]);

    // Eval consumes the artifacts and reproduces the trainer's final eval.
    app::EvalOptions eopt;
    eopt.dataset_path = gopt.out;
    eopt.params_path = art.params_file;
    eopt.out_csv = tmp / "eval.csv";
    eopt.threads = 2;
    const app::EvalArtifacts ev = app::run_eval(eopt);
    CHECK(ev.eval.accuracy == art.final_eval.accuracy);
    CHECK(ev.eval.mean_fidelity == art.final_eval.mean_fidelity);

    // Accuracy equals trace(confusion)/total; rows sum to class counts.
    int diag = 0, total = 0;
    for (int t = 0; t < 3; ++t)
        for (int p = 0; p < 3; ++p) {
            total += ev.eval.confusion[t][p];
            if (t == p) diag += ev.eval.confusion[t][p];
        }
    CHECK(total == ev.eval.n);
    CHECK(ev.eval.accuracy ==
          doctest::Approx(static_cast<double>(diag) / total).epsilon(1e-12));

    // Determinism: identical rerun produces byte-identical files.
    app::TrainOptions topt2 = topt;
    topt2.out_dir = tmp / "run2";
    const app::TrainArtifacts art2 = app::run_train(topt2);
    CHECK(slurp(art.metrics_csv) == slurp(art2.metrics_csv));
    CHECK(slurp(art.params_file) == slurp(art2.params_file));

    // Small sweep: 2 modes x 2 grid points -> 4 rows.
    app::SweepOptions sopt;
    sopt.dataset_path = gopt.out;
    sopt.out_csv = tmp / "sweep.csv";
    sopt.kind = app::SweepKind::kNoise;
    sopt.grid = {0.0, 0.1};
    sopt.modes = {InputMode::kHybrid, InputMode::kImageOnly};
    sopt.base_cfg = topt.cfg;
    sopt.base_cfg.epochs = 1;
    const auto cells = app::run_sweep(sopt);
    CHECK(cells.size() == 4);
    int lines = 0;
    for (char c : slurp(sopt.out_csv))
        if (c == '\n') ++lines;
    CHECK(lines == 5);  // header + 4 cells

    // Empty grid is a usage error.
    app::SweepOptions bad = sopt;
    bad.grid = {};
    CHECK_THROWS_AS(app::run_sweep(bad), std::invalid_argument);
}

TEST_CASE("input mode names round-trip") {
    for (InputMode m :
         {InputMode::kHybrid, InputMode::kImageOnly, InputMode::kChannelOnly,
          InputMode::kNoQrisBaseline})
        CHECK(input_mode_from_string(to_string(m)) == m);
    CHECK_THROWS_AS(input_mode_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("eval rejects mismatched params files") {
    TempTree tmp;
    const std::string path = tmp / "params.txt";
    {
        std::ofstream out(path, std::ios::binary);
        out << "qrisnet-params v1\n"
            << "layers 2\nqubits 6\nmode hybrid\nseed 1\n"
            << "gamma 0.5\n"
            << "theta 0 0.1\n";  // far too few angles for two layers
    }
    CHECK_THROWS_AS(app::load_params(path), std::runtime_error);

    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "some-other-format v9\n";
    }
    CHECK_THROWS_AS(app::load_params(path), std::runtime_error);
}
