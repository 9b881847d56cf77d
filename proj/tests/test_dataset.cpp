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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qrisnet/dataset/dataset.hpp"
#include "qrisnet/dataset/io.hpp"

using namespace qrisnet;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("generation balance and determinism") {
    auto [s3, m3] = generate(3, 42);
    REQUIRE(s3.size() == 3);
    int counts[3] = {0, 0, 0};
    for (const Sample& s : s3) counts[s.label + 1]++;
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 1);

    auto [s100, m100] = generate(100, 42);
    int c100[3] = {0, 0, 0};
    for (const Sample& s : s100) c100[s.label + 1]++;
    CHECK(std::abs(c100[0] - c100[1]) <= 1);
    CHECK(std::abs(c100[1] - c100[2]) <= 1);
    CHECK(m100.class_counts[0] + m100.class_counts[1] +
              m100.class_counts[2] ==
          100);

    // Rates stay inside the declared bounds; images never vanish.
    for (const Sample& s : s100) {
        CHECK(s.rate >= m100.r_min);
        CHECK(s.rate <= m100.r_max);
        CHECK(s.alpha >= 0.0);
        CHECK(s.alpha <= 1.0);
        double norm2 = 0.0;
        for (double v : s.image) norm2 += v * v;
        CHECK(norm2 > 0.0);
    }

    auto [s100b, m100b] = generate(100, 42);
    for (std::size_t i = 0; i < s100.size(); ++i) {
        CHECK(s100[i].label == s100b[i].label);
        CHECK(s100[i].rate == s100b[i].rate);
        CHECK(s100[i].alpha == s100b[i].alpha);
        for (int k = 0; k < 16; ++k)
            CHECK(s100[i].image[k] == s100b[i].image[k]);
    }

    CHECK_THROWS_AS(generate(2, 1), std::invalid_argument);
    ClassParams bad;
    bad.sigma = -1.0;
    CHECK_THROWS_AS(generate(10, 1, bad), std::invalid_argument);
    ClassParams bad2;
    bad2.rate_windows[0] = {0.5, 0.4};
    CHECK_THROWS_AS(generate(10, 1, bad2), std::invalid_argument);
}

TEST_CASE("split sizes and stratification") {
    auto [s10, m10] = generate(10, 5);
    auto [tr, te] = split(s10, 0.7, 5);
    CHECK(tr.size() == 7);
    CHECK(te.size() == 3);

    auto [s300, m300] = generate(300, 6);
    auto [tr3, te3] = split(s300, 0.7, 6);
    CHECK(tr3.size() == 210);
    CHECK(te3.size() == 90);
    int trc[3] = {0, 0, 0}, tec[3] = {0, 0, 0};
    for (const Sample& s : tr3) trc[s.label + 1]++;
    for (const Sample& s : te3) tec[s.label + 1]++;
    for (int c = 0; c < 3; ++c) {
        // Class proportions within 2% of the overall third.
        CHECK(std::abs(trc[c] / 210.0 - 1.0 / 3.0) <= 0.02);
        CHECK(std::abs(tec[c] / 90.0 - 1.0 / 3.0) <= 0.02);
    }

    CHECK_THROWS_AS(split(s10, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(split(s10, 1.0, 1), std::invalid_argument);
    auto [s3, m3] = generate(3, 5);
    CHECK_THROWS_AS(split(s3, 0.05, 1), std::invalid_argument);
}

TEST_CASE("dataset file round-trip is exact") {
    const std::string path = temp_path("qrisnet_ds_roundtrip.ds");
    auto [samples, meta] = generate(25, 123);
    save_dataset(path, samples, meta);

    auto [loaded, lmeta] = load_dataset(path);
    REQUIRE(loaded.size() == samples.size());
    CHECK(lmeta.seed == meta.seed);
    CHECK(lmeta.r_min == meta.r_min);
    CHECK(lmeta.r_max == meta.r_max);
    CHECK(lmeta.feature_dim == meta.feature_dim);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(loaded[i].label == samples[i].label);
        CHECK(loaded[i].rate == samples[i].rate);    // bitwise
        CHECK(loaded[i].alpha == samples[i].alpha);  // bitwise
        for (int k = 0; k < 16; ++k)
            CHECK(loaded[i].image[k] == samples[i].image[k]);
    }

    // Identical regeneration produces an identical file.
    const std::string path2 = temp_path("qrisnet_ds_roundtrip2.ds");
    auto [samples2, meta2] = generate(25, 123);
    save_dataset(path2, samples2, meta2);
    CHECK(slurp(path) == slurp(path2));

    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("loader rejects malformed files with located errors") {
    const std::string path = temp_path("qrisnet_ds_bad.ds");
    auto [samples, meta] = generate(5, 9);
    save_dataset(path, samples, meta);

    // Truncation: drop the last record.
    {
        const std::string all = slurp(path);
        const std::size_t cut = all.rfind('\n', all.size() - 2);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << all.substr(0, cut + 1);
    }
    CHECK_THROWS_AS(load_dataset(path), DataError);
    try {
        load_dataset(path);
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("truncated") != std::string::npos);
    }

    // Bad label names the record index.
    save_dataset(path, samples, meta);
    {
        std::string all = slurp(path);
        // Record 3 lives on line 4; rewrite its label field.
        std::size_t pos = 0;
        for (int i = 0; i < 3; ++i) pos = all.find('\n', pos) + 1;
        std::size_t eol = all.find('\n', pos);
        std::string line = all.substr(pos, eol - pos);
        std::size_t lastsp = line.rfind(' ');
        std::size_t prevsp = line.rfind(' ', lastsp - 1);
        line = line.substr(0, prevsp + 1) + "2" + line.substr(lastsp);
        all = all.substr(0, pos) + line + all.substr(eol);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << all;
    }
    try {
        load_dataset(path);
        CHECK(false);
    } catch (const DataError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("label") != std::string::npos);
        CHECK(msg.find("record 3") != std::string::npos);
    }

    // Unsupported version.
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "{\"format\":\"qrisnet-dataset\",\"version\":99}\n";
    }
    try {
        load_dataset(path);
        CHECK(false);
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("version") != std::string::npos);
    }

    // Not even JSON.
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "hello world\n";
    }
    CHECK_THROWS_AS(load_dataset(path), DataError);

    std::remove(path.c_str());
}
