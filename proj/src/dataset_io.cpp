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

#include "qrisnet/dataset/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qrisnet/util/format.hpp"

namespace qrisnet {
namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;
constexpr const char* kFormatName = "qrisnet-dataset";

double parse_double(const std::string& tok, int line, const char* field) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw DataError("line " + std::to_string(line) + ": field '" + field +
                        "' is not a number: '" + tok + "'");
    }
    if (pos != tok.size() || !std::isfinite(v))
        throw DataError("line " + std::to_string(line) + ": field '" + field +
                        "' is not a finite number: '" + tok + "'");
    return v;
}

}  // namespace

void save_dataset(const std::string& path, const std::vector<Sample>& samples,
                  const DatasetMeta& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);

    json header = {
        {"format", kFormatName},
        {"version", kFormatVersion},
        {"seed", meta.seed},
        {"r_min", meta.r_min},
        {"r_max", meta.r_max},
        {"feature_dim", meta.feature_dim},
        {"n_total", static_cast<int>(samples.size())},
        {"split_fraction", meta.split_fraction},
        {"class_counts",
         {meta.class_counts[0], meta.class_counts[1], meta.class_counts[2]}},
        {"sigma", meta.sigma},
        {"sigma_ambiguous", meta.sigma_ambiguous},
    };
    out << header.dump() << "\n";

    for (const Sample& s : samples) {
        for (double v : s.image) out << fmt_full(v) << ' ';
        out << fmt_full(s.rate) << ' ' << s.label << ' ' << fmt_full(s.alpha)
            << "\n";
    }
    if (!out) throw DataError("write failed: " + path);
}

std::pair<std::vector<Sample>, DatasetMeta> load_dataset(
    const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open dataset file: " + path);

    std::string line;
    if (!std::getline(in, line))
        throw DataError("empty dataset file: " + path);

    json header;
    try {
        header = json::parse(line);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("line 1: bad meta header: ") + e.what());
    }

    DatasetMeta meta;
    try {
        if (header.at("format").get<std::string>() != kFormatName)
            throw DataError("line 1: unrecognized format field");
        meta.version = header.at("version").get<int>();
        if (meta.version != kFormatVersion)
            throw DataError("unsupported dataset version " +
                            std::to_string(meta.version) + " (expected " +
                            std::to_string(kFormatVersion) + ")");
        meta.seed = header.at("seed").get<std::uint64_t>();
        meta.r_min = header.at("r_min").get<double>();
        meta.r_max = header.at("r_max").get<double>();
        meta.feature_dim = header.at("feature_dim").get<int>();
        meta.n_total = header.at("n_total").get<int>();
        meta.split_fraction = header.at("split_fraction").get<double>();
        const auto counts = header.at("class_counts");
        for (int c = 0; c < 3; ++c) meta.class_counts[c] = counts.at(c).get<int>();
        meta.sigma = header.at("sigma").get<double>();
        meta.sigma_ambiguous = header.at("sigma_ambiguous").get<double>();
    } catch (const json::exception& e) {
        throw DataError(std::string("line 1: incomplete meta header: ") +
                        e.what());
    }
    if (meta.feature_dim <= 0)
        throw DataError("line 1: feature_dim must be positive");
    if (!(meta.r_min < meta.r_max))
        throw DataError("line 1: rate bounds must satisfy r_min < r_max");

    std::vector<Sample> samples;
    samples.reserve(static_cast<std::size_t>(std::max(meta.n_total, 0)));
    int lineno = 1;
    int record = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ++record;

        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ss >> tok) toks.push_back(tok);
        const std::size_t expected =
            static_cast<std::size_t>(meta.feature_dim) + 3;
        if (toks.size() != expected)
            throw DataError("line " + std::to_string(lineno) + ": record " +
                            std::to_string(record) + " has " +
                            std::to_string(toks.size()) + " fields, expected " +
                            std::to_string(expected));

        Sample s;
        s.image.resize(meta.feature_dim);
        for (int i = 0; i < meta.feature_dim; ++i)
            s.image[i] = parse_double(toks[i], lineno, "image");
        s.rate = parse_double(toks[meta.feature_dim], lineno, "rate");

        const std::string& ltok = toks[meta.feature_dim + 1];
        if (ltok != "-1" && ltok != "0" && ltok != "1")
            throw DataError("record " + std::to_string(record) + " (line " +
                            std::to_string(lineno) +
                            "): label must be -1, 0 or 1, got '" + ltok + "'");
        s.label = std::stoi(ltok);

        s.alpha = parse_double(toks[meta.feature_dim + 2], lineno, "alpha");
        if (!(s.alpha >= 0.0 && s.alpha <= 1.0))
            throw DataError("record " + std::to_string(record) + " (line " +
                            std::to_string(lineno) +
                            "): alpha outside [0, 1]");
        if (!(s.rate >= meta.r_min && s.rate <= meta.r_max))
            throw DataError("record " + std::to_string(record) + " (line " +
                            std::to_string(lineno) +
                            "): rate outside declared bounds");
        samples.push_back(std::move(s));
    }

    if (meta.n_total != record)
        throw DataError("dataset truncated: header declares " +
                        std::to_string(meta.n_total) + " records, found " +
                        std::to_string(record));
    return {std::move(samples), meta};
}

}  // namespace qrisnet
