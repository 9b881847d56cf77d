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

#include <stdexcept>
#include <string>

#include "qrisnet/dataset/dataset.hpp"

namespace qrisnet {

/// Parse/validation failure in a dataset file; the message names the line
/// and field involved.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File layout (documented in the README):
//   line 1: JSON meta header {"format":"qrisnet-dataset","version":1,...}
//   lines 2..n+1: one record per line, space-delimited:
//     <feature_dim image values> <rate> <label> <alpha>
// Numbers are full-precision decimal; save->load round-trips bit-exactly.
void save_dataset(const std::string& path, const std::vector<Sample>& samples,
                  const DatasetMeta& meta);

std::pair<std::vector<Sample>, DatasetMeta> load_dataset(
    const std::string& path);

}  // namespace qrisnet
