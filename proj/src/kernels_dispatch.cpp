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

#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "qrisnet/kernels/kernels.hpp"

namespace qrisnet::kern {

extern const KernelTable kScalarTable;
#if defined(QRISNET_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

bool avx2_supported() {
#if defined(QRISNET_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& table(Backend b) {
    switch (b) {
        case Backend::kScalar:
            return kScalarTable;
        case Backend::kAvx2:
#if defined(QRISNET_HAVE_AVX2)
            if (avx2_supported()) return kAvx2Table;
#endif
            throw std::runtime_error("avx2 kernel backend not available");
    }
    throw std::runtime_error("unknown kernel backend");
}

namespace {

const KernelTable* resolve_active() {
    if (const char* env = std::getenv("QRISNET_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return &kScalarTable;
        if (std::strcmp(env, "avx2") == 0) return &table(Backend::kAvx2);
        throw std::runtime_error(
            "QRISNET_KERNEL must be 'scalar' or 'avx2'");
    }
    if (avx2_supported()) return &table(Backend::kAvx2);
    return &kScalarTable;
}

}  // namespace

const KernelTable& active() {
    static const KernelTable* t = resolve_active();
    return *t;
}

}  // namespace qrisnet::kern
