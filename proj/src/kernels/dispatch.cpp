// Copyright 2026 The fermivqe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "fermivqe/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace fermivqe::kernels {

#if defined(FERMIVQE_HAVE_AVX2)
const KernelTable &avx2_kernel_table() noexcept;
#endif

const KernelTable *avx2_kernels() noexcept {
#if defined(FERMIVQE_HAVE_AVX2)
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    return supported ? &avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

namespace {

const KernelTable *pick(std::string_view name) noexcept {
    if (name == "scalar") {
        return &scalar_kernels();
    }
    if (name == "avx2") {
        return avx2_kernels();
    }
    if (name == "auto" || name.empty()) {
        const KernelTable *simd = avx2_kernels();
        return simd ? simd : &scalar_kernels();
    }
    return nullptr;
}

std::atomic<const KernelTable *> &current() noexcept {
    static std::atomic<const KernelTable *> table{[] {
        const char *env = std::getenv("FERMIVQE_SIMD");
        const KernelTable *t = pick(env ? std::string_view(env) : "auto");
        return t ? t : pick("auto");
    }()};
    return table;
}

} // namespace

const KernelTable &active_kernels() noexcept { return *current().load(); }

bool select_kernels(std::string_view name) noexcept {
    const KernelTable *t = pick(name);
    if (t == nullptr) {
        return false;
    }
    current().store(t);
    return true;
}

} // namespace fermivqe::kernels
