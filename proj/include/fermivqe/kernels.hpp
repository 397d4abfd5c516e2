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
/**
 * @file kernels.hpp
 * Statevector inner loops. Every kernel has a scalar reference version; an
 * AVX2+FMA version is used when the build and the CPU support it. The active
 * table is chosen once at first use and can be forced with
 * FERMIVQE_SIMD=scalar|avx2|auto or select_kernels().
 *
 * Amplitude index bit q is qubit q.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace fermivqe::kernels {

using cplx = std::complex<double>;
/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

struct KernelTable {
    std::string_view name;
    void (*apply_1q)(std::span<cplx> amps, std::size_t target, const Mat2 &m);
    /// amps[i] *= (bit target of i) ? d1 : d0
    void (*apply_diag)(std::span<cplx> amps, std::size_t target, cplx d0,
                       cplx d1);
    void (*apply_cnot)(std::span<cplx> amps, std::size_t control,
                       std::size_t target);
    void (*apply_cz)(std::span<cplx> amps, std::size_t a, std::size_t b);
    /// sum_i conj(amps[i ^ x]) (-1)^{|i & z|} amps[i]; the caller supplies
    /// the i^{|x & z|} factor of Y axes.
    cplx (*pauli_expval)(std::span<const cplx> amps, std::uint64_t x_mask,
                         std::uint64_t z_mask);
    double (*norm_sq)(std::span<const cplx> amps);
    /// out[i] = |amps[i]|^2
    void (*probabilities)(std::span<const cplx> amps, std::span<double> out);
};

[[nodiscard]] const KernelTable &scalar_kernels() noexcept;
/// nullptr when AVX2 was not compiled in or the CPU lacks AVX2/FMA.
[[nodiscard]] const KernelTable *avx2_kernels() noexcept;
[[nodiscard]] const KernelTable &active_kernels() noexcept;
/// "scalar", "avx2" or "auto". Returns false (and keeps the current table)
/// when the request cannot be honored.
bool select_kernels(std::string_view name) noexcept;

} // namespace fermivqe::kernels
