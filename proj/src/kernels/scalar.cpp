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

#include <algorithm>
#include <bit>
#include <utility>

namespace fermivqe::kernels {

namespace {

inline std::size_t insert_zero(std::size_t k, std::size_t bit) noexcept {
    const std::size_t low = k & ((std::size_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

void apply_1q(std::span<cplx> amps, std::size_t target, const Mat2 &m) {
    const std::size_t half = amps.size() / 2;
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero(k, target);
        const std::size_t i1 = i0 | stride;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_diag(std::span<cplx> amps, std::size_t target, cplx d0, cplx d1) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= ((i >> target) & 1U) ? d1 : d0;
    }
}

void apply_cnot(std::span<cplx> amps, std::size_t control, std::size_t target) {
    const std::size_t lo = std::min(control, target);
    const std::size_t hi = std::max(control, target);
    const std::size_t quarter = amps.size() / 4;
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t k = 0; k < quarter; ++k) {
        const std::size_t base = insert_zero(insert_zero(k, lo), hi) | cbit;
        std::swap(amps[base], amps[base | tbit]);
    }
}

void apply_cz(std::span<cplx> amps, std::size_t a, std::size_t b) {
    const std::size_t both = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & both) == both) {
            amps[i] = -amps[i];
        }
    }
}

cplx pauli_expval(std::span<const cplx> amps, std::uint64_t x_mask,
                  std::uint64_t z_mask) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const cplx prod = std::conj(amps[i ^ x_mask]) * amps[i];
        if (std::popcount(i & z_mask) & 1) {
            re -= prod.real();
            im -= prod.imag();
        } else {
            re += prod.real();
            im += prod.imag();
        }
    }
    return {re, im};
}

double norm_sq(std::span<const cplx> amps) {
    double s = 0.0;
    for (const cplx &a : amps) {
        s += std::norm(a);
    }
    return s;
}

void probabilities(std::span<const cplx> amps, std::span<double> out) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out[i] = std::norm(amps[i]);
    }
}

} // namespace

const KernelTable &scalar_kernels() noexcept {
    static const KernelTable table{"scalar",     apply_1q,     apply_diag,
                                   apply_cnot,   apply_cz,     pauli_expval,
                                   norm_sq,      probabilities};
    return table;
}

} // namespace fermivqe::kernels
