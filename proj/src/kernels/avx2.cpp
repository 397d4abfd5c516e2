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
// Compiled with -mavx2 -mfma; only reached after a cpuid check.
#include "fermivqe/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace fermivqe::kernels {

namespace {

// Two complex<double> per register: [re0, im0, re1, im1].

inline __m256d load2(const cplx *p) noexcept {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) noexcept {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d broadcast(cplx c) noexcept {
    return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag());
}

inline __m256d pack(cplx lo, cplx hi) noexcept {
    return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

/// Lane-wise complex product v * c.
inline __m256d cmul(__m256d v, __m256d c) noexcept {
    const __m256d c_re = _mm256_movedup_pd(c);
    const __m256d c_im = _mm256_permute_pd(c, 0xF);
    const __m256d v_sw = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(v, c_re, _mm256_mul_pd(v_sw, c_im));
}

inline std::size_t insert_zero(std::size_t k, std::size_t bit) noexcept {
    const std::size_t low = k & ((std::size_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

void apply_1q(std::span<cplx> amps, std::size_t target, const Mat2 &m) {
    if (amps.size() < 4) {
        scalar_kernels().apply_1q(amps, target, m);
        return;
    }
    cplx *a = amps.data();
    if (target == 0) {
        const __m256d diag = pack(m[0], m[3]);
        const __m256d anti = pack(m[1], m[2]);
        for (std::size_t i = 0; i < amps.size(); i += 2) {
            const __m256d v = load2(a + i);
            const __m256d v_sw = _mm256_permute2f128_pd(v, v, 0x01);
            store2(a + i, _mm256_add_pd(cmul(v, diag), cmul(v_sw, anti)));
        }
        return;
    }
    const __m256d m00 = broadcast(m[0]);
    const __m256d m01 = broadcast(m[1]);
    const __m256d m10 = broadcast(m[2]);
    const __m256d m11 = broadcast(m[3]);
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t half = amps.size() / 2;
    for (std::size_t k = 0; k < half; k += 2) {
        const std::size_t i0 = insert_zero(k, target);
        const std::size_t i1 = i0 | stride;
        const __m256d v0 = load2(a + i0);
        const __m256d v1 = load2(a + i1);
        store2(a + i0, _mm256_add_pd(cmul(v0, m00), cmul(v1, m01)));
        store2(a + i1, _mm256_add_pd(cmul(v0, m10), cmul(v1, m11)));
    }
}

void apply_diag(std::span<cplx> amps, std::size_t target, cplx d0, cplx d1) {
    if (amps.size() < 2) {
        scalar_kernels().apply_diag(amps, target, d0, d1);
        return;
    }
    cplx *a = amps.data();
    if (target == 0) {
        const __m256d f = pack(d0, d1);
        for (std::size_t i = 0; i < amps.size(); i += 2) {
            store2(a + i, cmul(load2(a + i), f));
        }
        return;
    }
    const __m256d f0 = broadcast(d0);
    const __m256d f1 = broadcast(d1);
    for (std::size_t i = 0; i < amps.size(); i += 2) {
        const __m256d f = ((i >> target) & 1U) ? f1 : f0;
        store2(a + i, cmul(load2(a + i), f));
    }
}

void apply_cnot(std::span<cplx> amps, std::size_t control, std::size_t target) {
    const std::size_t lo = std::min(control, target);
    const std::size_t hi = std::max(control, target);
    if (lo == 0 || amps.size() < 8) {
        scalar_kernels().apply_cnot(amps, control, target);
        return;
    }
    cplx *a = amps.data();
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t quarter = amps.size() / 4;
    for (std::size_t k = 0; k < quarter; k += 2) {
        const std::size_t base = insert_zero(insert_zero(k, lo), hi) | cbit;
        const __m256d v0 = load2(a + base);
        const __m256d v1 = load2(a + (base | tbit));
        store2(a + base, v1);
        store2(a + (base | tbit), v0);
    }
}

void apply_cz(std::span<cplx> amps, std::size_t qa, std::size_t qb) {
    const std::size_t lo = std::min(qa, qb);
    const std::size_t hi = std::max(qa, qb);
    if (lo == 0 || amps.size() < 8) {
        scalar_kernels().apply_cz(amps, qa, qb);
        return;
    }
    cplx *a = amps.data();
    const std::size_t both = (std::size_t{1} << qa) | (std::size_t{1} << qb);
    const std::size_t quarter = amps.size() / 4;
    const __m256d sign = _mm256_set1_pd(-0.0);
    for (std::size_t k = 0; k < quarter; k += 2) {
        const std::size_t i = insert_zero(insert_zero(k, lo), hi) | both;
        store2(a + i, _mm256_xor_pd(load2(a + i), sign));
    }
}

cplx pauli_expval(std::span<const cplx> amps, std::uint64_t x_mask,
                  std::uint64_t z_mask) {
    if (amps.size() < 2) {
        return scalar_kernels().pauli_expval(amps, x_mask, z_mask);
    }
    const cplx *a = amps.data();
    const bool swap_pair = (x_mask & 1U) != 0;
    const double odd_flip = (z_mask & 1U) ? -1.0 : 1.0;
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (std::size_t i = 0; i < amps.size(); i += 2) {
        const __m256d v = load2(a + i);
        __m256d w = load2(a + ((i ^ x_mask) & ~std::uint64_t{1}));
        if (swap_pair) {
            w = _mm256_permute2f128_pd(w, w, 0x01);
        }
        const double s0 = (std::popcount(i & z_mask) & 1) ? -1.0 : 1.0;
        const __m256d s = _mm256_setr_pd(s0, s0, s0 * odd_flip, s0 * odd_flip);
        const __m256d ws = _mm256_mul_pd(w, s);
        // conj(w) * v: re = wr vr + wi vi, im = wr vi - wi vr
        acc_re = _mm256_fmadd_pd(ws, v, acc_re);
        acc_im = _mm256_fmadd_pd(ws, _mm256_permute_pd(v, 0x5), acc_im);
    }
    alignas(32) double r[4];
    alignas(32) double m[4];
    _mm256_store_pd(r, acc_re);
    _mm256_store_pd(m, acc_im);
    return {r[0] + r[1] + r[2] + r[3], m[0] - m[1] + m[2] - m[3]};
}

double norm_sq(std::span<const cplx> amps) {
    if (amps.size() < 2) {
        return scalar_kernels().norm_sq(amps);
    }
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < amps.size(); i += 2) {
        const __m256d v = load2(amps.data() + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double r[4];
    _mm256_store_pd(r, acc);
    return (r[0] + r[1]) + (r[2] + r[3]);
}

void probabilities(std::span<const cplx> amps, std::span<double> out) {
    if (amps.size() < 2) {
        scalar_kernels().probabilities(amps, out);
        return;
    }
    for (std::size_t i = 0; i < amps.size(); i += 2) {
        const __m256d v = load2(amps.data() + i);
        const __m256d sq = _mm256_mul_pd(v, v);
        const __m256d h = _mm256_hadd_pd(sq, sq); // [p0, p0, p1, p1]
        const __m256d packed = _mm256_permute4x64_pd(h, 0x08);
        _mm_storeu_pd(out.data() + i, _mm256_castpd256_pd128(packed));
    }
}

} // namespace

const KernelTable &avx2_kernel_table() noexcept {
    static const KernelTable table{"avx2",     apply_1q,     apply_diag,
                                   apply_cnot, apply_cz,     pauli_expval,
                                   norm_sq,    probabilities};
    return table;
}

} // namespace fermivqe::kernels
