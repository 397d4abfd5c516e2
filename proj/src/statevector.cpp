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
#include "fermivqe/statevector.hpp"

#include "fermivqe/error.hpp"
#include "fermivqe/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

namespace fermivqe {

namespace {

using kernels::active_kernels;
using kernels::Mat2;

constexpr cplx kI{0.0, 1.0};

Mat2 gate_matrix(GateKind k, double t) {
    const double c = std::cos(t / 2.0);
    const double s = std::sin(t / 2.0);
    const double r = std::numbers::sqrt2 / 2.0;
    switch (k) {
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y:
        return {0.0, -kI, kI, 0.0};
    case GateKind::H:
        return {r, r, r, -r};
    case GateKind::RX:
        return {c, -kI * s, -kI * s, c};
    case GateKind::RY:
        return {c, -s, s, c};
    default:
        break;
    }
    throw DomainError("no 2x2 matrix for gate " + std::string(gate_name(k)));
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> cdf_of(const std::vector<double> &p) {
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    return cdf;
}

std::uint64_t draw(const std::vector<double> &cdf, std::mt19937_64 &rng) {
    const double u = uniform01(rng) * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
        --it;
    }
    return static_cast<std::uint64_t>(it - cdf.begin());
}

} // namespace

StateVector::StateVector(std::size_t n_qubits, std::size_t limit) : n_(n_qubits) {
    if (n_qubits == 0 || n_qubits > limit || n_qubits >= 63) {
        throw CapacityError("statevector width " + std::to_string(n_qubits) +
                            " outside [1, " + std::to_string(limit) + "]");
    }
    amps_.assign(std::size_t{1} << n_qubits, cplx{});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index,
                               std::size_t limit) {
    StateVector s(n_qubits, limit);
    if (index >= s.amps_.size()) {
        throw IndexError("basis index " + std::to_string(index) +
                         " out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw ShapeError("amplitude count must be a power of two >= 2");
    }
    StateVector s;
    s.n_ = static_cast<std::size_t>(std::countr_zero(amps.size()));
    s.amps_ = std::move(amps);
    return s;
}

double StateVector::norm_sq() const { return active_kernels().norm_sq(amps_); }

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    active_kernels().probabilities(amps_, p);
    return p;
}

void StateVector::apply_gate(const Gate &g) {
    for (std::size_t i = 0; i < g.arity(); ++i) {
        if (g.qubits[i] >= n_) {
            throw IndexError("gate qubit " + std::to_string(g.qubits[i]) +
                             " out of range for " + std::to_string(n_) +
                             " qubits");
        }
    }
    const auto &k = active_kernels();
    const std::size_t q = g.qubits[0];
    switch (g.kind) {
    case GateKind::Z:
        k.apply_diag(amps_, q, 1.0, -1.0);
        break;
    case GateKind::RZ: {
        const cplx ph = std::polar(1.0, -g.angle / 2.0);
        k.apply_diag(amps_, q, ph, std::conj(ph));
        break;
    }
    case GateKind::CNOT:
        k.apply_cnot(amps_, g.qubits[0], g.qubits[1]);
        break;
    case GateKind::CZ:
        k.apply_cz(amps_, g.qubits[0], g.qubits[1]);
        break;
    default:
        k.apply_1q(amps_, q, gate_matrix(g.kind, g.angle));
        break;
    }
}

void StateVector::apply_circuit(const Circuit &c) {
    if (c.n_qubits() != n_) {
        throw DimensionError("circuit on " + std::to_string(c.n_qubits()) +
                             " qubits applied to a " + std::to_string(n_) +
                             "-qubit state");
    }
    for (const auto &g : c.gates()) {
        apply_gate(g);
    }
    if (c.global_phase() != 0.0) {
        const cplx ph = std::polar(1.0, c.global_phase());
        for (auto &a : amps_) {
            a *= ph;
        }
    }
}

double expectation(const StateVector &s, const PauliString &p) {
    if (p.n_qubits() != s.n_qubits()) {
        throw DimensionError("observable width mismatch");
    }
    const cplx raw =
        active_kernels().pauli_expval(s.amplitudes(), p.x_mask(), p.z_mask());
    return (Phase::from_exponent(p.y_count()).value() * raw).real();
}

double expectation(const StateVector &s, const PauliSum &obs) {
    if (obs.n_qubits() != s.n_qubits()) {
        throw DimensionError("observable on " + std::to_string(obs.n_qubits()) +
                             " qubits, state on " +
                             std::to_string(s.n_qubits()));
    }
    if (obs.max_imag() > 1e-10) {
        throw InvalidObservableError(
            "observable has non-real coefficients (max |Im| = " +
            std::to_string(obs.max_imag()) + ")");
    }
    double e = 0.0;
    for (const auto &t : obs.terms()) {
        e += t.coefficient.real() *
             (t.string.is_identity() ? 1.0 : expectation(s, t.string));
    }
    return e;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(master) ^ index);
}

SampleStats sample_expectation(const StateVector &s, const PauliString &p,
                               std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("sample_expectation needs at least one shot");
    }
    if (p.n_qubits() != s.n_qubits()) {
        throw DimensionError("observable width mismatch");
    }
    if (p.is_identity()) {
        return {1.0, 0.0};
    }
    StateVector rotated = s;
    for (std::size_t q = 0; q < p.n_qubits(); ++q) {
        switch (p.axis(q)) {
        case Axis::X:
            rotated.apply_gate(Gate::one(GateKind::H, q));
            break;
        case Axis::Y:
            rotated.apply_gate(
                Gate::rotation(GateKind::RX, q, std::numbers::pi / 2.0));
            break;
        default:
            break;
        }
    }
    const auto cdf = cdf_of(rotated.probabilities());
    std::mt19937_64 rng(seed);
    const std::uint64_t support = p.support();
    std::uint64_t minus = 0;
    for (std::uint64_t k = 0; k < shots; ++k) {
        minus += static_cast<std::uint64_t>(std::popcount(draw(cdf, rng) & support) & 1);
    }
    const double n = static_cast<double>(shots);
    const double plus = n - static_cast<double>(minus);
    const double mean = (plus - static_cast<double>(minus)) / n;
    // Outcomes are +-1, so sum (x - mean)^2 = n (1 - mean^2).
    const double var = shots > 1 ? n * (1.0 - mean * mean) / (n - 1.0) : 0.0;
    return {mean, std::max(var, 0.0)};
}

std::vector<std::uint64_t> sample_bitstrings(const StateVector &s,
                                             std::uint64_t shots,
                                             std::uint64_t seed) {
    const auto cdf = cdf_of(s.probabilities());
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> out(shots);
    for (auto &o : out) {
        o = draw(cdf, rng);
    }
    return out;
}

double estimate_energy(const StateVector &s, const PauliSum &h,
                       const ShotPlan &plan) {
    if (plan.exact) {
        return expectation(s, h);
    }
    if (h.max_imag() > 1e-10) {
        throw InvalidObservableError("observable has non-real coefficients");
    }
    double e = 0.0;
    for (std::size_t a = 0; a < h.terms().size(); ++a) {
        const auto &t = h.terms()[a];
        if (t.string.is_identity()) {
            e += t.coefficient.real();
            continue;
        }
        const std::uint64_t shots = plan.shots_for(a);
        if (shots == 0) {
            continue;
        }
        e += t.coefficient.real() *
             sample_expectation(s, t.string, shots,
                                derive_seed(plan.master_seed, a))
                 .mean;
    }
    return e;
}

std::pair<double, double> state_to_bloch(const StateVector &s) {
    if (s.n_qubits() != 1) {
        throw ShapeError("state_to_bloch needs a single-qubit state");
    }
    const cplx a = s[0];
    const cplx b = s[1];
    const double theta = 2.0 * std::acos(std::clamp(std::abs(a), 0.0, 1.0));
    if (std::sin(theta / 2.0) <= 1e-12) {
        return {theta, 0.0};
    }
    double phi = std::arg(b) - (std::abs(a) > 1e-12 ? std::arg(a) : 0.0);
    const double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) {
        phi += two_pi;
    }
    if (phi >= two_pi - 1e-15) {
        phi = 0.0;
    }
    return {theta, phi};
}

DenseMatrix circuit_unitary(const Circuit &c) {
    if (c.n_qubits() > oracle_qubit_limit()) {
        throw CapacityError("circuit_unitary: " + std::to_string(c.n_qubits()) +
                            " qubits exceeds oracle limit " +
                            std::to_string(oracle_qubit_limit()));
    }
    const std::size_t dim = std::size_t{1} << c.n_qubits();
    DenseMatrix u(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        StateVector s = StateVector::basis(c.n_qubits(), i, kMaxQubits);
        s.apply_circuit(c);
        for (std::size_t r = 0; r < dim; ++r) {
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = s[r];
        }
    }
    return u;
}

} // namespace fermivqe
