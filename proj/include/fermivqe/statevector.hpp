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
 * @file statevector.hpp
 * Dense statevector simulation and exact or shot-sampled expectation values.
 */
#pragma once

#include "fermivqe/circuit.hpp"
#include "fermivqe/dense.hpp"
#include "fermivqe/pauli.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fermivqe {

inline constexpr std::size_t kDefaultStateLimit = 24;

class StateVector {
  public:
    /// |0...0> on n qubits. Throws CapacityError above the limit.
    explicit StateVector(std::size_t n_qubits,
                         std::size_t limit = kDefaultStateLimit);
    static StateVector basis(std::size_t n_qubits, std::uint64_t index,
                             std::size_t limit = kDefaultStateLimit);
    /// Takes the amplitudes as given; size must be a power of two.
    static StateVector from_amplitudes(std::vector<cplx> amps);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<cplx> amplitudes() noexcept { return amps_; }
    [[nodiscard]] cplx operator[](std::size_t i) const { return amps_.at(i); }

    [[nodiscard]] double norm_sq() const;
    [[nodiscard]] std::vector<double> probabilities() const;

    void apply_gate(const Gate &g);
    /// Gates in order, then the global phase.
    void apply_circuit(const Circuit &c);

  private:
    StateVector() = default;
    std::size_t n_{0};
    std::vector<cplx> amps_;
};

/// sum_a Re(c_a) <P_a>. Throws InvalidObservableError if some |Im c_a| > 1e-10.
[[nodiscard]] double expectation(const StateVector &s, const PauliSum &obs);
/// <s|P|s> for one string (real since P is Hermitian).
[[nodiscard]] double expectation(const StateVector &s, const PauliString &p);

struct SampleStats {
    double mean;
    /// Unbiased sample variance (0 for a single shot).
    double variance;
};

/// Simulated projective measurements of P: basis change, bit sampling,
/// eigenvalue = parity over the support.
[[nodiscard]] SampleStats sample_expectation(const StateVector &s,
                                             const PauliString &p,
                                             std::uint64_t shots,
                                             std::uint64_t seed);

/// Computational-basis outcomes, one per shot.
[[nodiscard]] std::vector<std::uint64_t>
sample_bitstrings(const StateVector &s, std::uint64_t shots, std::uint64_t seed);

/// Per-term RNG stream seed derived from the master seed.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master,
                                        std::uint64_t index) noexcept;

struct ShotPlan {
    bool exact{true};
    /// Used for strings without a per-term entry.
    std::uint64_t uniform_shots{0};
    /// Optional per-term shot counts, indexed like the Hamiltonian's terms.
    std::vector<std::uint64_t> per_string;
    std::uint64_t master_seed{0};

    static ShotPlan exact_plan() { return {}; }
    static ShotPlan uniform(std::uint64_t shots, std::uint64_t seed) {
        return {false, shots, {}, seed};
    }
    static ShotPlan per_term(std::vector<std::uint64_t> shots,
                             std::uint64_t seed) {
        return {false, 0, std::move(shots), seed};
    }
    [[nodiscard]] std::uint64_t shots_for(std::size_t term) const noexcept {
        return term < per_string.size() ? per_string[term] : uniform_shots;
    }
};

/**
 * sum_a c_a <P_a>, exact or sampled per the plan. Identity terms are added
 * analytically; strings with zero shots are skipped. Term a uses the stream
 * derive_seed(plan.master_seed, a).
 */
[[nodiscard]] double estimate_energy(const StateVector &s, const PauliSum &h,
                                     const ShotPlan &plan);

/// (theta, phi) of a normalized single-qubit state.
[[nodiscard]] std::pair<double, double> state_to_bloch(const StateVector &s);

/// Column i is the circuit applied to |i>. Capped by oracle_qubit_limit().
[[nodiscard]] DenseMatrix circuit_unitary(const Circuit &c);

} // namespace fermivqe
