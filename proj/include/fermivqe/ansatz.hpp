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
 * @file ansatz.hpp
 * UCCSD, UCCGSD and k-UpCCGSD excitation lists, their anti-Hermitian
 * generators T - T^dagger and the parameterized circuits built from them.
 *
 * A single excitation q -> p is T = a+_p a_q. A double (q1 < q2) -> (p1 < p2)
 * is T = a+_p1 a+_p2 a_q2 a_q1. A paired double between spatial orbitals q and
 * p is the double (2q, 2q+1) -> (2p, 2p+1). Since T - T^dagger changes only
 * sign under reversal, each unordered pair is enumerated once, from the lower
 * index (pair) to the higher one, and carries one parameter.
 */
#pragma once

#include "fermivqe/circuit.hpp"
#include "fermivqe/fermion.hpp"
#include "fermivqe/pauli.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fermivqe {

enum class AnsatzFamily { UCCSD, UCCGSD, kUpCCGSD };

[[nodiscard]] std::string_view family_name(AnsatzFamily f) noexcept;
/// Accepts "uccsd", "uccgsd", "kupccgsd" (case-insensitive).
[[nodiscard]] AnsatzFamily parse_family(std::string_view name);

enum class ExcitationKind { single, double_, paired_double };

struct Excitation {
    ExcitationKind kind;
    std::vector<std::size_t> from_modes;
    std::vector<std::size_t> to_modes;
    std::size_t parameter_index;
    /// Replica index for k-UpCCGSD, 0 otherwise.
    std::size_t layer{0};
};

struct AnsatzSpec {
    AnsatzFamily family{AnsatzFamily::UCCSD};
    std::size_t k{1};
    std::size_t trotter_steps{1};
    std::size_t n_electrons{0};
    std::size_t n_spin_orbitals{0};
    /// Keep only excitations that conserve the number of beta electrons.
    bool spin_conserving{false};

    /// Throws DomainError on k/l violations.
    void validate() const;
};

/// Occupied modes 0..n_e-1 to virtual modes n_e..n_f-1; singles then doubles.
/// n_e == 0 or n_e >= n_f yields an empty list and a warning on std::clog.
[[nodiscard]] std::vector<Excitation>
uccsd_excitations(std::size_t n_e, std::size_t n_f, bool spin_conserving = false);

/// All pairs of modes and all pairs of mode pairs; singles then doubles.
[[nodiscard]] std::vector<Excitation>
uccgsd_excitations(std::size_t n_f, bool spin_conserving = false);

/// Generalized singles plus paired doubles, replicated k times with
/// independent parameters. Throws ShapeError for odd n_f or n_f < 4.
[[nodiscard]] std::vector<Excitation>
kupccgsd_excitations(std::size_t n_f, std::size_t k,
                     bool spin_conserving = false);

[[nodiscard]] std::vector<Excitation> build_excitations(const AnsatzSpec &spec);

/// Largest parameter index plus one.
[[nodiscard]] std::size_t parameter_count(std::span<const Excitation> excs);

/// T for one excitation (unit amplitude).
[[nodiscard]] FermionOperator excitation_operator(const Excitation &e,
                                                  std::size_t n_f);

/// sum_j params[j] (T_j - T_j^dagger) in fermion form.
[[nodiscard]] FermionOperator
generator_fermion(std::span<const Excitation> excs, std::size_t n_f,
                  std::span<const double> params);

/// jw_map of generator_fermion; anti-Hermitian for real params.
/// Throws ShapeError when params.size() != parameter_count(excs).
[[nodiscard]] PauliSum generator_paulisum(std::span<const Excitation> excs,
                                          std::size_t n_f,
                                          std::span<const double> params);

/// Rotations of one Trotter step, excitation-list order, each tied to its
/// excitation's parameter.
[[nodiscard]] std::vector<RotationTerm>
ansatz_rotations(std::span<const Excitation> excs, std::size_t n_f);

/// X on qubits 0..n_e-1.
[[nodiscard]] Circuit hf_circuit(std::size_t n_e, std::size_t n_f);

/// Trotterized ansatz circuit with unbound parameter references.
[[nodiscard]] Circuit ansatz_circuit(std::span<const Excitation> excs,
                                     std::size_t n_f, std::size_t trotter_steps);

/// Zeros, or uniform(-0.1, 0.1) draws when `perturb` is set.
[[nodiscard]] std::vector<double> initial_parameters(std::size_t n,
                                                     bool perturb = false,
                                                     std::uint64_t seed = 0);

} // namespace fermivqe
