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
 * @file molham.hpp
 * Molecular integrals, spin-orbital expansion and the second-quantized
 * electronic Hamiltonian
 *
 *   H = sum_pq h_pq a+_p a_q + 1/2 sum_pqrs <pq|rs> a+_p a+_q a_s a_r + h0.
 *
 * Spatial integrals are in chemists' notation (PQ|RS); spin-orbital
 * two-body integrals are in physicists' notation with <pq|rs> = (pr|qs).
 * Spin-orbitals are interleaved: 2P is (P, alpha), 2P+1 is (P, beta).
 */
#pragma once

#include "fermivqe/fermion.hpp"
#include "fermivqe/pauli.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fermivqe {

class MolecularIntegrals {
  public:
    MolecularIntegrals(std::size_t n_orbitals, std::size_t n_electrons);

    [[nodiscard]] std::size_t n_orbitals() const noexcept { return n_; }
    [[nodiscard]] std::size_t n_electrons() const noexcept { return n_e_; }
    [[nodiscard]] int ms2() const noexcept { return ms2_; }
    void set_ms2(int ms2) noexcept { ms2_ = ms2; }

    [[nodiscard]] double core_energy() const noexcept { return h0_; }
    void set_core_energy(double h0) noexcept { h0_ = h0; }

    [[nodiscard]] double one_body(std::size_t p, std::size_t q) const;
    /// Sets h[p][q] and h[q][p].
    void set_one_body(std::size_t p, std::size_t q, double v);

    /// (pq|rs), chemists' notation.
    [[nodiscard]] double two_body(std::size_t p, std::size_t q, std::size_t r,
                                  std::size_t s) const;
    /// Sets all eight symmetry-equivalent entries.
    void set_two_body(std::size_t p, std::size_t q, std::size_t r,
                      std::size_t s, double v);

    /// Max deviation from h = h^T and the 8-fold (PQ|RS) symmetry.
    [[nodiscard]] double symmetry_violation() const;

  private:
    [[nodiscard]] std::size_t idx4(std::size_t p, std::size_t q, std::size_t r,
                                   std::size_t s) const noexcept {
        return ((p * n_ + q) * n_ + r) * n_ + s;
    }
    void check_index(std::size_t i) const;

    std::size_t n_;
    std::size_t n_e_;
    int ms2_{0};
    double h0_{0.0};
    std::vector<double> h1_;
    std::vector<double> h2_;
};

/**
 * Parse FCIDUMP text: "&FCI NORB=n,NELEC=m,MS2=s," (ORBSYM/ISYM accepted and
 * ignored), "&END" or "/", then "value i j k l" lines with 1-based indices.
 * Symmetry-equivalent entries are filled from the stored representative;
 * conflicting duplicates are a ParseError carrying the line number.
 */
[[nodiscard]] MolecularIntegrals parse_fcidump(std::string_view text);
[[nodiscard]] MolecularIntegrals load_fcidump(const std::string &path);

class SpinOrbitalIntegrals {
  public:
    explicit SpinOrbitalIntegrals(std::size_t n_spin_orbitals);

    [[nodiscard]] std::size_t n_spin_orbitals() const noexcept { return n_; }
    [[nodiscard]] double core_energy() const noexcept { return h0_; }
    void set_core_energy(double h0) noexcept { h0_ = h0; }

    [[nodiscard]] double one_body(std::size_t p, std::size_t q) const noexcept {
        return h1_[p * n_ + q];
    }
    double &one_body(std::size_t p, std::size_t q) noexcept {
        return h1_[p * n_ + q];
    }
    /// <pq|rs>, physicists' notation.
    [[nodiscard]] double two_body(std::size_t p, std::size_t q, std::size_t r,
                                  std::size_t s) const noexcept {
        return h2_[((p * n_ + q) * n_ + r) * n_ + s];
    }
    double &two_body(std::size_t p, std::size_t q, std::size_t r,
                     std::size_t s) noexcept {
        return h2_[((p * n_ + q) * n_ + r) * n_ + s];
    }

  private:
    std::size_t n_;
    double h0_{0.0};
    std::vector<double> h1_;
    std::vector<double> h2_;
};

enum class SpinOrdering { interleaved };

[[nodiscard]] SpinOrbitalIntegrals
to_spin_orbitals(const MolecularIntegrals &m,
                 SpinOrdering ordering = SpinOrdering::interleaved);

/// Exactly the second-quantized form above; h0 is an identity term.
[[nodiscard]] FermionOperator build_hamiltonian(const SpinOrbitalIntegrals &s);

/// Modes 0..n_electrons-1 occupied.
[[nodiscard]] Occupation hf_state(std::size_t n_electrons,
                                  std::size_t n_spin_orbitals);

/// <hf|H|hf> from the diagonal (X-free) terms of a qubit Hamiltonian.
[[nodiscard]] double hf_energy(const PauliSum &h_qubit, const Occupation &hf);

/// FCIDUMP -> spin-orbitals -> Fermion operator -> JW qubit Hamiltonian.
[[nodiscard]] PauliSum qubit_hamiltonian(const MolecularIntegrals &m);

} // namespace fermivqe
