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
 * @file fci.hpp
 * Exact ground states by dense diagonalization, in the full qubit space or
 * restricted to a fixed electron number.
 */
#pragma once

#include "fermivqe/dense.hpp"
#include "fermivqe/fermion.hpp"
#include "fermivqe/pauli.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace fermivqe {

/// Largest mode count accepted by sector_basis.
inline constexpr std::size_t kMaxSectorModes = 20;

/// All occupations with n_electrons set bits, ascending mask order.
[[nodiscard]] std::vector<Occupation> sector_basis(std::size_t n_modes,
                                                   std::size_t n_electrons);

struct GroundState {
    double energy;
    DenseVector vector;
    /// Basis masks indexing `vector`; every index 0..2^n-1 for full space.
    std::vector<std::uint64_t> basis;
};

/// P H P with P the projector onto the sector, in sector_basis order.
[[nodiscard]] DenseMatrix sector_matrix(const PauliSum &h,
                                        std::size_t n_electrons);
[[nodiscard]] DenseMatrix sector_matrix(const FermionOperator &h,
                                        std::size_t n_electrons);

/**
 * Lowest eigenpair. Without a sector the full 2^n matrix is used (capped by
 * oracle_qubit_limit()); with one, the sector dimension is capped at
 * 2^oracle_qubit_limit(). Throws InvalidObservableError for non-real
 * coefficients beyond 1e-10.
 */
[[nodiscard]] GroundState ground_energy(const PauliSum &h,
                                        std::optional<std::size_t> sector = {});

/// Sector ground state assembled through apply_operator. Throws
/// InvalidObservableError when the sector matrix is not Hermitian.
[[nodiscard]] GroundState ground_energy(const FermionOperator &h,
                                        std::size_t n_electrons);

/// e_fci - e_hf.
[[nodiscard]] inline double correlation_energy(double e_fci,
                                               double e_hf) noexcept {
    return e_fci - e_hf;
}

} // namespace fermivqe
