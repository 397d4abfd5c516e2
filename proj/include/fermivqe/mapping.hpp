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
 * @file mapping.hpp
 * Jordan-Wigner encoding: qubit j holds the occupation of spin-orbital j
 * (|1> = occupied) and a_j -> Z_0 ... Z_{j-1} (X_j + iY_j)/2.
 */
#pragma once

#include "fermivqe/fermion.hpp"
#include "fermivqe/pauli.hpp"

#include <cstddef>

namespace fermivqe {

[[nodiscard]] PauliSum jw_annihilation(std::size_t mode, std::size_t n_modes);
[[nodiscard]] PauliSum jw_creation(std::size_t mode, std::size_t n_modes);

/// Factor-by-factor substitution, exact products, then simplify().
[[nodiscard]] PauliSum jw_map(const FermionOperator &op);

} // namespace fermivqe
