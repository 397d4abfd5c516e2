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
 * @file dense.hpp
 * Small-n dense matrix realizations used by the exact oracles.
 */
#pragma once

#include "fermivqe/pauli.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace fermivqe {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Default qubit cap for full-space dense matrices.
inline constexpr std::size_t kDefaultOracleLimit = 14;

/**
 * Qubit cap for dense matrices. FERMIVQE_ORACLE_LIMIT overrides the default
 * when it holds a positive integer.
 */
[[nodiscard]] std::size_t oracle_qubit_limit();

/// Sum of c * (tensor product), qubit 0 = least significant index bit.
/// Throws CapacityError above `oracle_qubit_limit()`.
[[nodiscard]] DenseMatrix to_matrix(const PauliSum &s);
[[nodiscard]] DenseMatrix to_matrix(const PauliString &p);

} // namespace fermivqe
