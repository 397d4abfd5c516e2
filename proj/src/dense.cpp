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
#include "fermivqe/dense.hpp"

#include "fermivqe/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace fermivqe {

std::size_t oracle_qubit_limit() {
    const char *env = std::getenv("FERMIVQE_ORACLE_LIMIT");
    if (env != nullptr) {
        std::size_t v = 0;
        const char *end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, v);
        if (ec == std::errc{} && ptr == end && v > 0) {
            return v;
        }
    }
    return kDefaultOracleLimit;
}

DenseMatrix to_matrix(const PauliSum &s) {
    const std::size_t n = s.n_qubits();
    if (n > oracle_qubit_limit()) {
        throw CapacityError("to_matrix: " + std::to_string(n) +
                            " qubits exceeds oracle limit " +
                            std::to_string(oracle_qubit_limit()));
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                      static_cast<Eigen::Index>(dim));
    for (const auto &t : s.terms()) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            auto [phase, row] = t.string.apply_to_basis(col);
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
                t.coefficient * phase.value();
        }
    }
    return m;
}

DenseMatrix to_matrix(const PauliString &p) {
    return to_matrix(PauliSum::term(1.0, p));
}

} // namespace fermivqe
