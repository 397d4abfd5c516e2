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
#include "fermivqe/mapping.hpp"

#include "fermivqe/error.hpp"

namespace fermivqe {

namespace {

PauliSum ladder(std::size_t mode, std::size_t n_modes, double y_sign) {
    if (mode >= n_modes) {
        throw IndexError("mode " + std::to_string(mode) + " out of range for " +
                         std::to_string(n_modes) + " modes");
    }
    const std::uint64_t bit = std::uint64_t{1} << mode;
    const std::uint64_t z_string = bit - 1;
    PauliSum s(n_modes);
    s.add_term({0.5, 0.0}, PauliString(n_modes, bit, z_string));
    s.add_term({0.0, 0.5 * y_sign}, PauliString(n_modes, bit, z_string | bit));
    return s;
}

} // namespace

PauliSum jw_annihilation(std::size_t mode, std::size_t n_modes) {
    return ladder(mode, n_modes, +1.0);
}

PauliSum jw_creation(std::size_t mode, std::size_t n_modes) {
    return ladder(mode, n_modes, -1.0);
}

PauliSum jw_map(const FermionOperator &op) {
    const std::size_t n = op.n_modes();
    PauliSum out(n);
    for (const auto &term : op.terms()) {
        PauliSum prod = PauliSum::identity(n, term.coefficient);
        for (const auto &f : term.factors) {
            prod = prod * (f.dagger ? jw_creation(f.mode, n)
                                    : jw_annihilation(f.mode, n));
        }
        out += prod;
    }
    return simplify(out);
}

} // namespace fermivqe
