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
#include "fermivqe/fci.hpp"

#include "fermivqe/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace fermivqe {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

void check_sector_dim(std::size_t dim) {
    const std::size_t limit = oracle_qubit_limit();
    if (limit < 63 && dim > (std::size_t{1} << limit)) {
        throw CapacityError("sector dimension " + std::to_string(dim) +
                            " exceeds 2^" + std::to_string(limit));
    }
}

std::vector<std::uint64_t> masks(const std::vector<Occupation> &b) {
    std::vector<std::uint64_t> m;
    m.reserve(b.size());
    for (const auto &o : b) {
        m.push_back(o.bits());
    }
    return m;
}

GroundState lowest(const DenseMatrix &m, std::vector<std::uint64_t> basis) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(m);
    if (es.info() != Eigen::Success) {
        throw ComputationError("eigensolver failed to converge");
    }
    return {es.eigenvalues()(0), es.eigenvectors().col(0), std::move(basis)};
}

} // namespace

std::vector<Occupation> sector_basis(std::size_t n_modes,
                                     std::size_t n_electrons) {
    if (n_modes == 0 || n_modes > kMaxSectorModes) {
        throw CapacityError("sector_basis supports 1.." +
                            std::to_string(kMaxSectorModes) + " modes, got " +
                            std::to_string(n_modes));
    }
    if (n_electrons > n_modes) {
        throw CapacityError("more electrons than modes");
    }
    std::vector<Occupation> out;
    out.reserve(binomial(n_modes, n_electrons));
    if (n_electrons == 0) {
        out.emplace_back(n_modes, 0);
        return out;
    }
    // Gosper's hack walks same-popcount masks in increasing order.
    const std::uint64_t end = std::uint64_t{1} << n_modes;
    for (std::uint64_t v = (std::uint64_t{1} << n_electrons) - 1; v < end;) {
        out.emplace_back(n_modes, v);
        const std::uint64_t c = v & (~v + 1);
        const std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

DenseMatrix sector_matrix(const PauliSum &h, std::size_t n_electrons) {
    const auto basis = masks(sector_basis(h.n_qubits(), n_electrons));
    check_sector_dim(basis.size());
    const auto dim = static_cast<Eigen::Index>(basis.size());
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const std::uint64_t b = basis[static_cast<std::size_t>(col)];
        for (const auto &t : h.terms()) {
            const auto [phase, target] = t.string.apply_to_basis(b);
            if (std::popcount(target) != static_cast<int>(n_electrons)) {
                continue;
            }
            const auto it = std::lower_bound(basis.begin(), basis.end(), target);
            m(it - basis.begin(), col) += t.coefficient * phase.value();
        }
    }
    return m;
}

DenseMatrix sector_matrix(const FermionOperator &h, std::size_t n_electrons) {
    const auto basis = masks(sector_basis(h.n_modes(), n_electrons));
    check_sector_dim(basis.size());
    const auto dim = static_cast<Eigen::Index>(basis.size());
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const Occupation occ(h.n_modes(), basis[static_cast<std::size_t>(col)]);
        const FockState out = apply_operator(h, FockState::basis(occ));
        for (const auto &[bits, amp] : out.amplitudes) {
            if (std::popcount(bits) != static_cast<int>(n_electrons)) {
                continue;
            }
            const auto it = std::lower_bound(basis.begin(), basis.end(), bits);
            m(it - basis.begin(), col) += amp;
        }
    }
    return m;
}

GroundState ground_energy(const PauliSum &h, std::optional<std::size_t> sector) {
    if (h.max_imag() > 1e-10) {
        throw InvalidObservableError(
            "ground_energy: Hamiltonian has non-real coefficients");
    }
    if (sector) {
        return lowest(sector_matrix(h, *sector),
                      masks(sector_basis(h.n_qubits(), *sector)));
    }
    const DenseMatrix m = to_matrix(h);
    std::vector<std::uint64_t> basis(static_cast<std::size_t>(m.rows()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        basis[i] = i;
    }
    return lowest(m, std::move(basis));
}

GroundState ground_energy(const FermionOperator &h, std::size_t n_electrons) {
    const DenseMatrix m = sector_matrix(h, n_electrons);
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-10) {
        throw InvalidObservableError(
            "ground_energy: operator is not Hermitian in the sector (max "
            "deviation " +
            std::to_string(dev) + ")");
    }
    return lowest(m, masks(sector_basis(h.n_modes(), n_electrons)));
}

} // namespace fermivqe
