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
// Shared helpers for the test binaries: fixture access and independent
// dense-matrix oracles.
#pragma once

#include "fermivqe/dense.hpp"
#include "fermivqe/molham.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <string>

namespace fermivqe::testing {

inline std::string data_path(const std::string &name) {
    return std::string(FERMIVQE_TEST_DATA) + "/" + name;
}

struct Fixture {
    std::string name;
    std::size_t n_orbitals;
    std::size_t n_electrons;
    double core_energy;
    double e_hf;
    double e_fci;
};

inline Fixture fixture(const std::string &name) {
    std::ifstream in(data_path("expected.json"));
    const auto j = nlohmann::json::parse(in);
    const auto &f = j.at(name);
    return {name,
            f.at("n_orbitals").get<std::size_t>(),
            f.at("n_electrons").get<std::size_t>(),
            f.at("core_energy").get<double>(),
            f.at("e_hf").get<double>(),
            f.at("e_fci").get<double>()};
}

inline MolecularIntegrals load_fixture(const std::string &name) {
    return load_fcidump(data_path(name + ".fcidump"));
}

/// exp(-i t H) for Hermitian H via eigendecomposition.
inline DenseMatrix expm_hermitian(const DenseMatrix &h, double t) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
    const Eigen::VectorXcd phases =
        (es.eigenvalues().cast<std::complex<double>>() *
         std::complex<double>(0.0, -t))
            .array()
            .exp();
    return es.eigenvectors() * phases.asDiagonal() *
           es.eigenvectors().adjoint();
}

/// Kronecker product with qubit 0 least significant: I(x)...(x)M_q(x)...(x)I.
inline DenseMatrix embed_1q(const Eigen::Matrix2cd &m, std::size_t q,
                            std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix out = DenseMatrix::Zero(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t b = (c >> q) & 1U;
        for (std::size_t r_b = 0; r_b < 2; ++r_b) {
            const std::size_t r = (c & ~(std::size_t{1} << q)) | (r_b << q);
            out(r, c) += m(r_b, b);
        }
    }
    return out;
}

inline double max_abs(const DenseMatrix &m) { return m.cwiseAbs().maxCoeff(); }

/// Difference up to a global phase, aligned on the largest entry of a.
inline double phase_aligned_diff(const DenseMatrix &a, const DenseMatrix &b) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    const std::complex<double> ph = b(r, c) / a(r, c);
    return max_abs(a * (ph / std::abs(ph)) - b);
}

} // namespace fermivqe::testing
