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
#include "fermivqe/error.hpp"
#include "fermivqe/molham.hpp"
#include "fermivqe/statevector.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fermivqe;
namespace ft = fermivqe::testing;

namespace {

// Closed-shell RHF energy straight from spatial integrals:
// h0 + sum_i 2 h_ii + sum_ij [2 (ii|jj) - (ij|ji)], i, j over occupied.
double rhf_energy_oracle(const MolecularIntegrals &m) {
    const std::size_t occ = m.n_electrons() / 2;
    double e = m.core_energy();
    for (std::size_t i = 0; i < occ; ++i) {
        e += 2.0 * m.one_body(i, i);
        for (std::size_t j = 0; j < occ; ++j) {
            e += 2.0 * m.two_body(i, i, j, j) - m.two_body(i, j, j, i);
        }
    }
    return e;
}

const char *kTiny = R"( &FCI NORB=2,NELEC=2,MS2=0,
  ORBSYM=1,1,
  ISYM=1,
 &END
  0.5  1 1 1 1
  0.25 2 2 1 1
  0.1  2 1 2 1
  0.3  2 2 2 2
 -1.0D+00  1 1 0 0
 -0.5  2 2 0 0
  0.05 2 1 0 0
  0.7  0 0 0 0
)";

} // namespace

TEST(Fcidump, ParsesHeaderAndSymmetries) {
    const auto m = parse_fcidump(kTiny);
    EXPECT_EQ(m.n_orbitals(), 2U);
    EXPECT_EQ(m.n_electrons(), 2U);
    EXPECT_DOUBLE_EQ(m.core_energy(), 0.7);
    EXPECT_DOUBLE_EQ(m.one_body(0, 0), -1.0);
    EXPECT_DOUBLE_EQ(m.one_body(0, 1), 0.05);
    EXPECT_DOUBLE_EQ(m.one_body(1, 0), 0.05);
    EXPECT_DOUBLE_EQ(m.two_body(0, 0, 1, 1), 0.25);
    EXPECT_DOUBLE_EQ(m.two_body(1, 1, 0, 0), 0.25);
    EXPECT_DOUBLE_EQ(m.two_body(0, 1, 1, 0), 0.1);
    EXPECT_DOUBLE_EQ(m.two_body(1, 0, 0, 1), 0.1);
    EXPECT_DOUBLE_EQ(m.symmetry_violation(), 0.0);
}

TEST(Fcidump, SlashTerminatorAndDefaults) {
    const auto m = parse_fcidump("&FCI NORB=1, NELEC=1 /\n 2.0 1 1 0 0\n");
    EXPECT_EQ(m.ms2(), 0);
    EXPECT_DOUBLE_EQ(m.one_body(0, 0), 2.0);
}

TEST(Fcidump, ErrorsCarryLineNumbers) {
    try {
        static_cast<void>(parse_fcidump(
            "&FCI NORB=2,NELEC=2 &END\n 0.5 1 1 1 1\n 0.6 1 1 1 1\n"));
        FAIL() << "conflicting duplicate accepted";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3U);
    }
    try {
        static_cast<void>(parse_fcidump("&FCI NORB=2,NELEC=2 &END\n 0.5 3 1 1 1\n"));
        FAIL() << "index above NORB accepted";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2U);
    }
    EXPECT_THROW(static_cast<void>(parse_fcidump("&FCI NELEC=2 &END\n")), ParseError);
    EXPECT_THROW(static_cast<void>(parse_fcidump("&FCI NORB=2,NELEC=2 &END\n 0.5 1 1\n")),
                 ParseError);
    EXPECT_THROW(static_cast<void>(parse_fcidump("&FCI NORB=2,NELEC=2 &END\n 0.5 1 0 0 0\n")),
                 ParseError);
    EXPECT_THROW(static_cast<void>(parse_fcidump("&FCI NORB=2,NELEC=2\n 0.5 1 1 1 1\n")),
                 ParseError);
    EXPECT_THROW(static_cast<void>(load_fcidump("/nonexistent/file")), ParseError);
}

TEST(Fcidump, ConsistentDuplicatesAccepted) {
    const auto m = parse_fcidump(
        "&FCI NORB=2,NELEC=2 &END\n 0.5 1 1 2 2\n 0.5 2 2 1 1\n");
    EXPECT_DOUBLE_EQ(m.two_body(0, 0, 1, 1), 0.5);
}

TEST(SpinOrbitals, PhysicistsNotationAndSpinDelta) {
    const auto m = parse_fcidump(kTiny);
    const auto s = to_spin_orbitals(m);
    ASSERT_EQ(s.n_spin_orbitals(), 4U);
    // <pq|rs> = (pr|qs) with spins of p,r and q,s matching.
    EXPECT_DOUBLE_EQ(s.two_body(0, 3, 0, 3), m.two_body(0, 0, 1, 1));
    EXPECT_DOUBLE_EQ(s.two_body(0, 3, 3, 0), 0.0);
    EXPECT_DOUBLE_EQ(s.two_body(0, 2, 2, 0), m.two_body(0, 1, 1, 0));
    EXPECT_DOUBLE_EQ(s.one_body(0, 2), 0.05);
    EXPECT_DOUBLE_EQ(s.one_body(0, 3), 0.0);
    EXPECT_DOUBLE_EQ(s.core_energy(), 0.7);
}

TEST(Hamiltonian, FixtureHartreeFockEnergies) {
    for (const char *name : {"h2_sto3g", "h2_631g", "lih_sto3g", "h4_sto3g"}) {
        const auto fx = ft::fixture(name);
        const auto m = ft::load_fixture(name);
        EXPECT_EQ(m.n_orbitals(), fx.n_orbitals);
        EXPECT_EQ(m.n_electrons(), fx.n_electrons);
        EXPECT_NEAR(m.core_energy(), fx.core_energy, 1e-10) << name;
        EXPECT_LE(m.symmetry_violation(), 1e-10) << name;
        const PauliSum h = qubit_hamiltonian(m);
        const Occupation hf = hf_state(m.n_electrons(), h.n_qubits());
        const double e = hf_energy(h, hf);
        EXPECT_NEAR(e, fx.e_hf, 1e-8) << name;
        EXPECT_NEAR(e, rhf_energy_oracle(m), 1e-10) << name;
        const auto sv = StateVector::basis(h.n_qubits(), hf.bits());
        EXPECT_NEAR(expectation(sv, h), e, 1e-10) << name;
    }
}

TEST(Hamiltonian, RandomIntegralsAgreeWithRhfOracle) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int trial = 0; trial < 5; ++trial) {
        MolecularIntegrals m(3, 2 + 2 * (trial % 2));
        m.set_core_energy(u(rng));
        for (std::size_t p = 0; p < 3; ++p) {
            for (std::size_t q = 0; q <= p; ++q) {
                m.set_one_body(p, q, u(rng));
                for (std::size_t r = 0; r < 3; ++r) {
                    for (std::size_t s = 0; s <= r; ++s) {
                        m.set_two_body(p, q, r, s, u(rng));
                    }
                }
            }
        }
        // Later writes may overwrite earlier symmetric partners; the oracle
        // reads the final tensor, so only self-consistency matters.
        EXPECT_LE(m.symmetry_violation(), 1e-15);
        const PauliSum h = qubit_hamiltonian(m);
        EXPECT_NEAR(hf_energy(h, hf_state(m.n_electrons(), 6)),
                    rhf_energy_oracle(m), 1e-12);
    }
}

TEST(Hamiltonian, HfStateAndErrors) {
    EXPECT_EQ(hf_state(2, 4).bits(), 0b11U);
    EXPECT_THROW(static_cast<void>(hf_state(5, 4)), CapacityError);
    EXPECT_THROW(static_cast<void>(hf_energy(PauliSum(3), hf_state(2, 4))),
                 DimensionError);
    EXPECT_THROW(MolecularIntegrals(0, 1), CapacityError);
}
