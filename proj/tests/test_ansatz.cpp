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
#include "fermivqe/ansatz.hpp"
#include "fermivqe/error.hpp"
#include "fermivqe/mapping.hpp"
#include "fermivqe/resources.hpp"
#include "fermivqe/statevector.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace fermivqe;
namespace ft = fermivqe::testing;

namespace {

cplx coefficient_of(const PauliSum &s, const PauliString &p) {
    for (const auto &t : s.terms()) {
        if (t.string == p) {
            return t.coefficient;
        }
    }
    return 0.0;
}

std::size_t count_kind(const std::vector<Excitation> &e, ExcitationKind k) {
    return static_cast<std::size_t>(std::count_if(
        e.begin(), e.end(), [k](const Excitation &x) { return x.kind == k; }));
}

std::vector<double> random_params(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> p(n);
    for (auto &x : p) {
        x = u(rng);
    }
    return p;
}

} // namespace

TEST(Uccsd, SmallCounts) {
    const auto e = uccsd_excitations(2, 4);
    EXPECT_EQ(count_kind(e, ExcitationKind::single), 4U);
    EXPECT_EQ(count_kind(e, ExcitationKind::double_), 1U);
    EXPECT_EQ(parameter_count(e), 5U);
    const auto w = uccsd_excitations(10, 14);
    EXPECT_EQ(count_kind(w, ExcitationKind::single), 40U);
    EXPECT_EQ(count_kind(w, ExcitationKind::double_), 270U);
}

TEST(Uccsd, DegenerateIsEmpty) {
    EXPECT_TRUE(uccsd_excitations(4, 4).empty());
    EXPECT_TRUE(uccsd_excitations(0, 4).empty());
}

TEST(Uccgsd, SmallCounts) {
    const auto e = uccgsd_excitations(4);
    EXPECT_EQ(count_kind(e, ExcitationKind::single), 6U);
    EXPECT_EQ(count_kind(e, ExcitationKind::double_), 15U);
    const auto two = uccgsd_excitations(2);
    EXPECT_EQ(count_kind(two, ExcitationKind::single), 1U);
    EXPECT_EQ(count_kind(two, ExcitationKind::double_), 0U);
}

TEST(Uccgsd, ContainsUccsd) {
    for (std::size_t n_f = 2; n_f <= 8; ++n_f) {
        const auto g = uccgsd_excitations(n_f);
        std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> keys;
        for (const auto &x : g) {
            keys.insert({x.from_modes, x.to_modes});
        }
        for (std::size_t n_e = 1; n_e < n_f; ++n_e) {
            for (const auto &x : uccsd_excitations(n_e, n_f)) {
                EXPECT_TRUE(keys.count({x.from_modes, x.to_modes}))
                    << "n_f=" << n_f << " n_e=" << n_e;
            }
        }
    }
}

TEST(Kupccgsd, PairedDoublesAndReplication) {
    const auto e1 = kupccgsd_excitations(4, 1);
    EXPECT_EQ(count_kind(e1, ExcitationKind::paired_double), 1U);
    const auto e3 = kupccgsd_excitations(4, 3);
    EXPECT_EQ(parameter_count(e3), 3 * parameter_count(e1));
    EXPECT_THROW(static_cast<void>(kupccgsd_excitations(5, 1)), ShapeError);
    EXPECT_THROW(static_cast<void>(kupccgsd_excitations(2, 1)), ShapeError);
}

TEST(Kupccgsd, PairedDoubleFactorOrder) {
    // Orbital q=0 to p=1: a+_2 a+_3 a_1 a_0.
    const Excitation e{ExcitationKind::paired_double, {0, 1}, {2, 3}, 0, 0};
    const auto op = excitation_operator(e, 4);
    ASSERT_EQ(op.size(), 1U);
    EXPECT_EQ(op.terms()[0].factors,
              (std::vector<Factor>{cre(2), cre(3), ann(1), ann(0)}));
}

TEST(Counts, EnumerationMatchesClosedForms) {
    for (std::size_t n_f = 2; n_f <= 14; ++n_f) {
        for (std::size_t n_e = 1; n_e < n_f; ++n_e) {
            const auto c = ansatz_term_counts(n_e, n_f, AnsatzFamily::UCCSD);
            EXPECT_EQ(uccsd_excitations(n_e, n_f).size(), c.total_directed);
        }
        const auto g = ansatz_term_counts(0, n_f, AnsatzFamily::UCCGSD);
        const auto ge = uccgsd_excitations(n_f);
        EXPECT_EQ(2 * count_kind(ge, ExcitationKind::single), g.singles_directed);
        EXPECT_EQ(2 * count_kind(ge, ExcitationKind::double_), g.doubles_directed);
        EXPECT_LE(g.doubles_directed, *g.doubles_estimate);
        if (n_f >= 4 && n_f % 2 == 0) {
            for (std::size_t k = 1; k <= 3; ++k) {
                const auto p = ansatz_term_counts(0, n_f, AnsatzFamily::kUpCCGSD, k);
                EXPECT_EQ(2 * kupccgsd_excitations(n_f, k).size(), p.total_directed);
            }
        }
    }
}

TEST(Generator, WorkedSingleExcitation) {
    const Excitation e{ExcitationKind::single, {3}, {1}, 0, 0};
    const double theta = 0.37;
    const std::vector<Excitation> list = {e};
    const std::vector<double> params = {theta};
    const PauliSum g = generator_paulisum(list, 5, params);
    ASSERT_EQ(g.size(), 2U);
    EXPECT_LE(std::abs(coefficient_of(g, PauliString::parse("X1 Z2 Y3", 5)) -
                       cplx{0, theta / 2}),
              1e-12);
    EXPECT_LE(std::abs(coefficient_of(g, PauliString::parse("Y1 Z2 X3", 5)) +
                       cplx{0, theta / 2}),
              1e-12);
    const std::vector<double> zero = {0.0};
    EXPECT_TRUE(generator_paulisum(list, 5, zero).empty());
    const std::vector<double> wrong = {0.1, 0.2};
    EXPECT_THROW(static_cast<void>(generator_paulisum(list, 5, wrong)), ShapeError);
}

TEST(Generator, AntiHermitianAndNumberConserving) {
    std::mt19937_64 rng(21);
    const DenseMatrix n_op = to_matrix(jw_map(number_operator(6)));
    for (const auto &excs : {uccsd_excitations(2, 6), uccgsd_excitations(6),
                             kupccgsd_excitations(6, 2)}) {
        const auto params = random_params(parameter_count(excs), rng);
        const DenseMatrix g = to_matrix(generator_paulisum(excs, 6, params));
        EXPECT_LE(ft::max_abs(g + g.adjoint()), 1e-12);
        EXPECT_LE(ft::max_abs(g * n_op - n_op * g), 1e-10);
        EXPECT_GT(ft::max_abs(g), 0.0);
    }
}

TEST(Generator, SpinConservingFilter) {
    for (const auto &e : uccgsd_excitations(6, true)) {
        std::size_t from_beta = 0;
        std::size_t to_beta = 0;
        for (auto m : e.from_modes) {
            from_beta += m & 1U;
        }
        for (auto m : e.to_modes) {
            to_beta += m & 1U;
        }
        EXPECT_EQ(from_beta, to_beta);
    }
    EXPECT_LT(uccsd_excitations(2, 4, true).size(), uccsd_excitations(2, 4).size());
}

TEST(AnsatzCircuit, SingleExcitationMatchesExponential) {
    // Strings within one excitation commute, so one Trotter step is exact.
    for (const auto &e : {Excitation{ExcitationKind::single, {0}, {2}, 0, 0},
                          Excitation{ExcitationKind::double_, {0, 1}, {2, 3}, 0, 0}}) {
        const std::vector<Excitation> list = {e};
        Circuit c = ansatz_circuit(list, 4, 1);
        const std::vector<double> theta = {0.61};
        bind_parameters(c, theta);
        const DenseMatrix g = to_matrix(generator_paulisum(list, 4, theta));
        const DenseMatrix expect = ft::expm_hermitian(cplx{0, 1} * g, 1.0);
        EXPECT_LE(ft::max_abs(circuit_unitary(c) - expect), 1e-10);
    }
}

TEST(AnsatzCircuit, HartreeFockPreparation) {
    const Circuit c = hf_circuit(2, 4);
    EXPECT_EQ(circuit_depth(c), 1U);
    StateVector s(4);
    s.apply_circuit(c);
    EXPECT_EQ(s[0b0011], cplx(1.0));
}

TEST(AnsatzSpec, Validation) {
    AnsatzSpec s;
    s.k = 2;
    EXPECT_THROW(s.validate(), DomainError);
    s.family = AnsatzFamily::kUpCCGSD;
    EXPECT_NO_THROW(s.validate());
    s.trotter_steps = 0;
    EXPECT_THROW(s.validate(), DomainError);
    EXPECT_EQ(parse_family("k-UpCCGSD"), AnsatzFamily::kUpCCGSD);
    EXPECT_THROW(static_cast<void>(parse_family("adapt")), UnsupportedError);
}

TEST(AnsatzParams, Initialization) {
    EXPECT_EQ(initial_parameters(3), (std::vector<double>{0, 0, 0}));
    const auto p = initial_parameters(50, true, 3);
    EXPECT_EQ(p, initial_parameters(50, true, 3));
    for (double x : p) {
        EXPECT_LT(std::abs(x), 0.1);
    }
}
