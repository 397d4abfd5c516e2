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
#include "fermivqe/fermion.hpp"

#include <gtest/gtest.h>

using namespace fermivqe;

TEST(Fermion, CreationSignCountsModesBelow) {
    // a+_2 |{0,1}> = (+1)|{0,1,2}> ; a+_1 |{0,2}> = -|{0,1,2}>
    auto r = apply_factor(2, true, Occupation::from_modes(4, {0, 1}));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->sign, 1);
    EXPECT_EQ(r->occupation, Occupation::from_modes(4, {0, 1, 2}));
    r = apply_factor(1, true, Occupation::from_modes(4, {0, 2}));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->sign, -1);
}

TEST(Fermion, PauliExclusionGivesZero) {
    EXPECT_FALSE(apply_factor(0, true, Occupation::from_modes(2, {0})));
    EXPECT_FALSE(apply_factor(1, false, Occupation::from_modes(2, {0})));
}

TEST(Fermion, OutOfRangeMode) {
    EXPECT_THROW(static_cast<void>(apply_factor(4, true, Occupation::empty(4))),
                 IndexError);
    FermionOperator op(3);
    EXPECT_THROW(op.add_term(1.0, {cre(3)}), IndexError);
}

TEST(Fermion, AnticommutationOnAllBasisStates) {
    // {a_i, a+_j} = delta_ij and {a_i, a_j} = 0, checked state by state.
    const std::size_t n = 4;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            FermionOperator anti(n);
            anti.add_term(1.0, {ann(i), cre(j)});
            anti.add_term(1.0, {cre(j), ann(i)});
            FermionOperator aa(n);
            aa.add_term(1.0, {ann(i), ann(j)});
            aa.add_term(1.0, {ann(j), ann(i)});
            for (std::uint64_t b = 0; b < (1U << n); ++b) {
                const auto s = FockState::basis(Occupation(n, b));
                const auto out = apply_operator(anti, s);
                if (i == j) {
                    ASSERT_EQ(out.amplitudes.size(), 1U);
                    EXPECT_EQ(out.amplitudes.begin()->first, b);
                    EXPECT_NEAR(std::abs(out.amplitudes.begin()->second - 1.0),
                                0.0, 1e-15);
                } else {
                    EXPECT_TRUE(out.amplitudes.empty());
                }
                EXPECT_TRUE(apply_operator(aa, s).amplitudes.empty());
            }
        }
    }
}

TEST(Fermion, NumberOperatorCountsElectrons) {
    const auto n = number_operator(5);
    for (std::uint64_t b = 0; b < 32; ++b) {
        const Occupation occ(5, b);
        const auto out = apply_operator(n, FockState::basis(occ));
        const double expect = static_cast<double>(occ.n_electrons());
        if (expect == 0.0) {
            EXPECT_TRUE(out.amplitudes.empty());
        } else {
            EXPECT_NEAR(out.amplitudes.at(b).real(), expect, 1e-15);
        }
    }
}

TEST(Fermion, HermitianConjugateReversesFactors) {
    FermionOperator op(4);
    op.add_term({2.0, 1.0}, {cre(3), ann(1)});
    const auto h = hermitian_conjugate(op);
    ASSERT_EQ(h.size(), 1U);
    EXPECT_EQ(h.terms()[0].coefficient, cplx(2.0, -1.0));
    EXPECT_EQ(h.terms()[0].factors, (std::vector<Factor>{cre(1), ann(3)}));
}

TEST(Fermion, OccupationPrinting) {
    EXPECT_EQ(Occupation::from_modes(4, {0, 2}).to_string(), "{0,2}");
    EXPECT_EQ(Occupation::empty(3).to_string(), "{}");
}

TEST(Fermion, ProductAppliesRightFactorFirst) {
    // (a+_0)(a_1) |{1}> = a+_0 |{}> = |{0}>
    FermionOperator c(2);
    c.add_term(1.0, {cre(0)});
    FermionOperator a(2);
    a.add_term(1.0, {ann(1)});
    const auto out =
        apply_operator(c * a, FockState::basis(Occupation::from_modes(2, {1})));
    ASSERT_EQ(out.amplitudes.size(), 1U);
    EXPECT_EQ(out.amplitudes.begin()->first, 1U);
    EXPECT_NEAR(out.amplitudes.begin()->second.real(), 1.0, 1e-15);
}
