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
#include "fermivqe/mapping.hpp"
#include "fermivqe/resources.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace fermivqe;

namespace {

struct Row {
    const char *molecule;
    const char *basis;
    std::size_t electrons;
    std::size_t occupied;
    std::size_t virtual_orbitals;
    std::size_t functions;
};

// Published table values, row by row.
const std::vector<Row> &table_rows() {
    static const std::vector<Row> rows = {
        {"H2", "STO-3G", 2, 1, 1, 2},        {"He2", "STO-3G", 4, 2, 0, 2},
        {"O2", "STO-3G", 16, 8, 2, 10},      {"Ne2", "STO-3G", 20, 10, 0, 10},
        {"H2O", "STO-3G", 10, 5, 2, 7},      {"HLi", "STO-3G", 4, 2, 4, 6},
        {"HBe", "STO-3G", 5, 3, 3, 6},       {"HB", "STO-3G", 6, 3, 3, 6},
        {"HC", "STO-3G", 7, 4, 2, 6},        {"HN", "STO-3G", 8, 4, 2, 6},
        {"HO", "STO-3G", 9, 5, 1, 6},        {"HF", "STO-3G", 10, 5, 1, 6},
        {"HNe", "STO-3G", 11, 6, 0, 6},
        {"H2", "3-21G", 2, 1, 3, 4},         {"He2", "3-21G", 4, 2, 2, 4},
        {"O2", "3-21G", 16, 8, 10, 18},      {"H2O", "3-21G", 10, 5, 8, 13},
        {"H2O", "6-31G", 10, 5, 8, 13},      {"H2O", "6-311G", 10, 5, 14, 19},
        {"H2O", "6-31G", 10, 5, 8, 13},      {"H2O", "6-31G(d)", 10, 5, 13, 18},
        {"H2O", "6-31G(d,p)", 10, 5, 19, 24}, {"H2O", "6-31+G", 10, 5, 12, 17},
        {"H2O", "6-31++G", 10, 5, 14, 19},   {"H2O", "def2-SVP", 10, 5, 19, 24},
        {"H2O", "def2-TZVP", 10, 5, 38, 43}, {"H2O", "def2-TZVPP", 10, 5, 54, 59},
        {"H2O", "cc-pVDZ", 10, 5, 19, 24},   {"H2O", "cc-pVTZ", 10, 5, 53, 58},
        {"H2O", "aug-cc-pVDZ", 10, 5, 36, 41}, {"H2O", "aug-cc-pVTZ", 10, 5, 87, 92},
    };
    return rows;
}

} // namespace

TEST(BasisCount, EveryTableRow) {
    ASSERT_EQ(table_rows().size(), 31U);
    for (const auto &row : table_rows()) {
        const auto r = basis_count(row.molecule, row.basis);
        SCOPED_TRACE(std::string(row.molecule) + "/" + row.basis);
        EXPECT_EQ(r.n_electrons, row.electrons);
        EXPECT_EQ(r.occupied, row.occupied);
        EXPECT_EQ(r.virtual_orbitals, row.virtual_orbitals);
        EXPECT_EQ(r.n_functions, row.functions);
        EXPECT_EQ(r.n_qubits, 2 * row.functions);
    }
}

TEST(BasisCount, CaseInsensitiveAndErrors) {
    EXPECT_EQ(basis_count("H2O", "sto-3g").n_functions, 7U);
    EXPECT_THROW(static_cast<void>(basis_count("H2O", "6-31G**")), UnsupportedError);
    EXPECT_THROW(static_cast<void>(basis_count("KH", "STO-3G")), UnsupportedError);
    EXPECT_THROW(static_cast<void>(basis_count("NaCl", "6-31G")), UnsupportedError);
    EXPECT_EQ(basis_count("NaCl", "STO-3G").n_functions, 18U);
    try {
        static_cast<void>(find_basis("nope"));
        FAIL();
    } catch (const UnsupportedError &e) {
        EXPECT_NE(std::string(e.what()).find("cc-pVDZ"), std::string::npos);
    }
}

TEST(Formula, Parsing) {
    const auto f = parse_formula("H2O");
    ASSERT_EQ(f.size(), 2U);
    EXPECT_EQ(f[0].first, "H");
    EXPECT_EQ(f[0].second, 2U);
    EXPECT_EQ(f[1].first, "O");
    EXPECT_EQ(f[1].second, 1U);
    EXPECT_EQ(parse_formula("HLi").size(), 2U);
    EXPECT_EQ(parse_formula("CH4")[1].second, 4U);
    EXPECT_THROW(static_cast<void>(parse_formula("")), ParseError);
    EXPECT_THROW(static_cast<void>(parse_formula("h2")), ParseError);
    EXPECT_THROW(static_cast<void>(parse_formula("H0")), ParseError);
    EXPECT_THROW(static_cast<void>(parse_formula("Xx")), UnsupportedError);
    EXPECT_EQ(atomic_number("Ar"), 18U);
}

TEST(TermCounts, ClosedForms) {
    const auto u = ansatz_term_counts(2, 4, AnsatzFamily::UCCSD);
    EXPECT_EQ(u.singles_directed, 4U);
    EXPECT_EQ(u.doubles_directed, 1U);
    const auto p = ansatz_term_counts(0, 4, AnsatzFamily::kUpCCGSD, 1);
    EXPECT_EQ(p.doubles_directed, 2U);
    EXPECT_EQ(p.singles_directed, 12U);
    const auto p3 = ansatz_term_counts(0, 8, AnsatzFamily::kUpCCGSD, 3);
    EXPECT_EQ(p3.total_directed, 3U * (8 * 7 + 4 * 3));
    const auto g = ansatz_term_counts(0, 4, AnsatzFamily::UCCGSD);
    EXPECT_EQ(g.singles_directed, 12U);
    EXPECT_EQ(*g.doubles_estimate, 144U);
    EXPECT_THROW(static_cast<void>(ansatz_term_counts(0, 5, AnsatzFamily::kUpCCGSD)),
                 ShapeError);
    EXPECT_THROW(static_cast<void>(ansatz_term_counts(2, 4, AnsatzFamily::UCCSD, 2)),
                 DomainError);
}

TEST(Shots, Budget) {
    EXPECT_EQ(shots_required(1.0, 0.01), 10000U);
    EXPECT_EQ(shots_required(0.0, 0.5), 0U);
    EXPECT_EQ(shots_required(0.25, 0.1), 25U);
    const std::vector<double> v = {1.0, 0.5, 0.0};
    EXPECT_EQ(total_shots(v, 0.1), 150U);
    EXPECT_THROW(static_cast<void>(shots_required(1.0, 0.0)), DomainError);
    EXPECT_THROW(static_cast<void>(shots_required(-1.0, 0.1)), DomainError);
}

TEST(Complexity, ClassesAndProduct) {
    const auto p = complexity_report(8, 1e-3, 2, AnsatzFamily::kUpCCGSD,
                                     MeasuredCost{1, 10, 100, 50});
    EXPECT_EQ(p.depth_class, "kN³");
    EXPECT_EQ(p.total_class, "kN⁷/ε²");
    EXPECT_DOUBLE_EQ(*p.measured_product, 55000.0);
    const auto u = complexity_report(8, 1e-3, 1, AnsatzFamily::UCCSD);
    EXPECT_EQ(u.depth_class, "N⁵");
    EXPECT_EQ(u.total_class, "N⁹/ε²");
    EXPECT_FALSE(u.measured_product.has_value());
    EXPECT_NEAR(u.total_estimate, std::pow(8.0, 9) / 1e-6, 1e-3 * std::pow(8.0, 9) / 1e-6);
    EXPECT_FALSE(to_json(u).contains("measured_product"));
    EXPECT_THROW(static_cast<void>(complexity_report(0, 0.1, 1, AnsatzFamily::UCCSD)),
                 DomainError);
}

TEST(Text, Rendering) {
    const auto t = to_text(basis_count("H2O", "STO-3G"));
    EXPECT_NE(t.find("basis functions        7"), std::string::npos);
    EXPECT_NE(t.find("qubits                 14"), std::string::npos);
    EXPECT_EQ(to_json(basis_count("O2", "STO-3G"))["virtual"], 2);
}

TEST(JwWeight, OneBodyWeightGrowsWithDistance) {
    for (std::size_t d = 1; d < 7; ++d) {
        FermionOperator op(8);
        op.add_term(1.0, {{0, true}, {d, false}});
        op.add_term(1.0, {{d, true}, {0, false}});
        const PauliSum mapped = jw_map(op);
        for (const auto &t : mapped.terms()) {
            EXPECT_EQ(t.string.weight(), d + 1);
        }
    }
}
