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
 * @file resources.hpp
 * Resource bookkeeping: basis-function and qubit counts, ansatz term counts,
 * shot budgets and the asymptotic cost summary.
 */
#pragma once

#include "fermivqe/ansatz.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fermivqe {

/// (symbol, count) in order of first appearance, e.g. "H2O" -> H:2, O:1.
using MoleculeFormula = std::vector<std::pair<std::string, std::size_t>>;

/// Elements H..Ar only. Throws ParseError on malformed text and
/// UnsupportedError on unknown symbols.
[[nodiscard]] MoleculeFormula parse_formula(std::string_view text);
/// Atomic number; throws UnsupportedError outside H..Ar.
[[nodiscard]] std::size_t atomic_number(std::string_view symbol);

struct BasisRule {
    std::string name;
    /// Functions per H/He atom.
    std::size_t light;
    /// Functions per Li..Ne atom.
    std::size_t second_row;
    /// Functions per Na..Ar atom; 0 when the rule has no entry.
    std::size_t third_row;
};

[[nodiscard]] const std::vector<BasisRule> &basis_rules();
/// Case-insensitive lookup; UnsupportedError lists the known names.
[[nodiscard]] const BasisRule &find_basis(std::string_view name);

struct ResourceReport {
    std::string molecule;
    std::string basis;
    std::size_t n_functions;
    std::size_t n_qubits;
    std::size_t n_electrons;
    std::size_t occupied;
    std::size_t virtual_orbitals;
};

[[nodiscard]] ResourceReport basis_count(std::string_view molecule,
                                         std::string_view basis);

/**
 * Closed-form excitation counts. `*_directed` count p->q and q->p
 * separately, as the term-count formulas do; `generators` is the number of
 * independent T - T^dagger terms (one parameter each).
 */
struct TermCounts {
    AnsatzFamily family;
    std::size_t k;
    std::uint64_t singles_directed;
    std::uint64_t doubles_directed;
    std::uint64_t total_directed;
    std::uint64_t generators;
    /// UCCGSD only: the N_f^2 (N_f - 1)^2 doubles estimate, an upper bound
    /// on doubles_directed with the same N^4 order.
    std::optional<std::uint64_t> doubles_estimate;
};

/// Throws ShapeError under the same conditions as the enumerators.
[[nodiscard]] TermCounts ansatz_term_counts(std::size_t n_e, std::size_t n_f,
                                            AnsatzFamily family,
                                            std::size_t k = 1);

/// ceil(variance / eps^2); DomainError for eps <= 0 or variance < 0.
[[nodiscard]] std::uint64_t shots_required(double variance, double eps);
/// Sum of shots_required over strings.
[[nodiscard]] std::uint64_t total_shots(std::span<const double> variances,
                                        double eps);

/// I: state-prep depth, P: ansatz depth, Q: measurement count,
/// K: optimizer iterations.
struct MeasuredCost {
    double I;
    double P;
    double Q;
    double K;
};

struct ComplexityReport {
    AnsatzFamily family;
    std::size_t n;
    double eps;
    std::size_t k;
    std::string depth_class;
    std::string shots_class;
    std::string total_class;
    std::string preprocessing_class;
    std::string preprocessing_note;
    /// Leading-order evaluation of the classes at (n, eps, k).
    double depth_estimate;
    double shots_estimate;
    double total_estimate;
    std::optional<double> measured_product;
};

[[nodiscard]] ComplexityReport
complexity_report(std::size_t n, double eps, std::size_t k, AnsatzFamily family,
                  std::optional<MeasuredCost> measured = {});

[[nodiscard]] nlohmann::ordered_json to_json(const ResourceReport &r);
[[nodiscard]] nlohmann::ordered_json to_json(const TermCounts &c);
[[nodiscard]] nlohmann::ordered_json to_json(const ComplexityReport &c);

/// Aligned "label  value" lines.
[[nodiscard]] std::string to_text(const ResourceReport &r);
[[nodiscard]] std::string to_text(const TermCounts &c);
[[nodiscard]] std::string to_text(const ComplexityReport &c);

} // namespace fermivqe
