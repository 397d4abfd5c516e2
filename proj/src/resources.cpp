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
#include "fermivqe/resources.hpp"

#include "fermivqe/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace fermivqe {

namespace {

constexpr std::array<std::string_view, 18> kSymbols = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",
    "Ne", "Na", "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar"};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](char c) {
        return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    });
    return out;
}

std::string line(std::string_view label, const std::string &value) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-22s %s\n", std::string(label).c_str(),
                  value.c_str());
    return buf;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::size_t atomic_number(std::string_view symbol) {
    for (std::size_t i = 0; i < kSymbols.size(); ++i) {
        if (kSymbols[i] == symbol) {
            return i + 1;
        }
    }
    throw UnsupportedError("unknown element '" + std::string(symbol) +
                           "' (supported: H through Ar)");
}

MoleculeFormula parse_formula(std::string_view text) {
    MoleculeFormula out;
    std::size_t i = 0;
    if (text.empty()) {
        throw ParseError("empty molecular formula");
    }
    while (i < text.size()) {
        if (!std::isupper(static_cast<unsigned char>(text[i]))) {
            throw ParseError("unexpected '" + std::string(1, text[i]) +
                             "' in formula '" + std::string(text) + "'");
        }
        std::size_t j = i + 1;
        while (j < text.size() && std::islower(static_cast<unsigned char>(text[j]))) {
            ++j;
        }
        const std::string sym(text.substr(i, j - i));
        static_cast<void>(atomic_number(sym)); // validates the symbol
        std::size_t count = 0;
        std::size_t k = j;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
            count = count * 10 + static_cast<std::size_t>(text[k] - '0');
            ++k;
        }
        if (k == j) {
            count = 1;
        }
        if (count == 0) {
            throw ParseError("zero atom count in '" + std::string(text) + "'");
        }
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const auto &p) { return p.first == sym; });
        if (it == out.end()) {
            out.emplace_back(sym, count);
        } else {
            it->second += count;
        }
        i = k;
    }
    return out;
}

const std::vector<BasisRule> &basis_rules() {
    static const std::vector<BasisRule> rules = {
        {"STO-3G", 1, 5, 9},       {"3-21G", 2, 9, 13},
        {"6-31G", 2, 9, 0},        {"6-31G(d)", 2, 14, 0},
        {"6-31G(d,p)", 5, 14, 0},  {"6-31+G", 2, 13, 0},
        {"6-31++G", 3, 13, 0},     {"6-311G", 3, 13, 0},
        {"def2-SVP", 5, 14, 0},    {"def2-TZVP", 6, 31, 0},
        {"def2-TZVPP", 14, 31, 0}, {"cc-pVDZ", 5, 14, 0},
        {"cc-pVTZ", 14, 30, 0},    {"aug-cc-pVDZ", 9, 23, 0},
        {"aug-cc-pVTZ", 23, 46, 0},
    };
    return rules;
}

const BasisRule &find_basis(std::string_view name) {
    const std::string want = lower(name);
    for (const auto &r : basis_rules()) {
        if (lower(r.name) == want) {
            return r;
        }
    }
    std::string known;
    for (const auto &r : basis_rules()) {
        known += (known.empty() ? "" : ", ") + r.name;
    }
    throw UnsupportedError("unknown basis '" + std::string(name) +
                           "' (known: " + known + ")");
}

ResourceReport basis_count(std::string_view molecule, std::string_view basis) {
    const BasisRule &rule = find_basis(basis);
    const MoleculeFormula f = parse_formula(molecule);
    ResourceReport r{std::string(molecule), rule.name, 0, 0, 0, 0, 0};
    for (const auto &[sym, count] : f) {
        const std::size_t z = atomic_number(sym);
        std::size_t per_atom = z <= 2 ? rule.light
                               : z <= 10 ? rule.second_row
                                         : rule.third_row;
        if (per_atom == 0) {
            throw UnsupportedError("basis " + rule.name +
                                   " has no entry for element " + sym);
        }
        r.n_functions += count * per_atom;
        r.n_electrons += count * z;
    }
    r.n_qubits = 2 * r.n_functions;
    r.occupied = (r.n_electrons + 1) / 2;
    if (r.occupied > r.n_functions) {
        throw DomainError("more occupied orbitals than basis functions");
    }
    r.virtual_orbitals = r.n_functions - r.occupied;
    return r;
}

TermCounts ansatz_term_counts(std::size_t n_e, std::size_t n_f,
                              AnsatzFamily family, std::size_t k) {
    using u64 = std::uint64_t;
    const u64 f = n_f;
    const u64 e = n_e;
    TermCounts c{family, k, 0, 0, 0, 0, std::nullopt};
    switch (family) {
    case AnsatzFamily::UCCSD: {
        if (k != 1) {
            throw DomainError("k must be 1 for UCCSD");
        }
        if (n_e == 0 || n_e >= n_f) {
            break;
        }
        const u64 v = f - e;
        // T and T^dagger share a parameter, so the UCC count is per generator.
        c.singles_directed = e * v;
        c.doubles_directed = e * (e - 1) * v * (v - 1) / 4;
        c.total_directed = c.singles_directed + c.doubles_directed;
        c.generators = c.total_directed;
        break;
    }
    case AnsatzFamily::UCCGSD: {
        if (k != 1) {
            throw DomainError("k must be 1 for UCCGSD");
        }
        if (n_f < 2) {
            throw ShapeError("UCCGSD needs at least 2 spin-orbitals");
        }
        const u64 pairs = f * (f - 1) / 2;
        c.singles_directed = f * (f - 1);
        c.doubles_directed = pairs * (pairs - 1);
        c.total_directed = c.singles_directed + c.doubles_directed;
        c.generators = c.total_directed / 2;
        c.doubles_estimate = f * f * (f - 1) * (f - 1);
        break;
    }
    case AnsatzFamily::kUpCCGSD: {
        if (n_f < 4 || n_f % 2 != 0) {
            throw ShapeError("k-UpCCGSD needs an even spin-orbital count >= 4");
        }
        if (k < 1) {
            throw DomainError("k must be >= 1");
        }
        const u64 h = f / 2;
        c.singles_directed = k * f * (f - 1);
        c.doubles_directed = k * h * (h - 1);
        c.total_directed = c.singles_directed + c.doubles_directed;
        c.generators = c.total_directed / 2;
        break;
    }
    }
    return c;
}

std::uint64_t shots_required(double variance, double eps) {
    if (!(eps > 0.0)) {
        throw DomainError("precision eps must be > 0");
    }
    if (!(variance >= 0.0)) {
        throw DomainError("variance must be >= 0");
    }
    return static_cast<std::uint64_t>(std::ceil(variance / (eps * eps)));
}

std::uint64_t total_shots(std::span<const double> variances, double eps) {
    std::uint64_t total = 0;
    for (double v : variances) {
        total += shots_required(v, eps);
    }
    return total;
}

ComplexityReport complexity_report(std::size_t n, double eps, std::size_t k,
                                   AnsatzFamily family,
                                   std::optional<MeasuredCost> measured) {
    if (n == 0) {
        throw DomainError("N must be >= 1");
    }
    if (!(eps > 0.0)) {
        throw DomainError("precision eps must be > 0");
    }
    const double N = static_cast<double>(n);
    const double K = static_cast<double>(k);
    const bool paired = family == AnsatzFamily::kUpCCGSD;
    ComplexityReport r{family, n, eps, k, {}, {}, {}, {}, {}, 0, 0, 0, {}};
    r.depth_class = paired ? "kN³" : "N⁵";
    r.shots_class = "N⁴/ε²";
    r.total_class = paired ? "kN⁷/ε²" : "N⁹/ε²";
    r.preprocessing_class = "N³";
    r.preprocessing_note =
        "Hartree-Fock preprocessing scales as N³ in practice but is "
        "NP-complete in the worst case";
    r.depth_estimate = paired ? K * std::pow(N, 3) : std::pow(N, 5);
    r.shots_estimate = std::pow(N, 4) / (eps * eps);
    r.total_estimate = r.depth_estimate * r.shots_estimate;
    if (measured) {
        r.measured_product = (measured->I + measured->P) * measured->Q * measured->K;
    }
    return r;
}

nlohmann::ordered_json to_json(const ResourceReport &r) {
    return {{"molecule", r.molecule},       {"basis", r.basis},
            {"n_functions", r.n_functions}, {"n_qubits", r.n_qubits},
            {"n_electrons", r.n_electrons}, {"occupied", r.occupied},
            {"virtual", r.virtual_orbitals}};
}

nlohmann::ordered_json to_json(const TermCounts &c) {
    nlohmann::ordered_json j = {{"family", family_name(c.family)},
                                {"k", c.k},
                                {"singles_directed", c.singles_directed},
                                {"doubles_directed", c.doubles_directed},
                                {"total_directed", c.total_directed},
                                {"generators", c.generators}};
    if (c.doubles_estimate) {
        j["doubles_estimate"] = *c.doubles_estimate;
    }
    return j;
}

nlohmann::ordered_json to_json(const ComplexityReport &c) {
    nlohmann::ordered_json j = {
        {"family", family_name(c.family)},
        {"N", c.n},
        {"eps", c.eps},
        {"k", c.k},
        {"depth_class", c.depth_class},
        {"shots_class", c.shots_class},
        {"total_class", c.total_class},
        {"preprocessing_class", c.preprocessing_class},
        {"preprocessing_note", c.preprocessing_note},
        {"depth_estimate", c.depth_estimate},
        {"shots_estimate", c.shots_estimate},
        {"total_estimate", c.total_estimate},
    };
    if (c.measured_product) {
        j["measured_product"] = *c.measured_product;
    }
    return j;
}

std::string to_text(const ResourceReport &r) {
    return line("molecule", r.molecule) + line("basis", r.basis) +
           line("electrons", std::to_string(r.n_electrons)) +
           line("occupied orbitals", std::to_string(r.occupied)) +
           line("virtual orbitals", std::to_string(r.virtual_orbitals)) +
           line("basis functions", std::to_string(r.n_functions)) +
           line("qubits", std::to_string(r.n_qubits));
}

std::string to_text(const TermCounts &c) {
    std::string out = line("ansatz", std::string(family_name(c.family))) +
                      line("k", std::to_string(c.k)) +
                      line("singles (directed)", std::to_string(c.singles_directed)) +
                      line("doubles (directed)", std::to_string(c.doubles_directed)) +
                      line("total (directed)", std::to_string(c.total_directed)) +
                      line("generators", std::to_string(c.generators));
    if (c.doubles_estimate) {
        out += line("doubles estimate", std::to_string(*c.doubles_estimate));
    }
    return out;
}

std::string to_text(const ComplexityReport &c) {
    std::string out =
        line("ansatz", std::string(family_name(c.family))) +
        line("N", std::to_string(c.n)) + line("eps", num(c.eps)) +
        line("depth P", "O(" + c.depth_class + ") ~ " + num(c.depth_estimate)) +
        line("shots Q", "O(" + c.shots_class + ") ~ " + num(c.shots_estimate)) +
        line("total", "O(" + c.total_class + ") ~ " + num(c.total_estimate)) +
        line("preprocessing X", "O(" + c.preprocessing_class + ")") +
        line("", c.preprocessing_note);
    if (c.measured_product) {
        out += line("(I+P)*Q*K measured", num(*c.measured_product));
    }
    return out;
}

} // namespace fermivqe
