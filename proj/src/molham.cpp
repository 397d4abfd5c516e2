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
#include "fermivqe/molham.hpp"

#include "fermivqe/error.hpp"
#include "fermivqe/mapping.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace fermivqe {

MolecularIntegrals::MolecularIntegrals(std::size_t n_orbitals,
                                       std::size_t n_electrons)
    : n_(n_orbitals), n_e_(n_electrons) {
    if (n_orbitals == 0 || n_orbitals > 32) {
        throw CapacityError("orbital count must be in [1, 32], got " +
                            std::to_string(n_orbitals));
    }
    if (n_electrons == 0 || n_electrons > 2 * n_orbitals) {
        throw DomainError("electron count " + std::to_string(n_electrons) +
                          " outside (0, 2*NORB]");
    }
    h1_.assign(n_ * n_, 0.0);
    h2_.assign(n_ * n_ * n_ * n_, 0.0);
}

void MolecularIntegrals::check_index(std::size_t i) const {
    if (i >= n_) {
        throw IndexError("orbital " + std::to_string(i) + " out of range for " +
                         std::to_string(n_) + " orbitals");
    }
}

double MolecularIntegrals::one_body(std::size_t p, std::size_t q) const {
    check_index(p);
    check_index(q);
    return h1_[p * n_ + q];
}

void MolecularIntegrals::set_one_body(std::size_t p, std::size_t q, double v) {
    check_index(p);
    check_index(q);
    h1_[p * n_ + q] = v;
    h1_[q * n_ + p] = v;
}

double MolecularIntegrals::two_body(std::size_t p, std::size_t q,
                                    std::size_t r, std::size_t s) const {
    check_index(p);
    check_index(q);
    check_index(r);
    check_index(s);
    return h2_[idx4(p, q, r, s)];
}

void MolecularIntegrals::set_two_body(std::size_t p, std::size_t q,
                                      std::size_t r, std::size_t s, double v) {
    check_index(p);
    check_index(q);
    check_index(r);
    check_index(s);
    for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
        for (auto [c, d] : {std::pair{r, s}, std::pair{s, r}}) {
            h2_[idx4(a, b, c, d)] = v;
            h2_[idx4(c, d, a, b)] = v;
        }
    }
}

double MolecularIntegrals::symmetry_violation() const {
    double worst = 0.0;
    for (std::size_t p = 0; p < n_; ++p) {
        for (std::size_t q = 0; q < n_; ++q) {
            worst = std::max(worst, std::abs(h1_[p * n_ + q] - h1_[q * n_ + p]));
            for (std::size_t r = 0; r < n_; ++r) {
                for (std::size_t s = 0; s < n_; ++s) {
                    const double v = h2_[idx4(p, q, r, s)];
                    worst = std::max(worst, std::abs(v - h2_[idx4(q, p, r, s)]));
                    worst = std::max(worst, std::abs(v - h2_[idx4(p, q, s, r)]));
                    worst = std::max(worst, std::abs(v - h2_[idx4(r, s, p, q)]));
                }
            }
        }
    }
    return worst;
}

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    for (char &c : out) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return out;
}

struct Header {
    std::map<std::string, std::vector<std::string>> fields;
};

/// Splits "KEY=v1,v2, KEY2 = v" into key -> values.
Header parse_header_text(const std::string &text) {
    Header h;
    std::string cleaned = text;
    for (char &c : cleaned) {
        if (c == ',') {
            c = ' ';
        }
    }
    // Put whitespace around '=' so "NORB=   2" and "NORB =2" tokenize alike.
    std::string spaced;
    for (char c : cleaned) {
        if (c == '=') {
            spaced += " = ";
        } else {
            spaced += c;
        }
    }
    std::istringstream in(spaced);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) {
        tokens.push_back(t);
    }
    std::string current;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i + 1 < tokens.size() && tokens[i + 1] == "=") {
            current = upper(tokens[i]);
            h.fields[current];
            ++i;
            continue;
        }
        if (tokens[i] == "=") {
            throw ParseError("FCIDUMP header: '=' without a key", 1);
        }
        if (current.empty()) {
            throw ParseError("FCIDUMP header: value '" + tokens[i] +
                                 "' before any key",
                             1);
        }
        h.fields[current].push_back(tokens[i]);
    }
    return h;
}

long header_int(const Header &h, const std::string &key,
                std::optional<long> fallback) {
    auto it = h.fields.find(key);
    if (it == h.fields.end() || it->second.empty()) {
        if (fallback) {
            return *fallback;
        }
        throw ParseError("FCIDUMP header missing " + key, 1);
    }
    if (it->second.size() != 1) {
        throw ParseError("FCIDUMP header: " + key + " takes one value", 1);
    }
    char *end = nullptr;
    const long v = std::strtol(it->second[0].c_str(), &end, 10);
    if (end == it->second[0].c_str() || *end != '\0') {
        throw ParseError("FCIDUMP header: " + key + " is not an integer", 1);
    }
    return v;
}

bool parse_double(std::string tok, double &out) {
    for (char &c : tok) {
        if (c == 'd' || c == 'D') {
            c = 'e';
        }
    }
    char *end = nullptr;
    out = std::strtod(tok.c_str(), &end);
    return end != tok.c_str() && *end == '\0' && std::isfinite(out);
}

bool parse_index(const std::string &tok, long &out) {
    char *end = nullptr;
    out = std::strtol(tok.c_str(), &end, 10);
    return end != tok.c_str() && *end == '\0';
}

constexpr double kConflictTolerance = 1e-10;

} // namespace

MolecularIntegrals parse_fcidump(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    std::string header_text;
    bool in_header = false;
    bool header_done = false;
    while (!header_done && std::getline(in, line)) {
        ++line_no;
        std::string u = upper(line);
        if (!in_header) {
            auto pos = u.find("&FCI");
            if (pos == std::string::npos) {
                if (u.find_first_not_of(" \t\r") == std::string::npos) {
                    continue;
                }
                throw ParseError("expected '&FCI' header", line_no);
            }
            in_header = true;
            u = u.substr(pos + 4);
        }
        auto end_pos = u.find("&END");
        std::size_t end_len = 4;
        if (end_pos == std::string::npos) {
            end_pos = u.find('/');
            end_len = 1;
        }
        if (end_pos != std::string::npos) {
            header_text += ' ' + u.substr(0, end_pos);
            header_done = true;
            if (u.find_first_not_of(" \t\r", end_pos + end_len) !=
                std::string::npos) {
                throw ParseError("trailing text after header terminator",
                                 line_no);
            }
        } else {
            header_text += ' ' + u;
        }
    }
    if (!header_done) {
        throw ParseError(in_header ? "FCIDUMP header is not terminated"
                                   : "empty FCIDUMP input",
                         line_no);
    }

    const Header header = parse_header_text(header_text);
    const long norb = header_int(header, "NORB", std::nullopt);
    const long nelec = header_int(header, "NELEC", std::nullopt);
    const long ms2 = header_int(header, "MS2", 0L);
    if (norb <= 0) {
        throw ParseError("NORB must be positive", 1);
    }
    if (nelec <= 0 || nelec > 2 * norb) {
        throw ParseError("NELEC must be in (0, 2*NORB]", 1);
    }
    MolecularIntegrals m(static_cast<std::size_t>(norb),
                         static_cast<std::size_t>(nelec));
    m.set_ms2(static_cast<int>(ms2));

    const std::size_t n = m.n_orbitals();
    std::vector<bool> seen1(n * n, false);
    std::vector<bool> seen2(n * n * n * n, false);
    bool seen_core = false;

    auto canon2 = [n](std::size_t p, std::size_t q, std::size_t r,
                      std::size_t s) {
        if (p < q) {
            std::swap(p, q);
        }
        if (r < s) {
            std::swap(r, s);
        }
        if (p * n + q < r * n + s) {
            std::swap(p, r);
            std::swap(q, s);
        }
        return ((p * n + q) * n + r) * n + s;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        if (tok.size() != 5) {
            throw ParseError("integral line needs 'value i j k l'", line_no);
        }
        double v = 0.0;
        if (!parse_double(tok[0], v)) {
            throw ParseError("bad integral value '" + tok[0] + "'", line_no);
        }
        std::array<long, 4> ix{};
        for (int t = 0; t < 4; ++t) {
            if (!parse_index(tok[t + 1], ix[t])) {
                throw ParseError("bad index '" + tok[t + 1] + "'", line_no);
            }
            if (ix[t] < 0 || ix[t] > norb) {
                throw ParseError("index " + tok[t + 1] + " outside [0, NORB]",
                                 line_no);
            }
        }
        const int zeros = static_cast<int>(std::count(ix.begin(), ix.end(), 0L));
        if (zeros == 4) {
            if (seen_core && std::abs(m.core_energy() - v) > kConflictTolerance) {
                throw ParseError("conflicting core energy", line_no);
            }
            m.set_core_energy(v);
            seen_core = true;
        } else if (zeros == 2 && ix[2] == 0 && ix[3] == 0) {
            const auto p = static_cast<std::size_t>(ix[0] - 1);
            const auto q = static_cast<std::size_t>(ix[1] - 1);
            const std::size_t key = std::max(p, q) * n + std::min(p, q);
            if (seen1[key] && std::abs(m.one_body(p, q) - v) > kConflictTolerance) {
                throw ParseError("conflicting one-body entry", line_no);
            }
            m.set_one_body(p, q, v);
            seen1[key] = true;
        } else if (zeros == 0) {
            const auto p = static_cast<std::size_t>(ix[0] - 1);
            const auto q = static_cast<std::size_t>(ix[1] - 1);
            const auto r = static_cast<std::size_t>(ix[2] - 1);
            const auto s = static_cast<std::size_t>(ix[3] - 1);
            const std::size_t key = canon2(p, q, r, s);
            if (seen2[key] &&
                std::abs(m.two_body(p, q, r, s) - v) > kConflictTolerance) {
                throw ParseError("conflicting two-electron entry", line_no);
            }
            m.set_two_body(p, q, r, s, v);
            seen2[key] = true;
        } else {
            throw ParseError("index 0 not allowed in this position", line_no);
        }
    }
    return m;
}

MolecularIntegrals load_fcidump(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw ParseError("cannot open FCIDUMP file '" + path + "'");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_fcidump(buf.str());
}

SpinOrbitalIntegrals::SpinOrbitalIntegrals(std::size_t n_spin_orbitals)
    : n_(n_spin_orbitals) {
    if (n_spin_orbitals == 0 || n_spin_orbitals > 64) {
        throw CapacityError("spin-orbital count must be in [1, 64]");
    }
    h1_.assign(n_ * n_, 0.0);
    h2_.assign(n_ * n_ * n_ * n_, 0.0);
}

SpinOrbitalIntegrals to_spin_orbitals(const MolecularIntegrals &m,
                                      SpinOrdering /*ordering*/) {
    const std::size_t n = 2 * m.n_orbitals();
    SpinOrbitalIntegrals s(n);
    s.set_core_energy(m.core_energy());
    auto spatial = [](std::size_t p) { return p / 2; };
    auto spin = [](std::size_t p) { return p % 2; };
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (spin(p) == spin(q)) {
                s.one_body(p, q) = m.one_body(spatial(p), spatial(q));
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t r = 0; r < n; ++r) {
                if (spin(p) != spin(r)) {
                    continue;
                }
                for (std::size_t t = 0; t < n; ++t) {
                    if (spin(q) != spin(t)) {
                        continue;
                    }
                    // <pq|rt> = (pr|qt)
                    s.two_body(p, q, r, t) = m.two_body(
                        spatial(p), spatial(r), spatial(q), spatial(t));
                }
            }
        }
    }
    return s;
}

FermionOperator build_hamiltonian(const SpinOrbitalIntegrals &s) {
    const std::size_t n = s.n_spin_orbitals();
    FermionOperator h(n);
    if (s.core_energy() != 0.0) {
        h.add_term(s.core_energy(), {});
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            const double v = s.one_body(p, q);
            if (v != 0.0) {
                h.add_term(v, {cre(p), ann(q)});
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t t = 0; t < n; ++t) {
                    const double v = s.two_body(p, q, r, t);
                    if (v != 0.0) {
                        h.add_term(0.5 * v, {cre(p), cre(q), ann(t), ann(r)});
                    }
                }
            }
        }
    }
    return h;
}

Occupation hf_state(std::size_t n_electrons, std::size_t n_spin_orbitals) {
    if (n_electrons > n_spin_orbitals) {
        throw CapacityError(std::to_string(n_electrons) +
                            " electrons do not fit in " +
                            std::to_string(n_spin_orbitals) + " spin-orbitals");
    }
    const std::uint64_t bits =
        n_electrons >= 64 ? ~std::uint64_t{0}
                          : ((std::uint64_t{1} << n_electrons) - 1);
    return {n_spin_orbitals, bits};
}

double hf_energy(const PauliSum &h_qubit, const Occupation &hf) {
    if (h_qubit.n_qubits() != hf.n_modes()) {
        throw DimensionError("hf_energy: Hamiltonian on " +
                             std::to_string(h_qubit.n_qubits()) +
                             " qubits, occupation on " +
                             std::to_string(hf.n_modes()) + " modes");
    }
    double e = 0.0;
    for (const auto &t : h_qubit.terms()) {
        if (t.string.x_mask() != 0) {
            continue;
        }
        const int parity = std::popcount(hf.bits() & t.string.z_mask()) & 1;
        e += (parity ? -1.0 : 1.0) * t.coefficient.real();
    }
    return e;
}

PauliSum qubit_hamiltonian(const MolecularIntegrals &m) {
    return jw_map(build_hamiltonian(to_spin_orbitals(m)));
}

} // namespace fermivqe
