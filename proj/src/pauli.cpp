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
#include "fermivqe/pauli.hpp"

#include "fermivqe/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace fermivqe {

namespace {

void check_width(std::size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw CapacityError("Pauli string width must be in [1, 64], got " +
                            std::to_string(n));
    }
}

std::uint64_t width_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

} // namespace

char axis_char(Axis a) noexcept {
    switch (a) {
    case Axis::I:
        return 'I';
    case Axis::X:
        return 'X';
    case Axis::Y:
        return 'Y';
    case Axis::Z:
        return 'Z';
    }
    return '?';
}

cplx Phase::value() const noexcept {
    switch (k_) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

PauliString::PauliString(std::size_t n_qubits) : n_(n_qubits) {
    check_width(n_qubits);
}

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
    check_width(n_qubits);
    if (((x_mask | z_mask) & ~width_mask(n_qubits)) != 0) {
        throw IndexError("Pauli mask has bits beyond qubit " +
                         std::to_string(n_qubits - 1));
    }
}

PauliString PauliString::from_axes(std::span<const Axis> axes) {
    PauliString p(axes.size());
    for (std::size_t q = 0; q < axes.size(); ++q) {
        p.set_axis(q, axes[q]);
    }
    return p;
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit,
                                Axis a) {
    PauliString p(n_qubits);
    p.set_axis(qubit, a);
    return p;
}

PauliString PauliString::parse(std::string_view text, std::size_t n_qubits) {
    std::vector<std::pair<std::size_t, Axis>> factors;
    std::size_t pos = 0;
    std::size_t max_index = 0;
    bool any_index = false;
    while (pos < text.size()) {
        const char c = static_cast<char>(
            std::toupper(static_cast<unsigned char>(text[pos])));
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*' ||
            c == ',') {
            ++pos;
            continue;
        }
        Axis a;
        switch (c) {
        case 'I':
            a = Axis::I;
            break;
        case 'X':
            a = Axis::X;
            break;
        case 'Y':
            a = Axis::Y;
            break;
        case 'Z':
            a = Axis::Z;
            break;
        default:
            throw ParseError("unexpected character '" + std::string(1, c) +
                             "' in Pauli string \"" + std::string(text) + "\"");
        }
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (start == pos) {
            if (a == Axis::I) {
                continue; // bare "I" is the identity
            }
            throw ParseError("missing qubit index after '" +
                             std::string(1, axis_char(a)) + "'");
        }
        const std::size_t q = std::stoul(std::string(text.substr(start, pos - start)));
        if (q >= kMaxQubits) {
            throw IndexError("qubit index " + std::to_string(q) +
                             " exceeds 63");
        }
        max_index = any_index ? std::max(max_index, q) : q;
        any_index = true;
        factors.emplace_back(q, a);
    }
    std::size_t n = n_qubits;
    if (n == 0) {
        n = any_index ? max_index + 1 : 1;
    } else if (any_index && max_index >= n) {
        throw IndexError("qubit index " + std::to_string(max_index) +
                         " out of range for " + std::to_string(n) + " qubits");
    }
    PauliString p(n);
    for (const auto &[q, a] : factors) {
        if (p.axis(q) != Axis::I && a != Axis::I) {
            throw ParseError("qubit " + std::to_string(q) +
                             " appears twice in Pauli string");
        }
        if (a != Axis::I) {
            p.set_axis(q, a);
        }
    }
    return p;
}

Axis PauliString::axis(std::size_t qubit) const {
    if (qubit >= n_) {
        throw IndexError("qubit " + std::to_string(qubit) +
                         " out of range for " + std::to_string(n_) + " qubits");
    }
    const unsigned bits = static_cast<unsigned>((x_ >> qubit) & 1U) |
                          (static_cast<unsigned>((z_ >> qubit) & 1U) << 1U);
    return static_cast<Axis>(bits);
}

void PauliString::set_axis(std::size_t qubit, Axis a) {
    if (qubit >= n_) {
        throw IndexError("qubit " + std::to_string(qubit) +
                         " out of range for " + std::to_string(n_) + " qubits");
    }
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const auto code = static_cast<unsigned>(a);
    x_ = (code & 1U) ? (x_ | bit) : (x_ & ~bit);
    z_ = (code & 2U) ? (z_ | bit) : (z_ & ~bit);
}

std::string PauliString::to_string() const {
    if (is_identity()) {
        return "I";
    }
    std::string out;
    for (std::size_t q = 0; q < n_; ++q) {
        const Axis a = axis(q);
        if (a == Axis::I) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += axis_char(a);
        out += std::to_string(q);
    }
    return out;
}

std::string PauliString::to_dense_string() const {
    std::string out(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) {
        out[q] = axis_char(axis(q));
    }
    return out;
}

std::size_t PauliStringHash::operator()(const PauliString &p) const noexcept {
    std::uint64_t h = p.x_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= (p.z_mask() + 0x632BE59BD9B4E019ULL) + (h << 6U) + (h >> 2U);
    h ^= p.n_qubits();
    return static_cast<std::size_t>(h);
}

std::pair<Phase, PauliString> pauli_mul(const PauliString &a,
                                        const PauliString &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("pauli_mul: " + std::to_string(a.n_qubits()) +
                             " vs " + std::to_string(b.n_qubits()) + " qubits");
    }
    const std::uint64_t x = a.x_mask() ^ b.x_mask();
    const std::uint64_t z = a.z_mask() ^ b.z_mask();
    // i^{ya} X^xa Z^za * i^{yb} X^xb Z^zb, moving Z^za past X^xb.
    const int k = a.y_count() + b.y_count() - std::popcount(x & z) +
                  2 * std::popcount(a.z_mask() & b.x_mask());
    return {Phase::from_exponent(k), PauliString(a.n_qubits(), x, z)};
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("commutes: width mismatch");
    }
    const int anti = std::popcount(a.x_mask() & b.z_mask()) +
                     std::popcount(a.z_mask() & b.x_mask());
    return (anti % 2) == 0;
}

PauliSum::PauliSum(std::size_t n_qubits) : n_(n_qubits) {
    check_width(n_qubits);
}

PauliSum::PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : PauliSum(n_qubits) {
    terms_.reserve(terms.size());
    for (auto &t : terms) {
        add_term(t.coefficient, t.string);
    }
}

PauliSum PauliSum::term(cplx coefficient, const PauliString &string) {
    PauliSum s(string.n_qubits());
    s.add_term(coefficient, string);
    return s;
}

PauliSum PauliSum::identity(std::size_t n_qubits, cplx c) {
    PauliSum s(n_qubits);
    s.add_term(c, PauliString(n_qubits));
    return s;
}

void PauliSum::add_term(cplx coefficient, const PauliString &string) {
    if (string.n_qubits() != n_) {
        throw DimensionError("PauliSum on " + std::to_string(n_) +
                             " qubits cannot hold a " +
                             std::to_string(string.n_qubits()) +
                             "-qubit string");
    }
    if (!finite(coefficient)) {
        throw DomainError("non-finite Pauli coefficient");
    }
    terms_.push_back({coefficient, string});
}

PauliSum &PauliSum::operator+=(const PauliSum &o) {
    if (o.n_ != n_) {
        throw DimensionError("PauliSum addition width mismatch");
    }
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

PauliSum &PauliSum::operator-=(const PauliSum &o) {
    if (o.n_ != n_) {
        throw DimensionError("PauliSum subtraction width mismatch");
    }
    terms_.reserve(terms_.size() + o.terms_.size());
    for (const auto &t : o.terms_) {
        terms_.push_back({-t.coefficient, t.string});
    }
    return *this;
}

PauliSum &PauliSum::operator*=(cplx s) {
    if (!finite(s)) {
        throw DomainError("non-finite scalar");
    }
    for (auto &t : terms_) {
        t.coefficient *= s;
    }
    return *this;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out = *this;
    for (auto &t : out.terms_) {
        t.coefficient = std::conj(t.coefficient);
    }
    return out;
}

double PauliSum::max_imag() const noexcept {
    double m = 0.0;
    for (const auto &t : terms_) {
        m = std::max(m, std::abs(t.coefficient.imag()));
    }
    return m;
}

double PauliSum::max_real() const noexcept {
    double m = 0.0;
    for (const auto &t : terms_) {
        m = std::max(m, std::abs(t.coefficient.real()));
    }
    return m;
}

std::string PauliSum::to_string() const {
    std::string out;
    char buf[96];
    for (const auto &t : terms_) {
        std::snprintf(buf, sizeof buf, "(%+.10f,%+.10f) ",
                      t.coefficient.real(), t.coefficient.imag());
        out += buf;
        out += t.string.to_string();
        out += '\n';
    }
    return out;
}

PauliSum operator+(PauliSum a, const PauliSum &b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum &b) { return a -= b; }
PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
PauliSum operator*(cplx s, PauliSum a) { return a *= s; }

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("PauliSum product width mismatch");
    }
    PauliSum out(a.n_qubits());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            auto [phase, prod] = pauli_mul(ta.string, tb.string);
            out.add_term(ta.coefficient * tb.coefficient * phase.value(), prod);
        }
    }
    return simplify(out, 0.0);
}

PauliSum simplify(const PauliSum &s, double tol) {
    if (!(tol >= 0.0)) {
        throw DomainError("simplify tolerance must be >= 0");
    }
    std::unordered_map<PauliString, std::size_t, PauliStringHash> slot;
    std::vector<PauliTerm> merged;
    slot.reserve(s.size());
    merged.reserve(s.size());
    for (const auto &t : s.terms()) {
        auto [it, inserted] = slot.try_emplace(t.string, merged.size());
        if (inserted) {
            merged.push_back(t);
        } else {
            merged[it->second].coefficient += t.coefficient;
        }
    }
    PauliSum out(s.n_qubits());
    for (const auto &t : merged) {
        if (std::abs(t.coefficient) > tol) {
            out.add_term(t.coefficient, t.string);
        }
    }
    return out;
}

} // namespace fermivqe
