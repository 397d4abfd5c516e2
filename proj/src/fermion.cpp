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
#include "fermivqe/fermion.hpp"

#include "fermivqe/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

namespace fermivqe {

namespace {

void check_modes(std::size_t n) {
    if (n == 0 || n > 64) {
        throw CapacityError("mode count must be in [1, 64], got " +
                            std::to_string(n));
    }
}

std::uint64_t low_bits(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

} // namespace

Occupation::Occupation(std::size_t n_modes, std::uint64_t bits)
    : n_(n_modes), bits_(bits) {
    check_modes(n_modes);
    if ((bits & ~low_bits(n_modes)) != 0) {
        throw IndexError("occupation has modes beyond " +
                         std::to_string(n_modes - 1));
    }
}

Occupation Occupation::from_modes(std::size_t n_modes,
                                  std::initializer_list<std::size_t> modes) {
    std::uint64_t bits = 0;
    for (std::size_t m : modes) {
        if (m >= n_modes) {
            throw IndexError("mode " + std::to_string(m) + " out of range");
        }
        bits |= std::uint64_t{1} << m;
    }
    return {n_modes, bits};
}

bool Occupation::occupied(std::size_t mode) const {
    if (mode >= n_) {
        throw IndexError("mode " + std::to_string(mode) + " out of range for " +
                         std::to_string(n_) + " modes");
    }
    return ((bits_ >> mode) & 1U) != 0;
}

std::size_t Occupation::n_electrons() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
}

std::string Occupation::to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t j = 0; j < n_; ++j) {
        if ((bits_ >> j) & 1U) {
            if (!first) {
                out += ',';
            }
            out += std::to_string(j);
            first = false;
        }
    }
    return out + "}";
}

FockState FockState::basis(const Occupation &occ, cplx amplitude) {
    FockState s{occ.n_modes(), {}};
    s.amplitudes.emplace(occ.bits(), amplitude);
    return s;
}

FermionOperator::FermionOperator(std::size_t n_modes) : n_(n_modes) {
    check_modes(n_modes);
}

FermionOperator::FermionOperator(std::size_t n_modes,
                                 std::vector<FermionTerm> terms)
    : FermionOperator(n_modes) {
    for (auto &t : terms) {
        add_term(t.coefficient, std::move(t.factors));
    }
}

void FermionOperator::add_term(cplx coefficient, std::vector<Factor> factors) {
    for (const auto &f : factors) {
        if (f.mode >= n_) {
            throw IndexError("factor mode " + std::to_string(f.mode) +
                             " out of range for " + std::to_string(n_) +
                             " modes");
        }
    }
    terms_.push_back({coefficient, std::move(factors)});
}

FermionOperator &FermionOperator::operator+=(const FermionOperator &o) {
    if (o.n_ != n_) {
        throw DimensionError("FermionOperator addition mode mismatch");
    }
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

FermionOperator &FermionOperator::operator-=(const FermionOperator &o) {
    if (o.n_ != n_) {
        throw DimensionError("FermionOperator subtraction mode mismatch");
    }
    for (const auto &t : o.terms_) {
        terms_.push_back({-t.coefficient, t.factors});
    }
    return *this;
}

FermionOperator &FermionOperator::operator*=(cplx s) {
    for (auto &t : terms_) {
        t.coefficient *= s;
    }
    return *this;
}

std::string FermionOperator::to_string() const {
    std::string out;
    char buf[96];
    for (const auto &t : terms_) {
        std::snprintf(buf, sizeof buf, "(%+.10f,%+.10f)", t.coefficient.real(),
                      t.coefficient.imag());
        out += buf;
        for (const auto &f : t.factors) {
            out += " a";
            out += std::to_string(f.mode);
            if (f.dagger) {
                out += '^';
            }
        }
        out += '\n';
    }
    return out;
}

FermionOperator operator+(FermionOperator a, const FermionOperator &b) {
    return a += b;
}
FermionOperator operator-(FermionOperator a, const FermionOperator &b) {
    return a -= b;
}
FermionOperator operator*(cplx s, FermionOperator a) { return a *= s; }

FermionOperator operator*(const FermionOperator &a, const FermionOperator &b) {
    if (a.n_modes() != b.n_modes()) {
        throw DimensionError("FermionOperator product mode mismatch");
    }
    FermionOperator out(a.n_modes());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            std::vector<Factor> f = ta.factors;
            f.insert(f.end(), tb.factors.begin(), tb.factors.end());
            out.add_term(ta.coefficient * tb.coefficient, std::move(f));
        }
    }
    return out;
}

std::optional<SignedOccupation> apply_factor(std::size_t mode, bool dagger,
                                             const Occupation &occ) {
    if (mode >= occ.n_modes()) {
        throw IndexError("mode " + std::to_string(mode) + " out of range for " +
                         std::to_string(occ.n_modes()) + " modes");
    }
    const std::uint64_t bit = std::uint64_t{1} << mode;
    const bool is_set = (occ.bits() & bit) != 0;
    if (is_set == dagger) {
        return std::nullopt;
    }
    const int below = std::popcount(occ.bits() & (bit - 1));
    return SignedOccupation{(below % 2) ? -1 : 1,
                            Occupation(occ.n_modes(), occ.bits() ^ bit)};
}

FockState apply_operator(const FermionOperator &op, const FockState &state) {
    if (op.n_modes() != state.n_modes) {
        throw DimensionError("apply_operator: operator on " +
                             std::to_string(op.n_modes()) +
                             " modes, state on " +
                             std::to_string(state.n_modes));
    }
    FockState out{state.n_modes, {}};
    for (const auto &[bits, amp] : state.amplitudes) {
        for (const auto &term : op.terms()) {
            Occupation occ(state.n_modes, bits);
            int sign = 1;
            bool alive = true;
            for (auto it = term.factors.rbegin(); it != term.factors.rend();
                 ++it) {
                auto r = apply_factor(it->mode, it->dagger, occ);
                if (!r) {
                    alive = false;
                    break;
                }
                sign *= r->sign;
                occ = r->occupation;
            }
            if (alive) {
                out.amplitudes[occ.bits()] +=
                    static_cast<double>(sign) * term.coefficient * amp;
            }
        }
    }
    std::erase_if(out.amplitudes, [](const auto &kv) {
        return std::abs(kv.second) <= kDropTolerance;
    });
    return out;
}

FermionOperator hermitian_conjugate(const FermionOperator &op) {
    FermionOperator out(op.n_modes());
    for (const auto &t : op.terms()) {
        std::vector<Factor> f;
        f.reserve(t.factors.size());
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
            f.push_back({it->mode, !it->dagger});
        }
        out.add_term(std::conj(t.coefficient), std::move(f));
    }
    return out;
}

FermionOperator number_operator(std::size_t n_modes) {
    FermionOperator n(n_modes);
    for (std::size_t j = 0; j < n_modes; ++j) {
        n.add_term(1.0, {cre(j), ann(j)});
    }
    return n;
}

} // namespace fermivqe
