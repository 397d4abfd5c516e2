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
 * @file fermion.hpp
 * Second-quantized operators acting on occupation-number kets.
 *
 * Kets are always ordered by increasing mode index. Creating or destroying an
 * electron in mode j picks up (-1)^{s_j}, where s_j counts the occupied
 * modes with index below j. Products of factors act right to left.
 */
#pragma once

#include "fermivqe/pauli.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fermivqe {

/// Occupied modes as a bit mask; at most 64 modes.
class Occupation {
  public:
    Occupation(std::size_t n_modes, std::uint64_t bits);
    static Occupation from_modes(std::size_t n_modes,
                                 std::initializer_list<std::size_t> modes);
    static Occupation empty(std::size_t n_modes) { return {n_modes, 0}; }

    [[nodiscard]] std::size_t n_modes() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t bits() const noexcept { return bits_; }
    [[nodiscard]] bool occupied(std::size_t mode) const;
    [[nodiscard]] std::size_t n_electrons() const noexcept;
    /// "{0,2}" style listing.
    [[nodiscard]] std::string to_string() const;

    bool operator==(const Occupation &) const noexcept = default;
    auto operator<=>(const Occupation &) const noexcept = default;

  private:
    std::size_t n_;
    std::uint64_t bits_;
};

/// Sparse state: occupation mask -> amplitude, all on the same mode count.
struct FockState {
    std::size_t n_modes;
    std::map<std::uint64_t, cplx> amplitudes;

    static FockState basis(const Occupation &occ, cplx amplitude = 1.0);
};

struct Factor {
    std::size_t mode;
    bool dagger;
    bool operator==(const Factor &) const noexcept = default;
};

/// a^dagger_j
[[nodiscard]] constexpr Factor cre(std::size_t mode) noexcept {
    return {mode, true};
}
/// a_j
[[nodiscard]] constexpr Factor ann(std::size_t mode) noexcept {
    return {mode, false};
}

/// coefficient * f_0 f_1 ... f_{m-1}; f_{m-1} acts first.
struct FermionTerm {
    cplx coefficient;
    std::vector<Factor> factors;
};

class FermionOperator {
  public:
    explicit FermionOperator(std::size_t n_modes);
    FermionOperator(std::size_t n_modes, std::vector<FermionTerm> terms);

    [[nodiscard]] std::size_t n_modes() const noexcept { return n_; }
    [[nodiscard]] const std::vector<FermionTerm> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    /// Throws IndexError for modes >= n_modes.
    void add_term(cplx coefficient, std::vector<Factor> factors);

    FermionOperator &operator+=(const FermionOperator &o);
    FermionOperator &operator-=(const FermionOperator &o);
    FermionOperator &operator*=(cplx s);

    [[nodiscard]] std::string to_string() const;

  private:
    std::size_t n_;
    std::vector<FermionTerm> terms_;
};

[[nodiscard]] FermionOperator operator+(FermionOperator a,
                                        const FermionOperator &b);
[[nodiscard]] FermionOperator operator-(FermionOperator a,
                                        const FermionOperator &b);
[[nodiscard]] FermionOperator operator*(cplx s, FermionOperator a);
/// Concatenated product a*b (b acts first).
[[nodiscard]] FermionOperator operator*(const FermionOperator &a,
                                        const FermionOperator &b);

struct SignedOccupation {
    int sign;
    Occupation occupation;
};

/**
 * Apply one creation/annihilation factor. Returns nullopt for the zero
 * vector (creation on an occupied mode or annihilation on an empty one).
 */
[[nodiscard]] std::optional<SignedOccupation>
apply_factor(std::size_t mode, bool dagger, const Occupation &occ);

/// Linear action; amplitudes with |a| <= 1e-12 are dropped.
[[nodiscard]] FockState apply_operator(const FermionOperator &op,
                                       const FockState &state);

[[nodiscard]] FermionOperator hermitian_conjugate(const FermionOperator &op);

/// Sum_j a_j^dagger a_j.
[[nodiscard]] FermionOperator number_operator(std::size_t n_modes);

} // namespace fermivqe
