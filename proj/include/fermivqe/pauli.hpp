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
 * @file pauli.hpp
 * Exact algebra of n-qubit Pauli strings and weighted Pauli sums.
 *
 * A string is stored as two bit masks: bit q of `x_mask` is set for X and Y
 * on qubit q, bit q of `z_mask` for Z and Y. Qubit 0 is the least significant
 * bit of a computational basis index throughout the library. With this
 * encoding a string equals i^{|x&z|} X^x Z^z, which makes products and
 * basis-state actions pure bit arithmetic.
 */
#pragma once

#include <bit>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fermivqe {

using cplx = std::complex<double>;

/// Widest register representable by the bit-mask encodings.
inline constexpr std::size_t kMaxQubits = 64;

/// Default drop tolerance for `simplify` and sparse state maps.
inline constexpr double kDropTolerance = 1e-12;

/// Single-qubit Pauli axis; bit 0 is the X component, bit 1 the Z component.
enum class Axis : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

[[nodiscard]] char axis_char(Axis a) noexcept;

/// Exact element of {1, i, -1, -i}, stored as the exponent of i.
class Phase {
  public:
    constexpr Phase() noexcept = default;
    static constexpr Phase from_exponent(int k) noexcept {
        Phase p;
        p.k_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4);
        return p;
    }
    [[nodiscard]] constexpr int exponent() const noexcept { return k_; }
    [[nodiscard]] cplx value() const noexcept;

    constexpr Phase operator*(Phase o) const noexcept {
        return from_exponent(k_ + o.k_);
    }
    constexpr bool operator==(const Phase &) const noexcept = default;

  private:
    std::uint8_t k_{0};
};

inline constexpr Phase kPhaseOne = Phase::from_exponent(0);
inline constexpr Phase kPhaseI = Phase::from_exponent(1);
inline constexpr Phase kPhaseMinusOne = Phase::from_exponent(2);
inline constexpr Phase kPhaseMinusI = Phase::from_exponent(3);

class PauliString {
  public:
    /// Identity on `n_qubits` qubits. Throws CapacityError outside [1, 64].
    explicit PauliString(std::size_t n_qubits);
    PauliString(std::size_t n_qubits, std::uint64_t x_mask,
                std::uint64_t z_mask);

    static PauliString from_axes(std::span<const Axis> axes);
    static PauliString single(std::size_t n_qubits, std::size_t qubit, Axis a);

    /**
     * Parse the textual form used in reports, e.g. "X0 Z2 Y3" or "I".
     * Tokens may also be compact ("Z0X1Y2"). When `n_qubits` is 0 the
     * register width is the largest index plus one.
     */
    static PauliString parse(std::string_view text, std::size_t n_qubits = 0);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_; }
    [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_; }
    [[nodiscard]] std::uint64_t support() const noexcept { return x_ | z_; }
    /// Number of Y factors; the string is i^{y_count} X^x Z^z.
    [[nodiscard]] int y_count() const noexcept {
        return std::popcount(x_ & z_);
    }

    [[nodiscard]] Axis axis(std::size_t qubit) const;
    void set_axis(std::size_t qubit, Axis a);

    [[nodiscard]] std::size_t weight() const noexcept {
        return static_cast<std::size_t>(std::popcount(support()));
    }
    [[nodiscard]] bool is_identity() const noexcept { return support() == 0; }

    /// "X0 Z2 Y3"; identity renders as "I".
    [[nodiscard]] std::string to_string() const;
    /// Dense form, qubit 0 first, e.g. "XIZY".
    [[nodiscard]] std::string to_dense_string() const;

    /**
     * Action on a computational basis state: P|index> = phase |target>.
     */
    [[nodiscard]] std::pair<Phase, std::uint64_t>
    apply_to_basis(std::uint64_t index) const noexcept {
        const int k = y_count() + 2 * std::popcount(index & z_);
        return {Phase::from_exponent(k), index ^ x_};
    }

    bool operator==(const PauliString &) const noexcept = default;
    auto operator<=>(const PauliString &) const noexcept = default;

  private:
    std::size_t n_{1};
    std::uint64_t x_{0};
    std::uint64_t z_{0};
};

struct PauliStringHash {
    std::size_t operator()(const PauliString &p) const noexcept;
};

/// Operator product a*b = phase * product, qubit-wise.
[[nodiscard]] std::pair<Phase, PauliString> pauli_mul(const PauliString &a,
                                                      const PauliString &b);

[[nodiscard]] inline std::size_t pauli_weight(const PauliString &p) noexcept {
    return p.weight();
}

/// True when a and b commute (even count of anticommuting positions).
[[nodiscard]] bool commutes(const PauliString &a, const PauliString &b);

struct PauliTerm {
    cplx coefficient;
    PauliString string;
};

class PauliSum {
  public:
    explicit PauliSum(std::size_t n_qubits);
    PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms);

    /// Sum holding `coefficient * string`.
    static PauliSum term(cplx coefficient, const PauliString &string);
    /// `c * I` on n qubits.
    static PauliSum identity(std::size_t n_qubits, cplx c = 1.0);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

    /// Appends without merging. Throws on width mismatch or non-finite c.
    void add_term(cplx coefficient, const PauliString &string);

    PauliSum &operator+=(const PauliSum &o);
    PauliSum &operator-=(const PauliSum &o);
    PauliSum &operator*=(cplx s);

    /// Coefficients conjugated; Pauli strings are Hermitian.
    [[nodiscard]] PauliSum adjoint() const;

    /// Largest |Im c| over terms.
    [[nodiscard]] double max_imag() const noexcept;
    /// Largest |Re c| over terms.
    [[nodiscard]] double max_real() const noexcept;

    /// One term per line: "(+0.5000000000,-0.2500000000) X0 Z1".
    [[nodiscard]] std::string to_string() const;

  private:
    std::size_t n_;
    std::vector<PauliTerm> terms_;
};

[[nodiscard]] PauliSum operator+(PauliSum a, const PauliSum &b);
[[nodiscard]] PauliSum operator-(PauliSum a, const PauliSum &b);
[[nodiscard]] PauliSum operator*(PauliSum a, cplx s);
[[nodiscard]] PauliSum operator*(cplx s, PauliSum a);
/// Operator product with exact phases; like terms merged, exact zeros dropped.
[[nodiscard]] PauliSum operator*(const PauliSum &a, const PauliSum &b);

/**
 * Merge like strings and drop terms with |c| <= tol. Terms keep the order in
 * which their string first appears, so downstream orderings (e.g. Trotter
 * term order) stay deterministic.
 */
[[nodiscard]] PauliSum simplify(const PauliSum &s, double tol = kDropTolerance);

} // namespace fermivqe
