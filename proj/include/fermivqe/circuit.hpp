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
 * @file circuit.hpp
 * Gate-level circuits over the fixed set {X, Y, Z, H, CNOT, CZ, RX, RY, RZ},
 * ASAP depth, Pauli-exponential synthesis and first-order Trotterization.
 *
 * Rotations follow R_A(t) = exp(-i t A / 2). A rotation gate may carry a
 * parameter reference; bind_parameters() then sets its angle to
 * weight * params[index].
 */
#pragma once

#include "fermivqe/pauli.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fermivqe {

enum class GateKind { X, Y, Z, H, CNOT, CZ, RX, RY, RZ };

[[nodiscard]] std::string_view gate_name(GateKind k) noexcept;
[[nodiscard]] bool is_two_qubit(GateKind k) noexcept;
[[nodiscard]] bool is_rotation(GateKind k) noexcept;

struct ParamRef {
    std::size_t index;
    double weight;
    bool operator==(const ParamRef &) const noexcept = default;
};

struct Gate {
    GateKind kind;
    /// Second entry used only by CNOT (control, target) and CZ.
    std::array<std::size_t, 2> qubits{0, 0};
    double angle{0.0};
    std::optional<ParamRef> param;

    [[nodiscard]] static Gate one(GateKind k, std::size_t q);
    [[nodiscard]] static Gate two(GateKind k, std::size_t a, std::size_t b);
    [[nodiscard]] static Gate rotation(GateKind k, std::size_t q, double angle,
                                       std::optional<ParamRef> p = {});
    [[nodiscard]] std::size_t arity() const noexcept {
        return is_two_qubit(kind) ? 2 : 1;
    }
    bool operator==(const Gate &) const noexcept = default;
};

class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] std::vector<Gate> &gates() noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] double global_phase() const noexcept { return phase_; }
    void set_global_phase(double p) noexcept { phase_ = p; }

    /// Throws IndexError for qubits >= n_qubits, DomainError for a
    /// two-qubit gate on a single qubit.
    void add(const Gate &g);
    /// Appends gates and accumulates the global phase.
    void append(const Circuit &c);

    bool operator==(const Circuit &) const noexcept = default;

  private:
    std::size_t n_;
    std::vector<Gate> gates_;
    double phase_{0.0};
};

/// Layers under as-soon-as-possible scheduling.
[[nodiscard]] std::size_t circuit_depth(const Circuit &c);

/**
 * exp(-i theta/2 P) up to the recorded global phase: H on X axes,
 * RX(pi/2) on Y axes, an ascending CNOT ladder over the support, RZ(theta)
 * on the highest support qubit, then the mirror image. The identity string
 * gives an empty circuit with global phase -theta/2.
 */
[[nodiscard]] Circuit pauli_exp_circuit(const PauliString &p, double theta,
                                        std::optional<ParamRef> param = {});

/// exp(-i angle/2 string).
struct RotationTerm {
    PauliString string;
    double angle;
    std::optional<ParamRef> param;
};

/**
 * (prod_j exp(-i angle_j/(2l) P_j))^l with terms in the given order.
 * Angles and parameter weights are divided by l.
 */
[[nodiscard]] Circuit trotterize(std::size_t n_qubits,
                                 std::span<const RotationTerm> terms,
                                 std::size_t steps);

/**
 * Hermitian H = sum_j c_j P_j (real c_j) -> Trotterized exp(-i H), i.e.
 * angle_j = 2 c_j, in first-appearance term order.
 */
[[nodiscard]] Circuit trotterize(const PauliSum &h, std::size_t steps);

/**
 * Anti-Hermitian A = sum_k i a_k P_k -> rotations with exp(A) =
 * exp(-i sum_k (-2 a_k)/2 P_k). Throws InvalidObservableError when a
 * coefficient has a real part above 1e-10.
 */
[[nodiscard]] std::vector<RotationTerm>
rotations_from_generator(const PauliSum &a);

/// Sets every parameterized angle to weight * params[index].
void bind_parameters(Circuit &c, std::span<const double> params);

/// One gate per line: "H q1", "CNOT q0 q2", "RZ(1.5708) q3"; a leading
/// "GPHASE(x)" line when the global phase is nonzero.
[[nodiscard]] std::string to_text(const Circuit &c);

/**
 * Inverse of to_text. Blank lines and '#' comments are ignored. When
 * n_qubits is 0 the width is the largest index plus one.
 */
[[nodiscard]] Circuit parse_circuit(std::string_view text,
                                    std::size_t n_qubits = 0);

} // namespace fermivqe
