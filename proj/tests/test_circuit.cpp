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
#include "fermivqe/circuit.hpp"
#include "fermivqe/error.hpp"
#include "fermivqe/statevector.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace fermivqe;
namespace ft = fermivqe::testing;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

PauliString random_nonidentity(std::size_t n, std::mt19937_64 &rng) {
    PauliString p(n);
    while (p.is_identity()) {
        for (std::size_t q = 0; q < n; ++q) {
            p.set_axis(q, static_cast<Axis>(rng() % 4));
        }
    }
    return p;
}

// exp(-i t/2 P) = cos(t/2) I - i sin(t/2) P, valid since P^2 = I.
DenseMatrix pauli_rotation_oracle(const PauliString &p, double t) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << p.n_qubits());
    return std::cos(t / 2) * DenseMatrix::Identity(dim, dim) -
           cplx{0.0, std::sin(t / 2)} * to_matrix(p);
}

} // namespace

TEST(Circuit, Fig8Layout) {
    const auto c = pauli_exp_circuit(PauliString::parse("Z0 X1 Y2", 3), 0.7);
    const std::vector<Gate> expect = {
        Gate::one(GateKind::H, 1),
        Gate::rotation(GateKind::RX, 2, kHalfPi),
        Gate::two(GateKind::CNOT, 0, 1),
        Gate::two(GateKind::CNOT, 1, 2),
        Gate::rotation(GateKind::RZ, 2, 0.7),
        Gate::two(GateKind::CNOT, 1, 2),
        Gate::two(GateKind::CNOT, 0, 1),
        Gate::rotation(GateKind::RX, 2, -kHalfPi),
        Gate::one(GateKind::H, 1),
    };
    EXPECT_EQ(c.gates(), expect);
    EXPECT_EQ(c.global_phase(), 0.0);
}

TEST(Circuit, SingleZIsOneRotation) {
    const auto c = pauli_exp_circuit(PauliString::parse("Z2", 4), 1.1);
    ASSERT_EQ(c.size(), 1U);
    EXPECT_EQ(c.gates()[0], Gate::rotation(GateKind::RZ, 2, 1.1));
    EXPECT_EQ(circuit_depth(c), 1U);
}

TEST(Circuit, IdentityStringIsGlobalPhase) {
    const auto c = pauli_exp_circuit(PauliString(2), 0.8);
    EXPECT_EQ(c.size(), 0U);
    EXPECT_DOUBLE_EQ(c.global_phase(), -0.4);
    EXPECT_LE(ft::max_abs(circuit_unitary(c) -
                          pauli_rotation_oracle(PauliString(2), 0.8)),
              1e-15);
}

TEST(Circuit, RandomExponentialsMatchClosedForm) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const auto p = random_nonidentity(n, rng);
        const double t = u(rng);
        const auto c = pauli_exp_circuit(p, t);
        EXPECT_LE(ft::max_abs(circuit_unitary(c) - pauli_rotation_oracle(p, t)),
                  1e-10)
            << p.to_string();
        // Also against the spectral matrix exponential.
        EXPECT_LE(ft::max_abs(circuit_unitary(c) -
                              ft::expm_hermitian(to_matrix(p), t / 2)),
                  1e-10);
    }
}

TEST(Circuit, ExponentialDepthLaw) {
    // 2w - 1 layers for ladder + rotation + mirror; basis changes on the first
    // two support qubits add one layer at each end.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_nonidentity(1 + rng() % 6, rng);
        std::vector<std::size_t> q;
        for (std::size_t j = 0; j < p.n_qubits(); ++j) {
            if (p.axis(j) != Axis::I) {
                q.push_back(j);
            }
        }
        const std::size_t w = q.size();
        bool front = p.axis(q[0]) != Axis::Z;
        if (w >= 2) {
            front = front || p.axis(q[1]) != Axis::Z;
        }
        const std::size_t depth = circuit_depth(pauli_exp_circuit(p, 0.3));
        EXPECT_EQ(depth, 2 * w - 1 + (front ? 2 : 0)) << p.to_string();
        EXPECT_LE(depth, 2 * w + 1);
    }
}

TEST(Circuit, Fig6Depth) {
    Circuit c(4);
    c.add(Gate::one(GateKind::X, 0));
    c.add(Gate::one(GateKind::H, 1));
    c.add(Gate::two(GateKind::CNOT, 2, 3));
    c.add(Gate::two(GateKind::CNOT, 0, 1));
    c.add(Gate::one(GateKind::H, 1));
    c.add(Gate::two(GateKind::CZ, 0, 3));
    EXPECT_EQ(circuit_depth(c), 3U);
    EXPECT_EQ(circuit_depth(Circuit(3)), 0U);
}

TEST(Circuit, ParallelAndSequentialBlocks) {
    const auto a = pauli_exp_circuit(PauliString::parse("X0 Y1", 4), 0.2);
    const auto b = pauli_exp_circuit(PauliString::parse("X2 Y3", 4), 0.2);
    const auto c = pauli_exp_circuit(PauliString::parse("Y1 X2", 4), 0.2);
    Circuit disjoint = a;
    disjoint.append(b);
    EXPECT_EQ(circuit_depth(disjoint), circuit_depth(a));
    Circuit overlapping = a;
    overlapping.append(c);
    EXPECT_EQ(circuit_depth(overlapping), circuit_depth(a) + circuit_depth(c));
}

TEST(Circuit, GateValidation) {
    Circuit c(2);
    EXPECT_THROW(c.add(Gate::one(GateKind::X, 2)), IndexError);
    EXPECT_THROW(static_cast<void>(Gate::two(GateKind::CNOT, 1, 1)), DomainError);
    EXPECT_THROW(static_cast<void>(Gate::one(GateKind::RZ, 0)), DomainError);
}

TEST(Trotter, SingleTermIndependentOfSteps) {
    PauliSum h(3);
    h.add_term(0.9, PauliString::parse("X0 Z1 Y2", 3));
    const DenseMatrix u1 = circuit_unitary(trotterize(h, 1));
    for (std::size_t l : {2, 3, 7}) {
        EXPECT_LE(ft::max_abs(circuit_unitary(trotterize(h, l)) - u1), 1e-12);
    }
    EXPECT_LE(ft::max_abs(u1 - ft::expm_hermitian(to_matrix(h), 1.0)), 1e-12);
}

TEST(Trotter, CommutingTermsExact) {
    PauliSum h(3);
    h.add_term(0.4, PauliString::parse("X0 X1", 3));
    h.add_term(-0.7, PauliString::parse("Z0 Z1 Y2", 3)); // anticommutes twice
    ASSERT_TRUE(commutes(h.terms()[0].string, h.terms()[1].string));
    const DenseMatrix exact = ft::expm_hermitian(to_matrix(h), 1.0);
    EXPECT_LE(ft::max_abs(circuit_unitary(trotterize(h, 1)) - exact), 1e-10);
    EXPECT_LE(ft::max_abs(circuit_unitary(trotterize(h, 4)) - exact), 1e-10);
}

TEST(Trotter, NonCommutingErrorShrinksLikeOneOverL) {
    PauliSum h(1);
    h.add_term(0.8, PauliString::parse("X0", 1));
    h.add_term(0.6, PauliString::parse("Z0", 1));
    const DenseMatrix exact = ft::expm_hermitian(to_matrix(h), 1.0);
    double prev = 1e9;
    for (std::size_t l : {1, 2, 4, 8, 16}) {
        const double err =
            (circuit_unitary(trotterize(h, l)) - exact).operatorNorm();
        EXPECT_LT(err, prev);
        if (l > 1) {
            EXPECT_NEAR(prev / err, 2.0, 0.3) << "l=" << l;
        }
        prev = err;
    }
}

TEST(Trotter, ParameterWeightsDividedBySteps) {
    std::vector<RotationTerm> terms = {
        {PauliString::parse("Z0", 1), 0.0, ParamRef{0, 2.0}}};
    Circuit c = trotterize(1, terms, 4);
    ASSERT_EQ(c.size(), 4U);
    EXPECT_DOUBLE_EQ(c.gates()[0].param->weight, 0.5);
    const std::vector<double> theta = {0.3};
    bind_parameters(c, theta);
    EXPECT_DOUBLE_EQ(c.gates()[3].angle, 0.15);
    const std::vector<double> none;
    EXPECT_THROW(bind_parameters(c, none), ShapeError);
}

TEST(Trotter, GeneratorRotationsReproduceExponential) {
    // A = i(0.3 X0Y1 - 0.2 Z0Z1), commuting terms: one step is exact.
    PauliSum a(2);
    a.add_term({0.0, 0.3}, PauliString::parse("X0 Y1", 2));
    a.add_term({0.0, -0.2}, PauliString::parse("Z0 Z1", 2));
    const auto rot = rotations_from_generator(a);
    const DenseMatrix u = circuit_unitary(trotterize(2, rot, 1));
    // exp(A) = exp(-i H) with H = iA.
    const DenseMatrix h = cplx{0.0, 1.0} * to_matrix(a);
    EXPECT_LE(ft::max_abs(u - ft::expm_hermitian(h, 1.0)), 1e-10);
    PauliSum bad(1);
    bad.add_term(0.5, PauliString::parse("X0", 1));
    EXPECT_THROW(static_cast<void>(rotations_from_generator(bad)),
                 InvalidObservableError);
}

TEST(CircuitText, RoundTrip) {
    Circuit c = pauli_exp_circuit(PauliString::parse("Y0 X2", 3), 1.5708);
    c.set_global_phase(0.25);
    const std::string text = to_text(c);
    EXPECT_NE(text.find("RZ(1.5708) q2\n"), std::string::npos);
    EXPECT_NE(text.find("CNOT q0 q2\n"), std::string::npos);
    EXPECT_EQ(text.rfind("GPHASE(0.25)\n", 0), 0U);
    const Circuit back = parse_circuit(text, 3);
    EXPECT_EQ(back.gates(), c.gates());
    EXPECT_DOUBLE_EQ(back.global_phase(), 0.25);
}

TEST(CircuitText, ParseErrors) {
    EXPECT_EQ(parse_circuit("# comment\n\nH q3\n").n_qubits(), 4U);
    try {
        static_cast<void>(parse_circuit("H q0\nRZ q1\n"));
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2U);
    }
    EXPECT_THROW(static_cast<void>(parse_circuit("CNOT q0\n")), ParseError);
    EXPECT_THROW(static_cast<void>(parse_circuit("CNOT q1 q1\n")), ParseError);
    EXPECT_THROW(static_cast<void>(parse_circuit("H x0\n")), ParseError);
    EXPECT_THROW(static_cast<void>(parse_circuit("H q5\n", 2)), ParseError);
}
