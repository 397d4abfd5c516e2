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

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace fermivqe {

namespace {

constexpr std::array<std::string_view, 9> kNames = {
    "X", "Y", "Z", "H", "CNOT", "CZ", "RX", "RY", "RZ"};

std::vector<std::size_t> support_qubits(const PauliString &p) {
    std::vector<std::size_t> out;
    for (std::uint64_t s = p.support(); s != 0; s &= s - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    }
    return out;
}

} // namespace

std::string_view gate_name(GateKind k) noexcept {
    return kNames[static_cast<std::size_t>(k)];
}

bool is_two_qubit(GateKind k) noexcept {
    return k == GateKind::CNOT || k == GateKind::CZ;
}

bool is_rotation(GateKind k) noexcept {
    return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

Gate Gate::one(GateKind k, std::size_t q) {
    if (is_two_qubit(k) || is_rotation(k)) {
        throw DomainError(std::string(gate_name(k)) +
                          " is not a fixed single-qubit gate");
    }
    return Gate{k, {q, q}, 0.0, std::nullopt};
}

Gate Gate::two(GateKind k, std::size_t a, std::size_t b) {
    if (!is_two_qubit(k)) {
        throw DomainError(std::string(gate_name(k)) + " is not a 2-qubit gate");
    }
    if (a == b) {
        throw DomainError(std::string(gate_name(k)) +
                          " needs distinct qubits");
    }
    return Gate{k, {a, b}, 0.0, std::nullopt};
}

Gate Gate::rotation(GateKind k, std::size_t q, double angle,
                    std::optional<ParamRef> p) {
    if (!is_rotation(k)) {
        throw DomainError(std::string(gate_name(k)) + " is not a rotation");
    }
    return Gate{k, {q, q}, angle, p};
}

Circuit::Circuit(std::size_t n_qubits) : n_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw CapacityError("circuit width must be in [1, 64], got " +
                            std::to_string(n_qubits));
    }
}

void Circuit::add(const Gate &g) {
    for (std::size_t i = 0; i < g.arity(); ++i) {
        if (g.qubits[i] >= n_) {
            throw IndexError("qubit " + std::to_string(g.qubits[i]) +
                             " out of range for " + std::to_string(n_) +
                             " qubits");
        }
    }
    if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
        throw DomainError("two-qubit gate on a single qubit");
    }
    gates_.push_back(g);
}

void Circuit::append(const Circuit &c) {
    if (c.n_ != n_) {
        throw DimensionError("circuit append width mismatch");
    }
    gates_.insert(gates_.end(), c.gates_.begin(), c.gates_.end());
    phase_ += c.phase_;
}

std::size_t circuit_depth(const Circuit &c) {
    std::vector<std::size_t> busy(c.n_qubits(), 0);
    std::size_t depth = 0;
    for (const auto &g : c.gates()) {
        std::size_t layer = 0;
        for (std::size_t i = 0; i < g.arity(); ++i) {
            layer = std::max(layer, busy[g.qubits[i]]);
        }
        ++layer;
        for (std::size_t i = 0; i < g.arity(); ++i) {
            busy[g.qubits[i]] = layer;
        }
        depth = std::max(depth, layer);
    }
    return depth;
}

Circuit pauli_exp_circuit(const PauliString &p, double theta,
                          std::optional<ParamRef> param) {
    Circuit c(p.n_qubits());
    const auto q = support_qubits(p);
    if (q.empty()) {
        // exp(-i theta/2 I) is a pure phase.
        c.set_global_phase(-theta / 2.0);
        return c;
    }
    constexpr double half_pi = std::numbers::pi / 2.0;
    auto change = [&](bool undo) {
        for (std::size_t i = 0; i < q.size(); ++i) {
            // The uncompute runs in mirror order.
            const std::size_t j = undo ? q[q.size() - 1 - i] : q[i];
            const Axis a = p.axis(j);
            if (a == Axis::X) {
                c.add(Gate::one(GateKind::H, j));
            } else if (a == Axis::Y) {
                c.add(Gate::rotation(GateKind::RX, j,
                                     undo ? -half_pi : half_pi));
            }
        }
    };
    change(false);
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        c.add(Gate::two(GateKind::CNOT, q[i], q[i + 1]));
    }
    c.add(Gate::rotation(GateKind::RZ, q.back(), theta, param));
    for (std::size_t i = q.size() - 1; i-- > 0;) {
        c.add(Gate::two(GateKind::CNOT, q[i], q[i + 1]));
    }
    change(true);
    return c;
}

Circuit trotterize(std::size_t n_qubits, std::span<const RotationTerm> terms,
                   std::size_t steps) {
    if (steps == 0) {
        throw DomainError("Trotter step count must be >= 1");
    }
    const double l = static_cast<double>(steps);
    Circuit step(n_qubits);
    for (const auto &t : terms) {
        if (t.string.n_qubits() != n_qubits) {
            throw DimensionError("rotation term width mismatch");
        }
        std::optional<ParamRef> p = t.param;
        if (p) {
            p->weight /= l;
        }
        step.append(pauli_exp_circuit(t.string, t.angle / l, p));
    }
    Circuit out(n_qubits);
    for (std::size_t s = 0; s < steps; ++s) {
        out.append(step);
    }
    return out;
}

Circuit trotterize(const PauliSum &h, std::size_t steps) {
    if (h.max_imag() > 1e-10) {
        throw InvalidObservableError("trotterize: coefficients must be real");
    }
    std::vector<RotationTerm> terms;
    const PauliSum hs = simplify(h);
    for (const auto &t : hs.terms()) {
        terms.push_back({t.string, 2.0 * t.coefficient.real(), std::nullopt});
    }
    return trotterize(h.n_qubits(), terms, steps);
}

std::vector<RotationTerm> rotations_from_generator(const PauliSum &a) {
    if (a.max_real() > 1e-10) {
        throw InvalidObservableError(
            "generator is not anti-Hermitian (real coefficient present)");
    }
    std::vector<RotationTerm> out;
    const PauliSum as = simplify(a);
    for (const auto &t : as.terms()) {
        out.push_back({t.string, -2.0 * t.coefficient.imag(), std::nullopt});
    }
    return out;
}

void bind_parameters(Circuit &c, std::span<const double> params) {
    for (auto &g : c.gates()) {
        if (!g.param) {
            continue;
        }
        if (g.param->index >= params.size()) {
            throw ShapeError("circuit references parameter " +
                             std::to_string(g.param->index) + " but only " +
                             std::to_string(params.size()) + " given");
        }
        g.angle = g.param->weight * params[g.param->index];
    }
}

namespace {

// Shortest text that parses back to the same double.
std::string format_angle(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, r.ptr};
}

} // namespace

std::string to_text(const Circuit &c) {
    std::string out;
    if (c.global_phase() != 0.0) {
        out += "GPHASE(" + format_angle(c.global_phase()) + ")\n";
    }
    for (const auto &g : c.gates()) {
        out += gate_name(g.kind);
        if (is_rotation(g.kind)) {
            out += "(" + format_angle(g.angle) + ")";
        }
        for (std::size_t i = 0; i < g.arity(); ++i) {
            out += " q" + std::to_string(g.qubits[i]);
        }
        out += '\n';
    }
    return out;
}

Circuit parse_circuit(std::string_view text, std::size_t n_qubits) {
    struct Parsed {
        Gate gate;
        std::size_t line;
    };
    std::vector<Parsed> parsed;
    double phase = 0.0;
    std::size_t max_q = 0;
    bool any_q = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) {
            raw.erase(h);
        }
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) {
            continue;
        }
        std::string name = head;
        std::optional<double> angle;
        if (auto open = head.find('('); open != std::string::npos) {
            if (head.back() != ')') {
                throw ParseError("unterminated angle in '" + head + "'",
                                 lineno);
            }
            name = head.substr(0, open);
            const std::string num = head.substr(open + 1,
                                                head.size() - open - 2);
            try {
                std::size_t used = 0;
                angle = std::stod(num, &used);
                if (used != num.size()) {
                    throw std::invalid_argument(num);
                }
            } catch (const std::exception &) {
                throw ParseError("bad angle '" + num + "'", lineno);
            }
        }
        std::transform(name.begin(), name.end(), name.begin(), [](char ch) {
            return static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        });
        if (name == "GPHASE") {
            if (!angle) {
                throw ParseError("GPHASE needs an angle", lineno);
            }
            phase += *angle;
            continue;
        }
        auto it = std::find(kNames.begin(), kNames.end(), name);
        if (it == kNames.end()) {
            throw ParseError("unknown gate '" + name + "'", lineno);
        }
        const auto kind = static_cast<GateKind>(it - kNames.begin());
        if (is_rotation(kind) != angle.has_value()) {
            throw ParseError(is_rotation(kind) ? "rotation needs an angle"
                                               : "unexpected angle",
                             lineno);
        }
        std::vector<std::size_t> qs;
        std::string tok;
        while (ls >> tok) {
            std::size_t v = 0;
            const char *b = tok.data() + 1;
            const char *e = tok.data() + tok.size();
            if (tok.size() < 2 || (tok[0] != 'q' && tok[0] != 'Q') ||
                std::from_chars(b, e, v).ptr != e) {
                throw ParseError("bad qubit token '" + tok + "'", lineno);
            }
            qs.push_back(v);
            max_q = std::max(max_q, v);
            any_q = true;
        }
        const std::size_t want = is_two_qubit(kind) ? 2 : 1;
        if (qs.size() != want) {
            throw ParseError(name + " expects " + std::to_string(want) +
                                 " qubit(s), got " + std::to_string(qs.size()),
                             lineno);
        }
        try {
            Gate g = is_two_qubit(kind) ? Gate::two(kind, qs[0], qs[1])
                     : is_rotation(kind) ? Gate::rotation(kind, qs[0], *angle)
                                         : Gate::one(kind, qs[0]);
            parsed.push_back({g, lineno});
        } catch (const DomainError &e) {
            throw ParseError(e.what(), lineno);
        }
    }
    const std::size_t width = n_qubits ? n_qubits : (any_q ? max_q + 1 : 1);
    Circuit c(width);
    for (const auto &p : parsed) {
        try {
            c.add(p.gate);
        } catch (const IndexError &e) {
            throw ParseError(e.what(), p.line);
        }
    }
    c.set_global_phase(phase);
    return c;
}

} // namespace fermivqe
