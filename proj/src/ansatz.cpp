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
#include "fermivqe/ansatz.hpp"

#include "fermivqe/error.hpp"
#include "fermivqe/mapping.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <random>

namespace fermivqe {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::size_t beta_count(const std::vector<std::size_t> &modes) {
    return static_cast<std::size_t>(
        std::count_if(modes.begin(), modes.end(), [](std::size_t m) {
            return (m & 1U) != 0;
        }));
}

bool spin_ok(const Excitation &e) {
    return beta_count(e.from_modes) == beta_count(e.to_modes);
}

void push(std::vector<Excitation> &out, Excitation e, bool spin_conserving,
          std::size_t &next_param) {
    if (spin_conserving && !spin_ok(e)) {
        return;
    }
    e.parameter_index = next_param++;
    out.push_back(std::move(e));
}

std::vector<Pair> ordered_pairs(std::size_t lo, std::size_t hi) {
    std::vector<Pair> out;
    for (std::size_t a = lo; a < hi; ++a) {
        for (std::size_t b = a + 1; b < hi; ++b) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

void generalized_singles(std::vector<Excitation> &out, std::size_t n_f,
                         bool spin_conserving, std::size_t layer,
                         std::size_t &next) {
    for (const auto &[q, p] : ordered_pairs(0, n_f)) {
        push(out, {ExcitationKind::single, {q}, {p}, 0, layer},
             spin_conserving, next);
    }
}

} // namespace

std::string_view family_name(AnsatzFamily f) noexcept {
    switch (f) {
    case AnsatzFamily::UCCSD:
        return "uccsd";
    case AnsatzFamily::UCCGSD:
        return "uccgsd";
    case AnsatzFamily::kUpCCGSD:
        return "kupccgsd";
    }
    return "?";
}

AnsatzFamily parse_family(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](char c) {
        return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    });
    s.erase(std::remove(s.begin(), s.end(), '-'), s.end());
    if (s == "uccsd" || s == "ucc") {
        return AnsatzFamily::UCCSD;
    }
    if (s == "uccgsd" || s == "uccg") {
        return AnsatzFamily::UCCGSD;
    }
    if (s == "kupccgsd" || s == "kupccg") {
        return AnsatzFamily::kUpCCGSD;
    }
    throw UnsupportedError("unknown ansatz '" + std::string(name) +
                           "' (known: uccsd, uccgsd, kupccgsd)");
}

void AnsatzSpec::validate() const {
    if (trotter_steps < 1) {
        throw DomainError("trotter_steps must be >= 1");
    }
    if (k < 1) {
        throw DomainError("k must be >= 1");
    }
    if (family != AnsatzFamily::kUpCCGSD && k != 1) {
        throw DomainError("k != 1 is only meaningful for k-UpCCGSD");
    }
}

std::vector<Excitation> uccsd_excitations(std::size_t n_e, std::size_t n_f,
                                          bool spin_conserving) {
    std::vector<Excitation> out;
    if (n_e == 0 || n_e >= n_f) {
        std::clog << "warning: UCCSD with " << n_e << " electrons in " << n_f
                  << " spin-orbitals has no excitations\n";
        return out;
    }
    std::size_t next = 0;
    for (std::size_t i = 0; i < n_e; ++i) {
        for (std::size_t a = n_e; a < n_f; ++a) {
            push(out, {ExcitationKind::single, {i}, {a}, 0, 0},
                 spin_conserving, next);
        }
    }
    for (const auto &[i, j] : ordered_pairs(0, n_e)) {
        for (const auto &[a, b] : ordered_pairs(n_e, n_f)) {
            push(out, {ExcitationKind::double_, {i, j}, {a, b}, 0, 0},
                 spin_conserving, next);
        }
    }
    return out;
}

std::vector<Excitation> uccgsd_excitations(std::size_t n_f,
                                           bool spin_conserving) {
    if (n_f < 2) {
        throw ShapeError("UCCGSD needs at least 2 spin-orbitals");
    }
    std::vector<Excitation> out;
    std::size_t next = 0;
    generalized_singles(out, n_f, spin_conserving, 0, next);
    const auto pairs = ordered_pairs(0, n_f);
    for (std::size_t u = 0; u < pairs.size(); ++u) {
        for (std::size_t v = u + 1; v < pairs.size(); ++v) {
            push(out,
                 {ExcitationKind::double_,
                  {pairs[u].first, pairs[u].second},
                  {pairs[v].first, pairs[v].second},
                  0,
                  0},
                 spin_conserving, next);
        }
    }
    return out;
}

std::vector<Excitation> kupccgsd_excitations(std::size_t n_f, std::size_t k,
                                             bool spin_conserving) {
    if (n_f < 4 || n_f % 2 != 0) {
        throw ShapeError("k-UpCCGSD needs an even spin-orbital count >= 4, got " +
                         std::to_string(n_f));
    }
    if (k < 1) {
        throw DomainError("k must be >= 1");
    }
    std::vector<Excitation> out;
    std::size_t next = 0;
    for (std::size_t layer = 0; layer < k; ++layer) {
        generalized_singles(out, n_f, spin_conserving, layer, next);
        for (const auto &[q, p] : ordered_pairs(0, n_f / 2)) {
            push(out,
                 {ExcitationKind::paired_double,
                  {2 * q, 2 * q + 1},
                  {2 * p, 2 * p + 1},
                  0,
                  layer},
                 spin_conserving, next);
        }
    }
    return out;
}

std::vector<Excitation> build_excitations(const AnsatzSpec &spec) {
    spec.validate();
    switch (spec.family) {
    case AnsatzFamily::UCCSD:
        return uccsd_excitations(spec.n_electrons, spec.n_spin_orbitals,
                                 spec.spin_conserving);
    case AnsatzFamily::UCCGSD:
        return uccgsd_excitations(spec.n_spin_orbitals, spec.spin_conserving);
    case AnsatzFamily::kUpCCGSD:
        return kupccgsd_excitations(spec.n_spin_orbitals, spec.k,
                                    spec.spin_conserving);
    }
    return {};
}

std::size_t parameter_count(std::span<const Excitation> excs) {
    std::size_t n = 0;
    for (const auto &e : excs) {
        n = std::max(n, e.parameter_index + 1);
    }
    return n;
}

FermionOperator excitation_operator(const Excitation &e, std::size_t n_f) {
    std::vector<Factor> f;
    for (std::size_t p : e.to_modes) {
        f.push_back(cre(p));
    }
    for (auto it = e.from_modes.rbegin(); it != e.from_modes.rend(); ++it) {
        f.push_back(ann(*it));
    }
    FermionOperator op(n_f);
    op.add_term(1.0, std::move(f));
    return op;
}

FermionOperator generator_fermion(std::span<const Excitation> excs,
                                  std::size_t n_f,
                                  std::span<const double> params) {
    if (params.size() != parameter_count(excs)) {
        throw ShapeError("ansatz has " + std::to_string(parameter_count(excs)) +
                         " parameters, got " + std::to_string(params.size()));
    }
    FermionOperator g(n_f);
    for (const auto &e : excs) {
        const double t = params[e.parameter_index];
        if (t == 0.0) {
            continue;
        }
        const FermionOperator op = excitation_operator(e, n_f);
        g += cplx{t} * (op - hermitian_conjugate(op));
    }
    return g;
}

PauliSum generator_paulisum(std::span<const Excitation> excs, std::size_t n_f,
                            std::span<const double> params) {
    return jw_map(generator_fermion(excs, n_f, params));
}

std::vector<RotationTerm> ansatz_rotations(std::span<const Excitation> excs,
                                           std::size_t n_f) {
    std::vector<RotationTerm> out;
    for (const auto &e : excs) {
        const FermionOperator op = excitation_operator(e, n_f);
        for (auto r : rotations_from_generator(jw_map(op - hermitian_conjugate(op)))) {
            r.param = ParamRef{e.parameter_index, r.angle};
            r.angle = 0.0;
            out.push_back(std::move(r));
        }
    }
    return out;
}

Circuit hf_circuit(std::size_t n_e, std::size_t n_f) {
    if (n_e > n_f) {
        throw CapacityError("more electrons than spin-orbitals");
    }
    Circuit c(n_f);
    for (std::size_t q = 0; q < n_e; ++q) {
        c.add(Gate::one(GateKind::X, q));
    }
    return c;
}

Circuit ansatz_circuit(std::span<const Excitation> excs, std::size_t n_f,
                       std::size_t trotter_steps) {
    const auto rot = ansatz_rotations(excs, n_f);
    return trotterize(n_f, rot, trotter_steps);
}

std::vector<double> initial_parameters(std::size_t n, bool perturb,
                                       std::uint64_t seed) {
    std::vector<double> p(n, 0.0);
    if (perturb) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-0.1, 0.1);
        for (auto &x : p) {
            x = u(rng);
        }
    }
    return p;
}

} // namespace fermivqe
