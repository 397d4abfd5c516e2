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
#include "fermivqe/vqe.hpp"

#include "fermivqe/error.hpp"
#include "fermivqe/molham.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>
#include <numeric>
#include <random>

namespace fermivqe {

namespace {

constexpr std::size_t kWindow = 5;

bool window_converged(const std::vector<double> &h, double tol) {
    if (h.size() < kWindow) {
        return false;
    }
    const auto [lo, hi] = std::minmax_element(h.end() - kWindow, h.end());
    return *hi - *lo < tol;
}

// Records every optimizer-visible cost value and tracks the best point.
class Tracker {
  public:
    Tracker(const VqeProblem &p, const VQEConfig &c, VQEResult &r)
        : problem_(p), config_(c), result_(r) {}

    [[nodiscard]] bool full() const {
        return result_.energy_history.size() >= config_.max_evaluations;
    }

    double eval(std::span<const double> x) {
        const double e = problem_.cost(x, plan());
        ++result_.evaluation_count;
        if (!std::isfinite(e)) {
            throw ComputationError("non-finite cost after " +
                                   std::to_string(result_.evaluation_count) +
                                   " evaluations");
        }
        result_.energy_history.push_back(e);
        if (result_.energy_history.size() == 1 || e < result_.best_energy) {
            result_.best_energy = e;
            result_.best_params.assign(x.begin(), x.end());
        }
        return e;
    }

    std::vector<double> gradient(std::span<const double> x) {
        return problem_.parameter_shift_gradient(x, plan(),
                                                 &result_.evaluation_count);
    }

    [[nodiscard]] bool converged() const {
        return window_converged(result_.energy_history, config_.tolerance);
    }

  private:
    // Each evaluation gets its own sampling stream.
    [[nodiscard]] ShotPlan plan() const {
        ShotPlan p = config_.shots;
        p.master_seed = derive_seed(config_.seed ^ config_.shots.master_seed,
                                    result_.evaluation_count);
        return p;
    }

    const VqeProblem &problem_;
    const VQEConfig &config_;
    VQEResult &result_;
};

void run_gradient_descent(Tracker &t, std::vector<double> x,
                          const VQEConfig &c, VQEResult &r) {
    t.eval(x);
    while (!t.full() && !t.converged()) {
        x = gradient_descent_step(x, t.gradient(x), c.step_size);
        t.eval(x);
        ++r.iterations;
    }
}

void run_nelder_mead(Tracker &t, const std::vector<double> &x0,
                     const VQEConfig &c, VQEResult &r) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> s(n + 1, x0);
    std::vector<double> f(n + 1);
    f[0] = t.eval(s[0]);
    for (std::size_t i = 0; i < n && !t.full(); ++i) {
        s[i + 1][i] += c.nelder_mead_step;
        f[i + 1] = t.eval(s[i + 1]);
    }
    if (n == 0) {
        return;
    }
    std::vector<std::size_t> idx(n + 1);
    auto point = [&](const std::vector<double> &centroid, double coef,
                     const std::vector<double> &worst) {
        std::vector<double> p(n);
        for (std::size_t j = 0; j < n; ++j) {
            p[j] = centroid[j] + coef * (worst[j] - centroid[j]);
        }
        return p;
    };
    while (!t.full() && !t.converged()) {
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
        const std::size_t best = idx.front();
        const std::size_t worst = idx.back();
        const std::size_t second = idx[n - 1];
        if (f[worst] - f[best] < c.tolerance) {
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                centroid[j] += s[i][j] / static_cast<double>(n);
            }
        }
        ++r.iterations;
        auto xr = point(centroid, -1.0, s[worst]);
        const double fr = t.eval(xr);
        if (fr < f[best]) {
            if (t.full()) {
                s[worst] = xr;
                f[worst] = fr;
                break;
            }
            auto xe = point(centroid, -2.0, s[worst]);
            const double fe = t.eval(xe);
            if (fe < fr) {
                s[worst] = std::move(xe);
                f[worst] = fe;
            } else {
                s[worst] = std::move(xr);
                f[worst] = fr;
            }
            continue;
        }
        if (fr < f[second]) {
            s[worst] = std::move(xr);
            f[worst] = fr;
            continue;
        }
        if (t.full()) {
            break;
        }
        const bool outside = fr < f[worst];
        auto xc = outside ? point(centroid, -0.5, s[worst])
                          : point(centroid, 0.5, s[worst]);
        const double fc = t.eval(xc);
        if (fc < (outside ? fr : f[worst])) {
            s[worst] = std::move(xc);
            f[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n && !t.full(); ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                s[i][j] = s[best][j] + 0.5 * (s[i][j] - s[best][j]);
            }
            f[i] = t.eval(s[i]);
        }
    }
}

void run_spsa(Tracker &t, std::vector<double> x, const VQEConfig &c,
              VQEResult &r) {
    std::mt19937_64 rng(c.seed);
    const std::size_t n = x.size();
    for (std::size_t k = 0; !t.full() && !t.converged(); ++k) {
        const double kk = static_cast<double>(k + 1);
        const double ak = c.step_size / std::pow(kk, 0.602);
        const double ck = c.spsa_c / std::pow(kk, 0.101);
        std::vector<double> delta(n);
        for (auto &d : delta) {
            d = (rng() >> 63) ? 1.0 : -1.0;
        }
        std::vector<double> plus(x);
        std::vector<double> minus(x);
        for (std::size_t j = 0; j < n; ++j) {
            plus[j] += ck * delta[j];
            minus[j] -= ck * delta[j];
        }
        const double yp = t.eval(plus);
        if (t.full()) {
            break;
        }
        const double ym = t.eval(minus);
        const double scale = (yp - ym) / (2.0 * ck);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] -= ak * scale * delta[j];
        }
        ++r.iterations;
    }
}

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string_view optimizer_name(Optimizer o) noexcept {
    switch (o) {
    case Optimizer::gradient_descent:
        return "gradient_descent";
    case Optimizer::nelder_mead:
        return "nelder_mead";
    case Optimizer::spsa:
        return "spsa";
    }
    return "?";
}

Optimizer parse_optimizer(std::string_view name) {
    if (name == "gd" || name == "gradient_descent") {
        return Optimizer::gradient_descent;
    }
    if (name == "nm" || name == "nelder_mead") {
        return Optimizer::nelder_mead;
    }
    if (name == "spsa") {
        return Optimizer::spsa;
    }
    throw UnsupportedError("unknown optimizer '" + std::string(name) +
                           "' (known: gd, nm, spsa)");
}

void VQEConfig::validate() const {
    ansatz.validate();
    if (optimizer == Optimizer::gradient_descent && !(step_size > 0.0)) {
        throw DomainError("gradient descent needs step size > 0");
    }
    if (optimizer == Optimizer::spsa && !(step_size > 0.0 && spsa_c > 0.0)) {
        throw DomainError("SPSA needs positive gains");
    }
    if (!(tolerance > 0.0)) {
        throw DomainError("tolerance must be > 0");
    }
}

VqeProblem::VqeProblem(PauliSum hamiltonian, const AnsatzSpec &spec)
    : h_(std::move(hamiltonian)), spec_(spec), hf_(1), ansatz_(1), n_params_(0) {
    spec_.validate();
    if (spec_.n_spin_orbitals == 0) {
        spec_.n_spin_orbitals = h_.n_qubits();
    }
    if (spec_.n_spin_orbitals != h_.n_qubits()) {
        throw DimensionError("ansatz on " + std::to_string(spec_.n_spin_orbitals) +
                             " spin-orbitals, Hamiltonian on " +
                             std::to_string(h_.n_qubits()) + " qubits");
    }
    excs_ = build_excitations(spec_);
    n_params_ = parameter_count(excs_);
    hf_ = hf_circuit(spec_.n_electrons, spec_.n_spin_orbitals);
    ansatz_ = ansatz_circuit(excs_, spec_.n_spin_orbitals, spec_.trotter_steps);
}

double VqeProblem::hf_energy() const {
    return fermivqe::hf_energy(
        h_, hf_state(spec_.n_electrons, spec_.n_spin_orbitals));
}

StateVector VqeProblem::prepare(std::span<const double> params) const {
    if (params.size() != n_params_) {
        throw ShapeError("ansatz has " + std::to_string(n_params_) +
                         " parameters, got " + std::to_string(params.size()));
    }
    Circuit bound = ansatz_;
    bind_parameters(bound, params);
    StateVector s(h_.n_qubits());
    s.apply_circuit(hf_);
    s.apply_circuit(bound);
    return s;
}

double VqeProblem::energy_of(const Circuit &bound, const ShotPlan &plan) const {
    StateVector s(h_.n_qubits());
    s.apply_circuit(hf_);
    s.apply_circuit(bound);
    return estimate_energy(s, h_, plan);
}

double VqeProblem::cost(std::span<const double> params,
                        const ShotPlan &plan) const {
    return estimate_energy(prepare(params), h_, plan);
}

std::vector<double>
VqeProblem::parameter_shift_gradient(std::span<const double> params,
                                     const ShotPlan &plan,
                                     std::size_t *evaluations) const {
    if (params.size() != n_params_) {
        throw ShapeError("ansatz has " + std::to_string(n_params_) +
                         " parameters, got " + std::to_string(params.size()));
    }
    constexpr double shift = std::numbers::pi / 2.0;
    Circuit bound = ansatz_;
    bind_parameters(bound, params);
    std::vector<double> grad(n_params_, 0.0);
    for (std::size_t g = 0; g < bound.size(); ++g) {
        const auto &ref = bound.gates()[g].param;
        if (!ref || ref->weight == 0.0) {
            continue;
        }
        const double angle = bound.gates()[g].angle;
        bound.gates()[g].angle = angle + shift;
        const double up = energy_of(bound, plan);
        bound.gates()[g].angle = angle - shift;
        const double down = energy_of(bound, plan);
        bound.gates()[g].angle = angle;
        grad[ref->index] += ref->weight * 0.5 * (up - down);
        if (evaluations) {
            *evaluations += 2;
        }
    }
    return grad;
}

std::vector<double> gradient_descent_step(std::span<const double> params,
                                          std::span<const double> grad,
                                          double eta) {
    if (params.size() != grad.size()) {
        throw ShapeError("gradient length mismatch");
    }
    if (!(eta > 0.0)) {
        throw DomainError("step size must be > 0");
    }
    std::vector<double> out(params.begin(), params.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= eta * grad[i];
    }
    return out;
}

VQEResult vqe_run(const VqeProblem &problem, const VQEConfig &config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    VQEResult r;
    r.hf_energy = problem.hf_energy();
    r.best_energy = r.hf_energy;
    r.best_params = initial_parameters(problem.n_parameters(),
                                       config.perturb_initial, config.seed);
    if (config.max_evaluations > 0) {
        Tracker t(problem, config, r);
        const std::vector<double> x0 = r.best_params;
        switch (config.optimizer) {
        case Optimizer::gradient_descent:
            run_gradient_descent(t, x0, config, r);
            break;
        case Optimizer::nelder_mead:
            run_nelder_mead(t, x0, config, r);
            break;
        case Optimizer::spsa:
            run_spsa(t, x0, config, r);
            break;
        }
        r.converged = t.converged() ||
                      (config.optimizer == Optimizer::nelder_mead && !t.full());
    }
    r.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return r;
}

nlohmann::ordered_json vqe_report(const VqeProblem &problem,
                                  const VQEConfig &config,
                                  const VQEResult &result, bool timestamps) {
    using nlohmann::ordered_json;
    ordered_json shots;
    if (config.shots.exact) {
        shots = "exact";
    } else if (config.shots.per_string.empty()) {
        shots = config.shots.uniform_shots;
    } else {
        shots = config.shots.per_string;
    }
    ordered_json cfg = {
        {"ansatz", family_name(config.ansatz.family)},
        {"k", config.ansatz.k},
        {"trotter_steps", config.ansatz.trotter_steps},
        {"n_electrons", config.ansatz.n_electrons},
        {"n_spin_orbitals", problem.spec().n_spin_orbitals},
        {"spin_conserving", config.ansatz.spin_conserving},
        {"optimizer", optimizer_name(config.optimizer)},
        {"step_size", config.step_size},
        {"max_evaluations", config.max_evaluations},
        {"tolerance", config.tolerance},
        {"shots", shots},
        {"seed", config.seed},
    };
    ordered_json out = {
        {"config", cfg},
        {"n_parameters", problem.n_parameters()},
        {"n_excitations", problem.excitations().size()},
        {"n_hamiltonian_terms", problem.hamiltonian().size()},
        {"ansatz_gates", problem.ansatz().size()},
        {"ansatz_depth", circuit_depth(problem.ansatz())},
        {"hf_energy", result.hf_energy},
        {"best_energy", result.best_energy},
        {"best_params", result.best_params},
        {"converged", result.converged},
        {"iterations", result.iterations},
        {"evaluation_count", result.evaluation_count},
        {"history_length", result.energy_history.size()},
        {"energy_history", result.energy_history},
    };
    if (timestamps) {
        out["wall_time_seconds"] = result.wall_seconds;
        out["timestamp"] = utc_now();
    }
    return out;
}

} // namespace fermivqe
