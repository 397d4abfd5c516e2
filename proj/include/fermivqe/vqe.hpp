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
 * @file vqe.hpp
 * Hybrid variational loop: HF preparation, Trotterized ansatz, energy
 * estimate, classical update.
 */
#pragma once

#include "fermivqe/ansatz.hpp"
#include "fermivqe/circuit.hpp"
#include "fermivqe/pauli.hpp"
#include "fermivqe/statevector.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fermivqe {

enum class Optimizer { gradient_descent, nelder_mead, spsa };

[[nodiscard]] std::string_view optimizer_name(Optimizer o) noexcept;
/// "gd", "nm", "spsa" or the long names.
[[nodiscard]] Optimizer parse_optimizer(std::string_view name);

struct VQEConfig {
    AnsatzSpec ansatz;
    Optimizer optimizer{Optimizer::gradient_descent};
    /// Gradient-descent eta; also the SPSA gain a.
    double step_size{0.1};
    /// Cap on energy_history entries (optimizer-visible cost values).
    std::size_t max_evaluations{500};
    /// Convergence when the last 5 history entries span less than this.
    double tolerance{1e-8};
    ShotPlan shots{};
    std::uint64_t seed{0};
    /// Start from uniform(-0.1, 0.1) instead of zeros.
    bool perturb_initial{false};
    double spsa_c{0.1};
    double nelder_mead_step{0.1};

    /// Throws DomainError on eta <= 0 (gradient descent) or tolerance <= 0.
    void validate() const;
};

struct VQEResult {
    double hf_energy{0.0};
    double best_energy{0.0};
    std::vector<double> best_params;
    /// Every circuit evaluation, including gradient shifts.
    std::size_t evaluation_count{0};
    std::vector<double> energy_history;
    bool converged{false};
    std::size_t iterations{0};
    double wall_seconds{0.0};
};

/// Hamiltonian plus ansatz, with the parameterized circuit built once.
class VqeProblem {
  public:
    VqeProblem(PauliSum hamiltonian, const AnsatzSpec &spec);

    [[nodiscard]] const PauliSum &hamiltonian() const noexcept { return h_; }
    [[nodiscard]] const AnsatzSpec &spec() const noexcept { return spec_; }
    [[nodiscard]] const std::vector<Excitation> &excitations() const noexcept {
        return excs_;
    }
    [[nodiscard]] const Circuit &ansatz() const noexcept { return ansatz_; }
    [[nodiscard]] std::size_t n_parameters() const noexcept { return n_params_; }
    /// <HF|H|HF> from the diagonal terms.
    [[nodiscard]] double hf_energy() const;

    /// HF prep, bound ansatz, state.
    [[nodiscard]] StateVector prepare(std::span<const double> params) const;
    /// Energy of the prepared state under `plan`.
    [[nodiscard]] double cost(std::span<const double> params,
                              const ShotPlan &plan = ShotPlan::exact_plan()) const;
    /**
     * Sum over rotation gates tied to parameter j of
     * weight * (C(angle + pi/2) - C(angle - pi/2)) / 2.
     * `evaluations`, when given, is increased by the cost calls made.
     */
    [[nodiscard]] std::vector<double>
    parameter_shift_gradient(std::span<const double> params,
                             const ShotPlan &plan = ShotPlan::exact_plan(),
                             std::size_t *evaluations = nullptr) const;

  private:
    [[nodiscard]] double energy_of(const Circuit &bound,
                                   const ShotPlan &plan) const;

    PauliSum h_;
    AnsatzSpec spec_;
    std::vector<Excitation> excs_;
    Circuit hf_;
    Circuit ansatz_;
    std::size_t n_params_;
};

/// params - eta * grad.
[[nodiscard]] std::vector<double>
gradient_descent_step(std::span<const double> params,
                      std::span<const double> grad, double eta);

/// Throws ComputationError on a non-finite cost.
[[nodiscard]] VQEResult vqe_run(const VqeProblem &problem,
                                const VQEConfig &config);

/// Config echo, history, best energy/params and counts. Wall time and a
/// UTC timestamp are added only when `timestamps` is set.
[[nodiscard]] nlohmann::ordered_json vqe_report(const VqeProblem &problem,
                                                const VQEConfig &config,
                                                const VQEResult &result,
                                                bool timestamps = true);

} // namespace fermivqe
