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
// Command-line front end. Exit codes: 0 success, 1 computation or input
// error, 2 usage error.
#include "fermivqe/ansatz.hpp"
#include "fermivqe/circuit.hpp"
#include "fermivqe/error.hpp"
#include "fermivqe/fci.hpp"
#include "fermivqe/kernels.hpp"
#include "fermivqe/molham.hpp"
#include "fermivqe/resources.hpp"
#include "fermivqe/vqe.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace fermivqe;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ResourcesOpts {
    std::string molecule;
    std::string basis;
    std::string ansatz;
    std::size_t k{1};
    double eps{1.6e-3};
    bool json{false};
};

int run_resources(const ResourcesOpts &o) {
    const ResourceReport r = basis_count(o.molecule, o.basis);
    std::optional<TermCounts> counts;
    std::optional<ComplexityReport> cx;
    if (!o.ansatz.empty()) {
        const AnsatzFamily f = parse_family(o.ansatz);
        counts = ansatz_term_counts(r.n_electrons, r.n_qubits, f, o.k);
        cx = complexity_report(r.n_qubits, o.eps, o.k, f);
    }
    if (o.json) {
        nlohmann::ordered_json j = to_json(r);
        if (counts) {
            j["term_counts"] = to_json(*counts);
            j["complexity"] = to_json(*cx);
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << to_text(r);
    if (counts) {
        std::cout << '\n' << to_text(*counts) << '\n' << to_text(*cx);
    }
    return 0;
}

int run_ham(const std::string &path, bool dump) {
    const MolecularIntegrals m = load_fcidump(path);
    const PauliSum h = qubit_hamiltonian(m);
    std::cout << "orbitals       " << m.n_orbitals() << '\n'
              << "electrons      " << m.n_electrons() << '\n'
              << "qubits         " << h.n_qubits() << '\n'
              << "pauli terms    " << h.size() << '\n'
              << "core energy    " << fmt(m.core_energy()) << '\n';
    if (dump) {
        std::cout << h.to_string();
    }
    return 0;
}

int run_hf(const std::string &path) {
    const MolecularIntegrals m = load_fcidump(path);
    const PauliSum h = qubit_hamiltonian(m);
    const Occupation hf = hf_state(m.n_electrons(), h.n_qubits());
    std::cout << "hf_state  " << hf.to_string() << '\n'
              << "E_HF      " << fmt(hf_energy(h, hf)) << '\n';
    return 0;
}

int run_fci(const std::string &path, bool sector) {
    const MolecularIntegrals m = load_fcidump(path);
    const PauliSum h = qubit_hamiltonian(m);
    const double e_hf = hf_energy(h, hf_state(m.n_electrons(), h.n_qubits()));
    const GroundState g =
        sector ? ground_energy(h, m.n_electrons()) : ground_energy(h);
    std::cout << "E_FCI     " << fmt(g.energy) << '\n'
              << "E_HF      " << fmt(e_hf) << '\n'
              << "E_corr    " << fmt(correlation_energy(g.energy, e_hf)) << '\n'
              << "space     "
              << (sector ? std::to_string(m.n_electrons()) + "-electron sector"
                         : std::string("full"))
              << " (dim " << g.basis.size() << ")\n";
    return 0;
}

struct VqeOpts {
    std::string fcidump;
    std::string ansatz{"uccsd"};
    std::size_t k{1};
    std::size_t trotter{1};
    std::string optimizer{"gd"};
    double eta{0.1};
    std::string shots{"exact"};
    std::optional<double> eps;
    std::uint64_t seed{0};
    std::size_t max_evals{500};
    double tol{1e-8};
    bool spin_conserving{false};
    std::string out;
    bool no_timestamp{false};
    bool shots_given{false};
};

int run_vqe(const VqeOpts &o) {
    const MolecularIntegrals m = load_fcidump(o.fcidump);
    PauliSum h = qubit_hamiltonian(m);
    VQEConfig c;
    c.ansatz.family = parse_family(o.ansatz);
    c.ansatz.k = o.k;
    c.ansatz.trotter_steps = o.trotter;
    c.ansatz.n_electrons = m.n_electrons();
    c.ansatz.n_spin_orbitals = h.n_qubits();
    c.ansatz.spin_conserving = o.spin_conserving;
    c.optimizer = parse_optimizer(o.optimizer);
    c.step_size = o.eta;
    c.max_evaluations = o.max_evals;
    c.tolerance = o.tol;
    c.seed = o.seed;
    if (o.shots_given && o.shots != "exact") {
        c.shots = ShotPlan::uniform(std::stoull(o.shots), o.seed);
    } else if (!o.shots_given && o.eps) {
        // Worst-case per-string variance is 1.
        c.shots = ShotPlan::uniform(shots_required(1.0, *o.eps), o.seed);
    }
    const VqeProblem problem(std::move(h), c.ansatz);
    const VQEResult r = vqe_run(problem, c);
    const std::string report = vqe_report(problem, c, r, !o.no_timestamp).dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << report;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            throw Error("cannot write '" + o.out + "'");
        }
        f << report;
        std::cout << "best_energy " << fmt(r.best_energy) << '\n'
                  << "converged   " << (r.converged ? "true" : "false") << '\n'
                  << "evaluations " << r.evaluation_count << '\n';
    }
    return 0;
}

int run_expcircuit(const std::string &pauli, double theta, std::size_t n) {
    const PauliString p = PauliString::parse(pauli, n);
    std::cout << to_text(pauli_exp_circuit(p, theta));
    return 0;
}

int run_depth(const std::string &path) {
    const Circuit c = parse_circuit(read_file(path));
    std::cout << circuit_depth(c) << '\n';
    return 0;
}

bool valid_shots(const std::string &s) {
    if (s == "exact") {
        return true;
    }
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos &&
           std::stoull(s) > 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"fermivqe: molecular VQE simulation and resource counts"};
    app.require_subcommand(1);
    std::string simd = "auto";
    app.add_option("--simd", simd, "Kernel set: auto, scalar or avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    ResourcesOpts ro;
    auto *res = app.add_subcommand("resources", "Basis-function and qubit counts");
    res->add_option("--molecule", ro.molecule, "Formula, e.g. H2O")->required();
    res->add_option("--basis", ro.basis, "Basis set name, e.g. STO-3G")->required();
    res->add_option("--ansatz", ro.ansatz, "Add term counts for uccsd|uccgsd|kupccgsd")
        ->check(CLI::IsMember({"uccsd", "uccgsd", "kupccgsd"}));
    res->add_option("--k", ro.k, "k for kupccgsd")->check(CLI::PositiveNumber);
    res->add_option("--eps", ro.eps, "Target precision (hartree)")->check(CLI::PositiveNumber);
    res->add_flag("--json", ro.json, "JSON instead of text");

    std::string fcidump;
    bool dump_pauli = false;
    auto *ham = app.add_subcommand("ham", "Build the qubit Hamiltonian");
    ham->add_option("--fcidump", fcidump, "FCIDUMP file")->required()->check(CLI::ExistingFile);
    ham->add_flag("--dump-pauli", dump_pauli, "Print every Pauli term");

    auto *hf = app.add_subcommand("hf", "Hartree-Fock energy");
    hf->add_option("--fcidump", fcidump, "FCIDUMP file")->required()->check(CLI::ExistingFile);

    bool sector = false;
    auto *fci = app.add_subcommand("fci", "Exact ground energy");
    fci->add_option("--fcidump", fcidump, "FCIDUMP file")->required()->check(CLI::ExistingFile);
    fci->add_flag("--sector", sector, "Restrict to the FCIDUMP electron count");

    VqeOpts vo;
    auto *vqe = app.add_subcommand("vqe", "Run the variational loop");
    vqe->add_option("--fcidump", vo.fcidump, "FCIDUMP file")->required()->check(CLI::ExistingFile);
    vqe->add_option("--ansatz", vo.ansatz, "uccsd|uccgsd|kupccgsd")
        ->check(CLI::IsMember({"uccsd", "uccgsd", "kupccgsd"}));
    vqe->add_option("--k", vo.k, "Replicas for kupccgsd")->check(CLI::PositiveNumber);
    vqe->add_option("--trotter", vo.trotter, "Trotter steps")->check(CLI::PositiveNumber);
    vqe->add_option("--optimizer", vo.optimizer, "gd|nm|spsa")
        ->check(CLI::IsMember({"gd", "nm", "spsa"}));
    vqe->add_option("--eta", vo.eta, "Step size")->check(CLI::PositiveNumber);
    auto *shots_opt = vqe->add_option("--shots", vo.shots, "Shots per string or 'exact'")
        ->check(CLI::Validator(
            [](std::string &s) {
                return valid_shots(s) ? std::string{}
                                      : "expected a positive integer or 'exact'";
            },
            "INT|exact"));
    vqe->add_option("--eps", vo.eps, "Precision; sets shots = ceil(1/eps^2)")
        ->check(CLI::PositiveNumber);
    vqe->add_option("--seed", vo.seed, "RNG seed");
    vqe->add_option("--max-evals", vo.max_evals, "Cost evaluations recorded");
    vqe->add_option("--tol", vo.tol, "Convergence window (hartree)")->check(CLI::PositiveNumber);
    vqe->add_flag("--spin-conserving", vo.spin_conserving, "Drop spin-flip excitations");
    vqe->add_option("--out", vo.out, "Report path (stdout when omitted)");
    vqe->add_flag("--no-timestamp", vo.no_timestamp, "Omit wall time and timestamp");

    std::string pauli;
    double theta = 0.0;
    std::size_t n_qubits = 0;
    auto *expc = app.add_subcommand("expcircuit", "Circuit for exp(-i theta/2 P)");
    expc->add_option("--pauli", pauli, "Pauli string, e.g. \"Z0 X1 Y2\"")->required();
    expc->add_option("--theta", theta, "Rotation angle (radians)")->required();
    expc->add_option("--n-qubits", n_qubits, "Register width (default: max index + 1)");

    std::string circuit_path;
    auto *depth = app.add_subcommand("depth", "ASAP depth of a circuit text file");
    depth->add_option("--circuit", circuit_path, "Circuit file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }
    vo.shots_given = shots_opt->count() > 0;

    try {
        if (!kernels::select_kernels(simd)) {
            std::cerr << "error: kernel set '" << simd << "' unavailable\n";
            return 2;
        }
        if (*res) {
            return run_resources(ro);
        }
        if (*ham) {
            return run_ham(fcidump, dump_pauli);
        }
        if (*hf) {
            return run_hf(fcidump);
        }
        if (*fci) {
            return run_fci(fcidump, sector);
        }
        if (*vqe) {
            return run_vqe(vo);
        }
        if (*expc) {
            return run_expcircuit(pauli, theta, n_qubits);
        }
        if (*depth) {
            return run_depth(circuit_path);
        }
    } catch (const UnsupportedError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
