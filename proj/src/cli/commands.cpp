// Copyright 2026 The Purify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "purify/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "purify/channels.hpp"
#include "purify/errors.hpp"
#include "purify/measurement.hpp"
#include "purify/random.hpp"
#include "purify/sampling.hpp"
#include "purify/schemes.hpp"

namespace purify::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kInstances = 20;

std::string format_real(double x) {
    std::ostringstream os;
    os.precision(std::numeric_limits<double>::max_digits10);
    os << x;
    return os.str();
}

Json noise_json(const NoiseModel &n) {
    return Json{{"kind", to_string(n.kind)}, {"strength", n.strength}};
}

Json resource_json(const ResourceProfile &r) {
    return Json{{"degree", r.degree},
                {"registers", r.registers},
                {"control_register_swaps", r.control_register_swaps},
                {"qubit_level_control_swaps", r.qubit_level_control_swaps},
                {"depth_factor", r.depth_factor},
                {"ancillas", r.ancillas}};
}

Json optional_json(const std::optional<double> &x) {
    return x ? Json(*x) : Json(nullptr);
}

Json config_json(const ExperimentConfig &cfg) {
    Json j;
    j["scheme"] = to_string(cfg.scheme);
    j["circuit"] = cfg.circuit;
    j["noise"] = noise_json(cfg.noise);
    j["machinery_noise"] = cfg.machinery_noise ? noise_json(*cfg.machinery_noise) : Json(nullptr);
    j["inverse_noise"] = cfg.inverse_noise ? noise_json(*cfg.inverse_noise) : Json(nullptr);
    j["observable"] = cfg.observable;
    j["M"] = cfg.copies;
    j["shots"] = cfg.shots ? Json(*cfg.shots) : Json("exact");
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["output"] = cfg.output;
    return j;
}

Eigen::Index random_register_dim(Rng &rng, int max_qubits) {
    std::uniform_int_distribution<int> q(1, max_qubits);
    return Eigen::Index{1} << q(rng);
}

ComplexMatrix random_pauli(Rng &rng, int n) {
    std::string s = random_pauli_string(rng, n);
    return pauli_string_matrix(s);
}

int qubits_of(Eigen::Index d) {
    int n = 0;
    while ((Eigen::Index{1} << n) < d) {
        ++n;
    }
    return n;
}

using Check = std::function<double(Rng &)>;

double multicopy_trace(Rng &rng) {
    std::uniform_int_distribution<int> copies(2, 3);
    const Eigen::Index d = random_register_dim(rng, 2);
    const int m = copies(rng);
    const DensityOperator rho = random_density(rng, d);
    const ComplexMatrix obs = random_hermitian(rng, d);
    const ComplexMatrix rest = kron_power(ComplexMatrix::Identity(d, d), m - 1);
    const ComplexMatrix o1 = kron(obs, rest);
    const Complex lhs = trace_product(cyclic_permutation(m, d) * o1, kron_power(rho.matrix(), m));
    ComplexMatrix power = ComplexMatrix::Identity(d, d);
    for (int k = 0; k < m; ++k) {
        power = power * rho.matrix();
    }
    return std::abs(lhs - trace_product(obs, power));
}

double cyclic_as_swaps(Rng &rng) {
    std::uniform_int_distribution<int> copies(2, 4);
    const Eigen::Index d = random_register_dim(rng, 1);
    const int m = copies(rng);
    ComplexMatrix product = kron_power(ComplexMatrix::Identity(d, d), m);
    for (int k = 0; k + 1 < m; ++k) {
        product = register_swap(m, d, k, k + 1) * product;
    }
    return max_abs(product - cyclic_permutation(m, d));
}

double combined_forms(Rng &rng) {
    std::uniform_int_distribution<int> copies(1, 2);
    const Eigen::Index d = random_register_dim(rng, 2);
    const int m = copies(rng);
    const DensityOperator rho = random_density(rng, d);
    const DensityOperator dual = random_positive(rng, d);
    const ComplexMatrix obs = random_hermitian(rng, d);
    return combined_estimate(rho, dual, obs, m).form_residual.value_or(0.0);
}

double symmetric_measure(Rng &rng) {
    const Eigen::Index d = random_register_dim(rng, 2);
    const DensityOperator rho = random_density(rng, d);
    const ComplexMatrix s = random_hermitian(rng, d);
    const ComplexMatrix g = random_pauli(rng, qubits_of(d));
    const Complex target = trace_product(0.5 * (s * g + g * s), rho.matrix());
    return std::abs(symmetric_product_measure(s, g, rho) - target);
}

double antisymmetric_measure(Rng &rng) {
    const Eigen::Index d = random_register_dim(rng, 2);
    const DensityOperator rho = random_density(rng, d);
    const ComplexMatrix s = random_hermitian(rng, d);
    const ComplexMatrix g = random_pauli(rng, qubits_of(d));
    const Complex target =
        Complex{0.0, 1.0} * trace_product(0.5 * (s * g - g * s), rho.matrix());
    return std::abs(antisymmetric_product_measure(s, g, rho) - target);
}

double product_measure(Rng &rng) {
    const Eigen::Index d = random_register_dim(rng, 2);
    const DensityOperator rho = random_density(rng, d);
    const ComplexMatrix s = random_hermitian(rng, d);
    const ComplexMatrix g = random_pauli(rng, qubits_of(d));
    return std::abs(product_expectation(s, g, rho) - trace_product(s * g, rho.matrix()));
}

double hadamard_reconstruction(Rng &rng) {
    const Eigen::Index d = random_register_dim(rng, 3);
    const DensityOperator rho = random_density(rng, d);
    const ComplexMatrix s = random_hermitian(rng, d);
    const ComplexMatrix u = random_unitary(rng, d);
    const Complex measured{hadamard_test(u, s, rho, HadamardTestPart::Real),
                           hadamard_test(u, s, rho, HadamardTestPart::Imaginary)};
    return std::abs(measured - trace_product(s * u, rho.matrix()));
}

double register_swap_gates(Rng &rng) {
    std::uniform_int_distribution<int> width(1, 2);
    const int n = width(rng);
    const ControlledRegisterSwap crs = controlled_register_swap(n);
    const int total = 1 + 2 * n;
    ComplexMatrix product = ComplexMatrix::Identity(Eigen::Index{1} << total, Eigen::Index{1} << total);
    for (const auto &g : crs.gates) {
        const int qubits[] = {g.control, g.a, g.b};
        product = embed_operator(fredkin_matrix(), qubits, total) * product;
    }
    return max_abs(product - crs.op);
}

double adjoint_duality(Rng &rng) {
    static constexpr NoiseKind kKinds[] = {NoiseKind::DepolarizingLocal,
                                           NoiseKind::DepolarizingGlobal, NoiseKind::Dephasing,
                                           NoiseKind::AmplitudeDamping};
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_real_distribution<double> strength(0.0, 1.0);
    std::uniform_int_distribution<int> width(1, 2);
    const int n = width(rng);
    const KrausChannel ch = noise_channel(NoiseModel{kKinds[kind(rng)], strength(rng)}, n);
    const Eigen::Index d = Eigen::Index{1} << n;
    const ComplexMatrix a = random_ginibre(rng, d, d);
    const ComplexMatrix b = random_ginibre(rng, d, d);
    const KrausChannel adj = adjoint_channel(ch);
    return std::abs(trace_product(a, ch(b)) - trace_product(adj(a), b));
}

double circuit_pipeline(Rng &rng) {
    std::uniform_int_distribution<int> copies(1, 2);
    std::uniform_real_distribution<double> strength(0.0, 0.2);
    const int m = copies(rng);
    const GateCircuit circ = random_circuit(rng, 1, 4);
    const NoiseModel noise{NoiseKind::DepolarizingLocal, strength(rng)};
    const PauliObservable obs = PauliObservable::single(random_pauli_string(rng, 1));
    const EstimateReport pipeline = circuit_level_combined(circ, noise, obs, m);
    const DensityOperator rho = prepare_noisy_state(circ, noise);
    const DensityOperator dual = dual_state(circ, noise);
    return std::abs(pipeline.ratio - combined_estimate(rho, dual, obs, m).ratio);
}

EstimateReport run_setup(const SchemeSetup &setup, const ExperimentConfig &cfg, bool exact) {
    if (exact) {
        return scheme_exact_estimate(setup);
    }
    ShotConfig shots;
    shots.shots = *cfg.shots;
    shots.seed = cfg.seed;
    shots.trials = cfg.trials;
    shots.workers = cfg.workers;
    return scheme_shot_experiment(setup, shots);
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw ConfigError(0, "output", "cannot write '" + path + "'");
    }
    file << text;
}

template <typename Fn>
int guarded(Fn &&fn) {
    try {
        return fn();
    } catch (const ConfigError &e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const ParseError &e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailure;
    }
}

} // namespace

std::vector<IdentityCheck> run_identity_checks(std::uint64_t seed) {
    const std::vector<std::pair<std::string, Check>> checks = {
        {"multi-copy trace Tr(C O1 rho^M) = Tr(O rho^M)", multicopy_trace},
        {"cyclic permutation = product of adjacent swaps", cyclic_as_swaps},
        {"combined composite form = reduced form", combined_forms},
        {"symmetric product measurement", symmetric_measure},
        {"antisymmetric product measurement", antisymmetric_measure},
        {"product measurement = Tr(S G rho)", product_measure},
        {"hadamard test = Tr(S U rho)", hadamard_reconstruction},
        {"controlled register swap = qubit-level swaps", register_swap_gates},
        {"adjoint channel duality", adjoint_duality},
        {"circuit-level combined = operator-level", circuit_pipeline},
    };
    std::vector<IdentityCheck> out;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        Rng rng(split_seed(seed, k));
        IdentityCheck row{checks[k].first, kInstances, 0.0};
        for (int i = 0; i < kInstances; ++i) {
            const double r = checks[k].second(rng);
            row.max_residual = std::isnan(r) ? std::numeric_limits<double>::infinity()
                                             : std::max(row.max_residual, r);
        }
        out.push_back(row);
    }
    return out;
}

int cmd_verify(double tolerance, std::uint64_t seed, std::ostream &out) {
    return guarded([&] {
        const auto rows = run_identity_checks(seed);
        bool all = true;
        char line[256];
        for (const auto &row : rows) {
            const bool pass = row.max_residual <= tolerance;
            all = all && pass;
            std::snprintf(line, sizeof line, "%-48s n=%-3d max_residual=%.3e  %s\n",
                          row.name.c_str(), row.instances, row.max_residual,
                          pass ? "PASS" : "FAIL");
            out << line;
        }
        std::snprintf(line, sizeof line, "%s (tolerance %.3e, seed %llu)\n",
                      all ? "all identities hold" : "identity check FAILED", tolerance,
                      static_cast<unsigned long long>(seed));
        out << line;
        return all ? kExitSuccess : kExitCheckFailure;
    });
}

EstimateReport execute_experiment(const ExperimentConfig &cfg, bool force_exact) {
    const SchemeSetup setup = make_setup(cfg);
    return run_setup(setup, cfg, force_exact || !cfg.shots);
}

std::string run_report_json(const ExperimentConfig &cfg, const EstimateReport &r, bool exact,
                            double wall_time_seconds) {
    Json report;
    report["numerator_mean"] = r.numerator_mean;
    report["denominator_mean"] = r.denominator_mean;
    report["ratio"] = r.ratio;
    report["numerator_stderr"] = r.numerator_stderr;
    report["denominator_stderr"] = r.denominator_stderr;
    report["ratio_stderr"] = r.ratio_stderr;
    report["shots_used"] = r.shots_used;
    report["exact_ratio"] = optional_json(r.exact_ratio);
    report["ideal"] = optional_json(r.ideal);
    report["bias"] = optional_json(r.bias());
    report["numerator_imag"] = r.numerator_imag;
    report["form_residual"] = optional_json(r.form_residual);
    report["trial_ratio_variance"] = r.trial_ratio_variance;
    report["trials"] = r.trials;

    Json j;
    j["config"] = config_json(cfg);
    j["mode"] = exact ? "exact" : "shots";
    j["report"] = report;
    j["resource"] = resource_json(r.resource);
    j["wall_time_seconds"] = wall_time_seconds;
    return j.dump(2) + "\n";
}

int cmd_run(const ExperimentConfig &cfg, bool force_exact, std::ostream &out) {
    return guarded([&] {
        const auto start = std::chrono::steady_clock::now();
        const bool exact = force_exact || !cfg.shots;
        const EstimateReport r = execute_experiment(cfg, force_exact);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_output(cfg.output, run_report_json(cfg, r, exact, wall), out);
        return kExitSuccess;
    });
}

std::string sweep_csv(const ExperimentConfig &cfg, const std::string &parameter,
                      const std::vector<std::string> &values, bool force_exact) {
    if (parameter != "noise.strength" && parameter != "M") {
        throw ConfigError(0, parameter, "sweep parameter must be 'noise.strength' or 'M'");
    }
    if (values.empty()) {
        throw ConfigError(0, parameter, "no sweep values given");
    }
    const SchemeSetup base = make_setup(cfg);
    const bool exact = force_exact || !cfg.shots;

    std::ostringstream os;
    os << "parameter,value,exact_ratio,ideal,bias,abs_bias,ratio,ratio_stderr,shots_used,"
          "degree,registers,control_register_swaps,qubit_level_control_swaps,ancillas\r\n";
    for (const std::string &value : values) {
        // re-parse so each value is validated exactly like a config entry
        std::string replaced;
        std::istringstream lines(serialize_config(cfg));
        std::string line;
        while (std::getline(lines, line)) {
            if (line.rfind(parameter + " = ", 0) == 0) {
                line = parameter + " = " + value;
            }
            replaced += line + "\n";
        }
        const ExperimentConfig point = parse_config(replaced, cfg.base_dir);
        SchemeSetup setup = base;
        setup.noise = point.noise;
        setup.copies = point.copies;

        const EstimateReport exact_report = scheme_exact_estimate(setup);
        const EstimateReport r = exact ? exact_report : run_setup(setup, point, false);
        const double bias = exact_report.ratio - exact_report.ideal.value_or(0.0);
        os << parameter << ',' << value << ',' << format_real(exact_report.ratio) << ','
           << format_real(exact_report.ideal.value_or(0.0)) << ',' << format_real(bias) << ','
           << format_real(std::abs(bias)) << ',' << format_real(r.ratio) << ','
           << format_real(r.ratio_stderr) << ',' << r.shots_used << ','
           << r.resource.degree << ',' << r.resource.registers << ','
           << r.resource.control_register_swaps << ','
           << r.resource.qubit_level_control_swaps << ',' << r.resource.ancillas << "\r\n";
    }
    return os.str();
}

int cmd_sweep(const ExperimentConfig &cfg, const std::string &parameter,
              const std::vector<std::string> &values, bool force_exact, std::ostream &out) {
    return guarded([&] {
        write_output(cfg.output, sweep_csv(cfg, parameter, values, force_exact), out);
        return kExitSuccess;
    });
}

std::string resources_csv(int n_qubits, int max_degree) {
    if (n_qubits < 1) {
        throw ConfigError(0, "qubits", "register width must be at least 1");
    }
    if (max_degree < 1) {
        throw ConfigError(0, "max-degree", "max degree must be at least 1");
    }
    std::ostringstream os;
    os << "scheme,degree,registers,total_qubits,control_register_swaps,"
          "qubit_level_control_swaps,depth_factor,ancillas\r\n";
    for (SchemeKind kind : all_scheme_kinds()) {
        for (int degree = 1; degree <= max_degree; ++degree) {
            ResourceProfile r;
            try {
                r = resource_profile(kind, degree, n_qubits);
            } catch (const PreconditionError &) {
                continue;
            }
            os << to_string(kind) << ',' << r.degree << ',' << r.registers << ','
               << r.registers * n_qubits + r.ancillas << ',' << r.control_register_swaps << ','
               << r.qubit_level_control_swaps << ',' << r.depth_factor << ',' << r.ancillas
               << "\r\n";
        }
    }
    return os.str();
}

int cmd_resources(int n_qubits, int max_degree, std::ostream &out) {
    return guarded([&] {
        out << resources_csv(n_qubits, max_degree);
        return kExitSuccess;
    });
}

} // namespace purify::cli
