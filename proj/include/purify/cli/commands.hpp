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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "purify/cli/config.hpp"
#include "purify/report.hpp"

namespace purify::cli {

/// Exit codes shared by every command.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitConfigError = 2;

struct IdentityCheck {
    std::string name;
    int instances = 0;
    double max_residual = 0.0;
};

/// Evaluates every algebraic identity of the library on random small
/// instances drawn from `seed`. Deterministic in the seed.
std::vector<IdentityCheck> run_identity_checks(std::uint64_t seed);

/// Prints one line per identity with its max residual and verdict.
/// Returns kExitSuccess iff every residual is <= tolerance.
int cmd_verify(double tolerance, std::uint64_t seed, std::ostream &out);

/// Runs the configured experiment: exact evaluation when cfg.shots is empty
/// or `force_exact` is set, finite-shot sampling otherwise.
EstimateReport execute_experiment(const ExperimentConfig &cfg, bool force_exact);

/// Single JSON object with "config", "mode", "report", "resource" and
/// "wall_time_seconds" members. Every member except the wall time depends
/// only on the config.
std::string run_report_json(const ExperimentConfig &cfg, const EstimateReport &report,
                            bool exact, double wall_time_seconds);

/// Executes and writes the JSON report to cfg.output (stdout when empty).
int cmd_run(const ExperimentConfig &cfg, bool force_exact, std::ostream &out);

/// CSV with a header row and one row per value of `parameter`
/// ("noise.strength" or "M"). Columns:
///   parameter, value, exact_ratio, ideal, bias, abs_bias, ratio,
///   ratio_stderr, shots_used, degree, registers, control_register_swaps,
///   qubit_level_control_swaps, ancillas
/// Throws ConfigError for unknown parameters or out-of-domain values.
std::string sweep_csv(const ExperimentConfig &cfg, const std::string &parameter,
                      const std::vector<std::string> &values, bool force_exact);

int cmd_sweep(const ExperimentConfig &cfg, const std::string &parameter,
              const std::vector<std::string> &values, bool force_exact, std::ostream &out);

/// CSV of resource profiles for every scheme and achievable degree up to
/// max_degree on n-qubit registers. Columns:
///   scheme, degree, registers, total_qubits, control_register_swaps,
///   qubit_level_control_swaps, depth_factor, ancillas
std::string resources_csv(int n_qubits, int max_degree);

int cmd_resources(int n_qubits, int max_degree, std::ostream &out);

} // namespace purify::cli
