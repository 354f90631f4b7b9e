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

// Command-line front end: verify, run, sweep, resources.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "purify/cli/commands.hpp"
#include "purify/cli/config.hpp"

namespace {

using purify::cli::ConfigError;
using purify::cli::ExperimentConfig;

std::optional<ExperimentConfig> load(const std::string &path,
                                     const std::optional<std::uint64_t> &seed,
                                     const std::optional<std::string> &output) {
    try {
        ExperimentConfig cfg = purify::cli::read_config_file(path);
        if (seed) {
            cfg.seed = *seed;
        }
        if (output) {
            cfg.output = *output;
        }
        return cfg;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return std::nullopt;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Purification-based error mitigation simulator"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    std::optional<std::string> output;
    app.add_option("--seed", seed, "Master seed (overrides the config)");
    app.add_option("--output", output, "Output path (overrides the config)");

    double tolerance = 1e-10;
    auto *verify = app.add_subcommand("verify", "Check every identity on random instances");
    verify->add_option("--tolerance", tolerance, "Maximum allowed residual");
    verify->fallthrough();

    std::string config_path;
    bool exact = false;
    auto *run = app.add_subcommand("run", "Run one configured experiment, print a JSON report");
    run->add_option("--config", config_path, "Experiment config file")->required();
    run->add_flag("--exact", exact, "Infinite-shot evaluation");
    run->fallthrough();

    std::string parameter;
    std::vector<std::string> values;
    auto *sweep = app.add_subcommand("sweep", "Sweep noise.strength or M, print CSV");
    sweep->add_option("--config", config_path, "Experiment config file")->required();
    sweep->add_option("--parameter", parameter, "noise.strength or M")->required();
    sweep->add_option("--values", values, "Parameter values")->required()->delimiter(',');
    sweep->add_flag("--exact", exact, "Infinite-shot evaluation");
    sweep->fallthrough();

    int qubits = 1;
    int max_degree = 4;
    auto *resources = app.add_subcommand("resources", "Resource table for every scheme");
    resources->add_option("--qubits", qubits, "Qubits per register");
    resources->add_option("--max-degree", max_degree, "Largest purification degree");
    resources->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : purify::cli::kExitConfigError;
    }

    if (*verify) {
        return purify::cli::cmd_verify(tolerance, seed.value_or(1), std::cout);
    }
    if (*resources) {
        return purify::cli::cmd_resources(qubits, max_degree, std::cout);
    }
    const auto cfg = load(config_path, seed, output);
    if (!cfg) {
        return purify::cli::kExitConfigError;
    }
    if (*run) {
        return purify::cli::cmd_run(*cfg, exact, std::cout);
    }
    return purify::cli::cmd_sweep(*cfg, parameter, values, exact, std::cout);
}
