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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "purify/channels.hpp"
#include "purify/resources.hpp"
#include "purify/schemes.hpp"

namespace purify::cli {

/// Invalid configuration. Carries the config line (0 when unknown) and the
/// offending field name.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::size_t line, std::string field, const std::string &what);

    std::size_t line() const noexcept { return line_; }
    const std::string &field() const noexcept { return field_; }

  private:
    std::size_t line_;
    std::string field_;
};

/// One experiment, read from `key = value` text:
///
///   scheme = combined
///   circuit = bell.circ          # relative to the config file
///   noise.kind = depolarizing-global
///   noise.strength = 0.1
///   machinery_noise.kind = ...   # optional, likewise inverse_noise.*
///   observable = 0.5*ZI + 0.5*IZ
///   M = 2
///   shots = 100000               # or "exact"
///   seed = 7
///   trials = 1
///   workers = 1
///   output = report.json
struct ExperimentConfig {
    SchemeKind scheme = SchemeKind::Raw;
    std::string circuit;
    NoiseModel noise;
    std::optional<NoiseModel> machinery_noise;
    std::optional<NoiseModel> inverse_noise;
    /// Canonical observable text (as printed by PauliObservable::to_string).
    std::string observable;
    int copies = 1;
    /// Empty means exact (infinite-shot) evaluation.
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    unsigned workers = 1;
    std::string output;
    /// Directory relative paths are resolved against. Not serialized.
    std::filesystem::path base_dir;

    bool operator==(const ExperimentConfig &other) const;
};

/// Parses config text. `scheme`, `circuit` and `observable` are required.
/// Throws ConfigError on unknown or duplicate keys, bad values and
/// scheme/M mismatches.
ExperimentConfig parse_config(std::string_view text,
                              const std::filesystem::path &base_dir = {});
ExperimentConfig read_config_file(const std::filesystem::path &path);

/// Text form accepted by parse_config; parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig &cfg);

std::filesystem::path resolve_path(const ExperimentConfig &cfg, const std::string &path);

/// Loads the circuit and checks the observable width against it.
/// Throws ConfigError naming the field at fault.
SchemeSetup make_setup(const ExperimentConfig &cfg);

} // namespace purify::cli
