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

#include "purify/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "purify/errors.hpp"
#include "purify/pauli.hpp"

namespace purify::cli {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::uint64_t parse_u64(const std::string &value, std::size_t line, const std::string &field) {
    std::uint64_t out = 0;
    const char *end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (value.empty() || ec != std::errc() || ptr != end) {
        throw ConfigError(line, field, "expected a non-negative integer, got '" + value + "'");
    }
    return out;
}

double parse_real(const std::string &value, std::size_t line, const std::string &field) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (value.empty() || used != value.size()) {
        throw ConfigError(line, field, "expected a real number, got '" + value + "'");
    }
    return out;
}

std::string format_real(double x) {
    std::ostringstream os;
    os.precision(std::numeric_limits<double>::max_digits10);
    os << x;
    return os.str();
}

struct NoiseFields {
    std::optional<NoiseKind> kind;
    std::optional<double> strength;
    std::size_t line = 0;

    bool present() const { return kind || strength; }

    NoiseModel build(const std::string &prefix) const {
        try {
            return NoiseModel{kind.value_or(NoiseKind::None), strength.value_or(0.0)};
        } catch (const std::exception &e) {
            throw ConfigError(line, prefix + ".strength", e.what());
        }
    }
};

} // namespace

ConfigError::ConfigError(std::size_t line, std::string field, const std::string &what)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         "field '" + field + "': " + what),
      line_(line), field_(std::move(field)) {}

bool ExperimentConfig::operator==(const ExperimentConfig &o) const {
    return scheme == o.scheme && circuit == o.circuit && noise == o.noise &&
           machinery_noise == o.machinery_noise && inverse_noise == o.inverse_noise &&
           observable == o.observable && copies == o.copies && shots == o.shots &&
           seed == o.seed && trials == o.trials && workers == o.workers && output == o.output;
}

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path &base_dir) {
    ExperimentConfig cfg;
    cfg.base_dir = base_dir;
    std::map<std::string, std::size_t> seen;
    std::map<std::string, NoiseFields> noise;
    std::size_t line_no = 0;
    std::size_t scheme_line = 0;
    std::size_t copies_line = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(std::string_view(raw).substr(0, hash));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(line_no, line, "expected 'key = value'");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (!seen.emplace(key, line_no).second) {
            throw ConfigError(line_no, key, "duplicate key");
        }

        const auto dot = key.find('.');
        if (dot != std::string::npos) {
            const std::string group = key.substr(0, dot);
            const std::string member = key.substr(dot + 1);
            if (group != "noise" && group != "machinery_noise" && group != "inverse_noise") {
                throw ConfigError(line_no, key, "unknown key");
            }
            NoiseFields &nf = noise[group];
            nf.line = line_no;
            if (member == "kind") {
                try {
                    nf.kind = parse_noise_kind(value);
                } catch (const std::exception &e) {
                    throw ConfigError(line_no, key, e.what());
                }
            } else if (member == "strength") {
                nf.strength = parse_real(value, line_no, key);
            } else {
                throw ConfigError(line_no, key, "unknown key");
            }
            continue;
        }

        if (key == "scheme") {
            try {
                cfg.scheme = parse_scheme_kind(value);
            } catch (const std::exception &e) {
                throw ConfigError(line_no, key, e.what());
            }
            scheme_line = line_no;
        } else if (key == "circuit") {
            if (value.empty()) {
                throw ConfigError(line_no, key, "empty path");
            }
            cfg.circuit = value;
        } else if (key == "observable") {
            try {
                cfg.observable = PauliObservable::parse(value).to_string();
            } catch (const std::exception &e) {
                throw ConfigError(line_no, key, e.what());
            }
        } else if (key == "M") {
            const std::uint64_t m = parse_u64(value, line_no, key);
            if (m < 1 || m > 64) {
                throw ConfigError(line_no, key, "M must be in [1, 64]");
            }
            cfg.copies = static_cast<int>(m);
            copies_line = line_no;
        } else if (key == "shots") {
            if (value == "exact") {
                cfg.shots.reset();
            } else {
                const std::uint64_t s = parse_u64(value, line_no, key);
                if (s < 1) {
                    throw ConfigError(line_no, key, "shots must be at least 1");
                }
                cfg.shots = s;
            }
        } else if (key == "seed") {
            cfg.seed = parse_u64(value, line_no, key);
        } else if (key == "trials") {
            cfg.trials = parse_u64(value, line_no, key);
            if (cfg.trials < 1) {
                throw ConfigError(line_no, key, "trials must be at least 1");
            }
        } else if (key == "workers") {
            const std::uint64_t w = parse_u64(value, line_no, key);
            if (w < 1 || w > 1024) {
                throw ConfigError(line_no, key, "workers must be in [1, 1024]");
            }
            cfg.workers = static_cast<unsigned>(w);
        } else if (key == "output") {
            cfg.output = value;
        } else {
            throw ConfigError(line_no, key, "unknown key");
        }
    }

    for (const char *required : {"scheme", "circuit", "observable"}) {
        if (!seen.count(required)) {
            throw ConfigError(0, required, "missing required key");
        }
    }
    if (noise.count("noise")) {
        cfg.noise = noise["noise"].build("noise");
    }
    if (noise.count("machinery_noise")) {
        cfg.machinery_noise = noise["machinery_noise"].build("machinery_noise");
    }
    if (noise.count("inverse_noise")) {
        cfg.inverse_noise = noise["inverse_noise"].build("inverse_noise");
    }
    try {
        scheme_degree(cfg.scheme, cfg.copies);
    } catch (const std::exception &e) {
        throw ConfigError(copies_line ? copies_line : scheme_line, "M", e.what());
    }
    return cfg;
}

ExperimentConfig read_config_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(0, "config", "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.parent_path());
}

std::string serialize_config(const ExperimentConfig &cfg) {
    std::ostringstream os;
    os << "scheme = " << to_string(cfg.scheme) << "\n";
    os << "circuit = " << cfg.circuit << "\n";
    auto noise = [&](const char *prefix, const NoiseModel &n) {
        os << prefix << ".kind = " << to_string(n.kind) << "\n";
        os << prefix << ".strength = " << format_real(n.strength) << "\n";
    };
    noise("noise", cfg.noise);
    if (cfg.machinery_noise) {
        noise("machinery_noise", *cfg.machinery_noise);
    }
    if (cfg.inverse_noise) {
        noise("inverse_noise", *cfg.inverse_noise);
    }
    os << "observable = " << cfg.observable << "\n";
    os << "M = " << cfg.copies << "\n";
    os << "shots = " << (cfg.shots ? std::to_string(*cfg.shots) : std::string("exact")) << "\n";
    os << "seed = " << cfg.seed << "\n";
    os << "trials = " << cfg.trials << "\n";
    os << "workers = " << cfg.workers << "\n";
    if (!cfg.output.empty()) {
        os << "output = " << cfg.output << "\n";
    }
    return os.str();
}

std::filesystem::path resolve_path(const ExperimentConfig &cfg, const std::string &path) {
    const std::filesystem::path p(path);
    if (p.is_absolute() || cfg.base_dir.empty()) {
        return p;
    }
    return cfg.base_dir / p;
}

SchemeSetup make_setup(const ExperimentConfig &cfg) {
    SchemeSetup setup;
    setup.kind = cfg.scheme;
    try {
        setup.circuit = read_circuit_file(resolve_path(cfg, cfg.circuit).string());
    } catch (const std::exception &e) {
        throw ConfigError(0, "circuit", e.what());
    }
    setup.noise = cfg.noise;
    setup.machinery_noise = cfg.machinery_noise;
    setup.inverse_noise = cfg.inverse_noise;
    setup.observable = PauliObservable::parse(cfg.observable);
    if (setup.observable.n_qubits() != setup.circuit.n_qubits()) {
        throw ConfigError(0, "observable",
                          "observable acts on " + std::to_string(setup.observable.n_qubits()) +
                              " qubits but the circuit has " +
                              std::to_string(setup.circuit.n_qubits()));
    }
    setup.copies = cfg.copies;
    return setup;
}

} // namespace purify::cli
