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

// Circuit text format, one record per line:
//
//   # comment
//   qubits 2
//   H 0
//   RZ pi/4 1
//   CNOT 0 1
//
// A gate record is NAME [ANGLE] QUBIT...; ANGLE is present exactly for
// RX/RY/RZ and may be a real number or a multiple of pi ("pi/2", "-0.5*pi").
// Without a "qubits" record the width is one past the largest index used.

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "purify/channels.hpp"
#include "purify/errors.hpp"

namespace purify {

namespace {

bool parse_real(const std::string &text, double &out) {
    if (text.empty()) {
        return false;
    }
    std::size_t used = 0;
    try {
        out = std::stod(text, &used);
    } catch (const std::exception &) {
        return false;
    }
    return used == text.size() && std::isfinite(out);
}

std::optional<double> parse_angle(std::string text) {
    double value = 0.0;
    if (parse_real(text, value)) {
        return value;
    }
    double sign = 1.0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        sign = text[0] == '-' ? -1.0 : 1.0;
        text.erase(0, 1);
    }
    const auto pi_at = text.find("pi");
    if (pi_at == std::string::npos) {
        return std::nullopt;
    }
    double factor = 1.0;
    if (pi_at > 0) {
        // "a*pi"
        if (text[pi_at - 1] != '*' || !parse_real(text.substr(0, pi_at - 1), factor)) {
            return std::nullopt;
        }
    }
    double divisor = 1.0;
    const std::string rest = text.substr(pi_at + 2);
    if (!rest.empty()) {
        if (rest[0] != '/' || !parse_real(rest.substr(1), divisor) || divisor == 0.0) {
            return std::nullopt;
        }
    }
    return sign * factor * std::numbers::pi / divisor;
}

bool parse_index(const std::string &text, int &out) {
    if (text.empty() || text.size() > 6) {
        return false;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    out = std::stoi(text);
    return true;
}

} // namespace

GateCircuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<int> declared;
    std::vector<std::pair<std::size_t, Gate>> gates;
    int max_index = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0] == "qubits") {
            int n = 0;
            if (tokens.size() != 2 || !parse_index(tokens[1], n) || n < 1) {
                throw ParseError(line_no, tokens.size() > 1 ? tokens[1] : tokens[0],
                                 "expected 'qubits N' with N >= 1");
            }
            if (declared) {
                throw ParseError(line_no, tokens[0], "duplicate qubits record");
            }
            declared = n;
            continue;
        }
        const auto kind = parse_gate_kind(tokens[0]);
        if (!kind) {
            throw ParseError(line_no, tokens[0], "unknown gate");
        }
        Gate gate{*kind, {}, 0.0};
        std::size_t next = 1;
        if (gate_has_angle(*kind)) {
            if (tokens.size() < 2) {
                throw ParseError(line_no, tokens[0], "rotation is missing its angle");
            }
            const auto angle = parse_angle(tokens[1]);
            if (!angle) {
                throw ParseError(line_no, tokens[1], "invalid angle");
            }
            gate.angle = *angle;
            next = 2;
        }
        const std::size_t arity = static_cast<std::size_t>(gate_arity(*kind));
        if (tokens.size() - next != arity) {
            throw ParseError(line_no, tokens[0],
                             "expected " + std::to_string(arity) + " qubit index(es)");
        }
        for (std::size_t t = next; t < tokens.size(); ++t) {
            int q = 0;
            if (!parse_index(tokens[t], q)) {
                throw ParseError(line_no, tokens[t], "invalid qubit index");
            }
            max_index = std::max(max_index, q);
            gate.qubits.push_back(q);
        }
        gates.emplace_back(line_no, std::move(gate));
    }

    const int n_qubits = declared.value_or(std::max(1, max_index + 1));
    GateCircuit circ(n_qubits);
    for (auto &[no, gate] : gates) {
        try {
            circ.add(gate);
        } catch (const DimensionError &e) {
            throw ParseError(no, to_string(gate.kind), e.what());
        }
    }
    return circ;
}

GateCircuit read_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, path, "cannot open circuit file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit(buffer.str());
}

std::string format_circuit(const GateCircuit &circ) {
    std::ostringstream os;
    os.precision(17);
    os << "qubits " << circ.n_qubits() << "\n";
    for (const auto &g : circ.gates()) {
        os << to_string(g.kind);
        if (gate_has_angle(g.kind)) {
            os << " " << g.angle;
        }
        for (int q : g.qubits) {
            os << " " << q;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace purify
