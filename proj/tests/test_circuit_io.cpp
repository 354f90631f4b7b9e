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

#include <numbers>

#include "gtest/gtest.h"

#include "purify/channels.hpp"
#include "purify/errors.hpp"

using namespace purify;

namespace {

ParseError parse_failure(const std::string &text) {
    try {
        parse_circuit(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError for:\n" << text;
    return ParseError(0, "", "");
}

} // namespace

TEST(circuit_io, parses_records_comments_and_angles) {
    const GateCircuit circ = parse_circuit(R"(
        # preparation
        qubits 3
        H 0
        rz pi/4 1      # lower-case names are accepted
        RX -0.5*pi 2
        RY 0.25 0
        CX 0 2
        SWAP 1 2
    )");
    ASSERT_EQ(circ.n_qubits(), 3);
    ASSERT_EQ(circ.gates().size(), 6u);
    EXPECT_EQ(circ.gates()[0], (Gate{GateKind::H, {0}, 0.0}));
    EXPECT_EQ(circ.gates()[1].kind, GateKind::RZ);
    EXPECT_DOUBLE_EQ(circ.gates()[1].angle, std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(circ.gates()[2].angle, -std::numbers::pi / 2);
    EXPECT_DOUBLE_EQ(circ.gates()[3].angle, 0.25);
    EXPECT_EQ(circ.gates()[4], (Gate{GateKind::CNOT, {0, 2}, 0.0}));
    EXPECT_EQ(circ.gates()[5], (Gate{GateKind::SWAP, {1, 2}, 0.0}));
}

TEST(circuit_io, width_inferred_without_qubits_record) {
    const GateCircuit circ = parse_circuit("H 0\nCNOT 0 3\n");
    EXPECT_EQ(circ.n_qubits(), 4);
}

TEST(circuit_io, format_round_trip) {
    GateCircuit circ(2);
    circ.add({GateKind::RY, {1}, 0.1 + 0.2}).add({GateKind::CZ, {1, 0}}).add({GateKind::T, {0}});
    EXPECT_EQ(parse_circuit(format_circuit(circ)), circ);
}

TEST(circuit_io, diagnostics_carry_line_and_token) {
    ParseError e = parse_failure("qubits 2\nH 0\nFOO 1\n");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.token(), "FOO");

    e = parse_failure("RZ nope 0\n");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.token(), "nope");

    e = parse_failure("qubits 2\nH x\n");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.token(), "x");

    e = parse_failure("qubits 2\nCNOT 0 0\n");
    EXPECT_EQ(e.line(), 2u);

    e = parse_failure("qubits 1\nH 4\n");
    EXPECT_EQ(e.line(), 2u);

    e = parse_failure("CNOT 0\n");
    EXPECT_EQ(e.line(), 1u);

    e = parse_failure("qubits 2\nqubits 3\n");
    EXPECT_EQ(e.line(), 2u);
}

TEST(circuit_io, reads_sample_file) {
    const GateCircuit circ = read_circuit_file(PURIFY_TEST_DATA_DIR "/bell.circ");
    EXPECT_EQ(circ.n_qubits(), 2);
    EXPECT_EQ(circ.gates().size(), 2u);
    EXPECT_THROW(read_circuit_file(PURIFY_TEST_DATA_DIR "/missing.circ"), ParseError);
}
