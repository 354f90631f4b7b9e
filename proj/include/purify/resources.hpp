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

#include <string>
#include <string_view>
#include <vector>

namespace purify {

enum class SchemeKind {
    Raw,
    MultiCopy,
    MultiCopyRecycled,
    StateVerification,
    Combined,
};

std::string to_string(SchemeKind kind);
/// "raw", "multi-copy", "multi-copy-recycled", "state-verification", "combined".
SchemeKind parse_scheme_kind(std::string_view text);
std::vector<SchemeKind> all_scheme_kinds();

/// Extra hardware a scheme needs on top of one run of the base circuit.
struct ResourceProfile {
    int degree = 1;
    int registers = 1;
    int control_register_swaps = 0;
    /// One qubit-level controlled swap per qubit pair of each register swap.
    int qubit_level_control_swaps = 0;
    /// Circuit depth relative to the state-preparation circuit.
    int depth_factor = 1;
    int ancillas = 0;

    bool operator==(const ResourceProfile &) const = default;
};

/// Resource counts for purification degree `degree` on n-qubit registers.
///
///   raw                  degree 1      1 register, no swaps, no ancilla
///   multi-copy           degree D>=2   D registers, D-1 swaps, 1 ancilla
///   multi-copy-recycled  degree D>=2   2 registers, D-1 swaps, depth D-1
///   state-verification   degree 2      1 register, no swaps, depth 2
///   combined             degree 2M     M registers, M-1 swaps, depth 2
///
/// Throws PreconditionError when the degree is not achievable by the scheme.
ResourceProfile resource_profile(SchemeKind kind, int degree, int n_qubits);

/// Purification degree a scheme reaches with `copies` registers of the state
/// (copies counts the distinct noisy preparations entering the estimator).
int scheme_degree(SchemeKind kind, int copies);

} // namespace purify
