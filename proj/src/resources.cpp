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

#include "purify/resources.hpp"

#include "purify/errors.hpp"

namespace purify {

std::string to_string(SchemeKind kind) {
    switch (kind) {
    case SchemeKind::Raw:
        return "raw";
    case SchemeKind::MultiCopy:
        return "multi-copy";
    case SchemeKind::MultiCopyRecycled:
        return "multi-copy-recycled";
    case SchemeKind::StateVerification:
        return "state-verification";
    case SchemeKind::Combined:
        return "combined";
    }
    return "raw";
}

std::vector<SchemeKind> all_scheme_kinds() {
    return {SchemeKind::Raw, SchemeKind::MultiCopy, SchemeKind::MultiCopyRecycled,
            SchemeKind::StateVerification, SchemeKind::Combined};
}

SchemeKind parse_scheme_kind(std::string_view text) {
    for (SchemeKind k : all_scheme_kinds()) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw PreconditionError("unknown scheme '" + std::string(text) + "'");
}

ResourceProfile resource_profile(SchemeKind kind, int degree, int n_qubits) {
    if (n_qubits < 1) {
        throw PreconditionError("registers need at least one qubit");
    }
    auto reject = [&](const char *why) {
        throw PreconditionError(to_string(kind) + " cannot reach degree " +
                                std::to_string(degree) + ": " + why);
    };
    ResourceProfile r;
    r.degree = degree;
    switch (kind) {
    case SchemeKind::Raw:
        if (degree != 1) {
            reject("raw measurement is degree 1");
        }
        break;
    case SchemeKind::MultiCopy:
        if (degree < 2) {
            reject("needs at least 2 copies");
        }
        r.registers = degree;
        r.control_register_swaps = degree - 1;
        r.ancillas = 1;
        break;
    case SchemeKind::MultiCopyRecycled:
        if (degree < 2) {
            reject("needs at least 2 copies");
        }
        r.registers = 2;
        r.control_register_swaps = degree - 1;
        r.depth_factor = degree - 1;
        r.ancillas = 1;
        break;
    case SchemeKind::StateVerification:
        if (degree != 2) {
            reject("state verification is degree 2");
        }
        r.depth_factor = 2;
        r.ancillas = 1;
        break;
    case SchemeKind::Combined:
        if (degree < 2 || degree % 2 != 0) {
            reject("needs an even degree of at least 2");
        }
        r.registers = degree / 2;
        r.control_register_swaps = degree / 2 - 1;
        r.depth_factor = 2;
        r.ancillas = 1;
        break;
    }
    r.qubit_level_control_swaps = r.control_register_swaps * n_qubits;
    return r;
}

int scheme_degree(SchemeKind kind, int copies) {
    switch (kind) {
    case SchemeKind::Raw:
    case SchemeKind::StateVerification:
        if (copies != 1) {
            throw PreconditionError(to_string(kind) + " uses a single copy (M = 1)");
        }
        return kind == SchemeKind::Raw ? 1 : 2;
    case SchemeKind::MultiCopy:
    case SchemeKind::MultiCopyRecycled:
        if (copies < 2) {
            throw PreconditionError(to_string(kind) + " needs M >= 2 copies");
        }
        return copies;
    case SchemeKind::Combined:
        if (copies < 1) {
            throw PreconditionError("combined needs M >= 1 copies");
        }
        return 2 * copies;
    }
    return 1;
}

} // namespace purify
