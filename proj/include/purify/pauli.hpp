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

#include "purify/tensor.hpp"

namespace purify {

/// Single-qubit Pauli matrices I, X, Y, Z by letter.
ComplexMatrix pauli_matrix(char letter);

/// One tensor product of Pauli letters, e.g. "XZI". Letter 0 acts on qubit 0,
/// the most significant qubit.
struct PauliTerm {
    double coefficient = 1.0;
    std::string paulis;
};

/// Real-weighted sum of Pauli strings on a fixed register width.
///
/// Text form: terms joined by '+' or '-', each an optional coefficient
/// followed by '*' and a string over IXYZ, e.g. "0.5*ZI + 0.5*IZ" or "-XX".
class PauliObservable {
  public:
    PauliObservable() = default;
    explicit PauliObservable(std::vector<PauliTerm> terms);

    /// Unit-coefficient single string.
    static PauliObservable single(std::string_view paulis);

    /// Parses the text form. Throws ParseError naming the offending token.
    static PauliObservable parse(std::string_view text);

    const std::vector<PauliTerm> &terms() const noexcept { return terms_; }
    int n_qubits() const noexcept { return n_qubits_; }

    ComplexMatrix matrix() const;

    /// Exactly one term with coefficient +-1, hence Hermitian and G^2 = I.
    bool is_single_string() const;

    std::string to_string() const;

  private:
    std::vector<PauliTerm> terms_;
    int n_qubits_ = 0;
};

/// Matrix of a bare Pauli string (no coefficient).
ComplexMatrix pauli_string_matrix(std::string_view paulis);

} // namespace purify
