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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace purify {

/// Operand shapes do not line up (matrix sizes, qubit indices, register widths).
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Composite space would exceed the dense-simulation cap.
class DimensionCapError : public DimensionError {
  public:
    using DimensionError::DimensionError;
};

/// Input violates a mathematical precondition (non-Hermitian, non-unitary,
/// not an involution, not normalized, ...). Signals a caller bug.
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The dominant eigenvalue is not separated from the rest of the spectrum,
/// so there is no well-defined purification target.
class DegenerateSpectrumError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A normalisation factor (Tr(rho^M), Tr(rho_bar rho), ...) is too small to divide by.
class VanishingNormError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Sampled denominator is statistically indistinguishable from zero.
class UnstableDenominatorError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Born-rule probabilities went negative beyond round-off.
class NumericalStateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line and the offending token.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::string token, const std::string &what)
        : std::runtime_error(format(line, token, what)), line_(line),
          token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string &token() const noexcept { return token_; }

  private:
    static std::string format(std::size_t line, const std::string &token,
                              const std::string &what) {
        std::string msg;
        if (line > 0) {
            msg += "line " + std::to_string(line) + ": ";
        }
        msg += what;
        if (!token.empty()) {
            msg += " (at '" + token + "')";
        }
        return msg;
    }

    std::size_t line_;
    std::string token_;
};

} // namespace purify
