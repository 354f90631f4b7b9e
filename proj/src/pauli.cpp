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

#include "purify/pauli.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "purify/errors.hpp"

namespace purify {

namespace {

bool is_pauli_letter(char c) {
    return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

PauliTerm parse_term(std::string_view raw, double sign) {
    const std::string_view term = trim(raw);
    if (term.empty()) {
        throw ParseError(0, std::string(raw), "empty observable term");
    }
    double coefficient = 1.0;
    std::string_view letters = term;
    if (auto star = term.find('*'); star != std::string_view::npos) {
        const std::string_view coeff_text = trim(term.substr(0, star));
        letters = trim(term.substr(star + 1));
        std::string buffer(coeff_text);
        std::size_t used = 0;
        try {
            coefficient = std::stod(buffer, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (buffer.empty() || used != buffer.size() || !std::isfinite(coefficient)) {
            throw ParseError(0, buffer, "invalid coefficient");
        }
    }
    if (letters.empty()) {
        throw ParseError(0, std::string(term), "missing Pauli string");
    }
    for (char c : letters) {
        if (!is_pauli_letter(c)) {
            throw ParseError(0, std::string(letters),
                             std::string("invalid Pauli letter '") + c + "'");
        }
    }
    return PauliTerm{sign * coefficient, std::string(letters)};
}

} // namespace

ComplexMatrix pauli_matrix(char letter) {
    ComplexMatrix m(2, 2);
    switch (letter) {
    case 'I':
        m << 1, 0, 0, 1;
        break;
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, Complex(0, -1), Complex(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        throw PreconditionError(std::string("unknown Pauli letter '") + letter + "'");
    }
    return m;
}

ComplexMatrix pauli_string_matrix(std::string_view paulis) {
    ComplexMatrix out = ComplexMatrix::Ones(1, 1);
    for (char c : paulis) {
        out = kron(out, pauli_matrix(c));
    }
    return out;
}

PauliObservable::PauliObservable(std::vector<PauliTerm> terms)
    : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw PreconditionError("observable needs at least one term");
    }
    n_qubits_ = static_cast<int>(terms_.front().paulis.size());
    for (const auto &t : terms_) {
        if (static_cast<int>(t.paulis.size()) != n_qubits_ || n_qubits_ == 0) {
            throw DimensionError("observable terms have inconsistent widths: '" +
                                 t.paulis + "'");
        }
        for (char c : t.paulis) {
            if (!is_pauli_letter(c)) {
                throw PreconditionError("invalid Pauli string '" + t.paulis + "'");
            }
        }
        if (!std::isfinite(t.coefficient)) {
            throw PreconditionError("non-finite observable coefficient");
        }
    }
}

PauliObservable PauliObservable::single(std::string_view paulis) {
    return PauliObservable({PauliTerm{1.0, std::string(paulis)}});
}

PauliObservable PauliObservable::parse(std::string_view text) {
    std::vector<PauliTerm> terms;
    std::size_t start = 0;
    double sign = 1.0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const bool at_end = i == text.size();
        if (!at_end) {
            const char c = text[i];
            if (c != '+' && c != '-') {
                continue;
            }
            // sign of an exponent, as in 1e-3
            if (i >= 2 && (text[i - 1] == 'e' || text[i - 1] == 'E') &&
                (std::isdigit(static_cast<unsigned char>(text[i - 2])) ||
                 text[i - 2] == '.')) {
                continue;
            }
        }
        const std::string_view chunk = trim(text.substr(start, i - start));
        if (chunk.empty()) {
            const bool leading_sign = !at_end && terms.empty() && start == 0;
            if (!leading_sign) {
                throw ParseError(0, std::string(trim(text.substr(start > 0 ? start - 1 : 0))),
                                 terms.empty() && at_end ? "empty observable"
                                                         : "missing observable term");
            }
        } else {
            terms.push_back(parse_term(chunk, sign));
        }
        if (!at_end) {
            sign = text[i] == '-' ? -1.0 : 1.0;
        }
        start = i + 1;
    }
    const std::size_t width = terms.front().paulis.size();
    for (const auto &t : terms) {
        if (t.paulis.size() != width) {
            throw ParseError(0, t.paulis, "Pauli string width differs from '" +
                                              terms.front().paulis + "'");
        }
    }
    return PauliObservable(std::move(terms));
}

ComplexMatrix PauliObservable::matrix() const {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits_;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const auto &t : terms_) {
        out += t.coefficient * pauli_string_matrix(t.paulis);
    }
    return out;
}

bool PauliObservable::is_single_string() const {
    return terms_.size() == 1 && std::abs(std::abs(terms_[0].coefficient) - 1.0) < 1e-12;
}

std::string PauliObservable::to_string() const {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const double c = terms_[k].coefficient;
        if (k > 0) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        os << std::abs(c) << "*" << terms_[k].paulis;
    }
    return os.str();
}

} // namespace purify
