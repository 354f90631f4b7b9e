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

#include "purify/measurement.hpp"

#include <cmath>

#include "purify/errors.hpp"

namespace purify {

namespace {

void require_square_of(const ComplexMatrix &m, Eigen::Index dim, const char *what) {
    if (m.rows() != dim || m.cols() != dim) {
        throw DimensionError(std::string(what) + " does not match the state dimension");
    }
}

void require_involution(const ComplexMatrix &g) {
    if (g.rows() != g.cols()) {
        throw DimensionError("involution must be square");
    }
    const ComplexMatrix id = ComplexMatrix::Identity(g.rows(), g.cols());
    if (max_abs(g * g - id) > 1e-10 || !is_hermitian(g)) {
        throw PreconditionError("operator is not a Hermitian involution (G^2 != I)");
    }
}

void require_hermitian(const ComplexMatrix &s) {
    if (!is_hermitian(s, 1e-10 * std::max(1.0, max_abs(s)))) {
        throw PreconditionError("measured operator S must be Hermitian");
    }
}

ComplexMatrix pauli_involution(const PauliObservable &g) {
    if (!g.is_single_string()) {
        throw PreconditionError("involution must be a single Pauli string, got '" +
                                g.to_string() + "'");
    }
    return g.matrix();
}

} // namespace

double hadamard_test(const ComplexMatrix &u, const ComplexMatrix &s,
                     const DensityOperator &rho, HadamardTestPart part) {
    const Eigen::Index d = rho.dim();
    require_square_of(u, d, "U");
    require_square_of(s, d, "S");
    if (!is_unitary(u)) {
        throw PreconditionError("hadamard_test: U is not unitary");
    }
    ComplexMatrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);

    ComplexMatrix controlled_u = ComplexMatrix::Zero(2 * d, 2 * d);
    controlled_u.topLeftCorner(d, d).setIdentity();
    controlled_u.bottomRightCorner(d, d) = u;
    const ComplexMatrix prepare =
        controlled_u * kron(h, ComplexMatrix::Identity(d, d));

    const ComplexMatrix start = kron(DensityOperator::basis(2, 0).matrix(), rho.matrix());
    const ComplexMatrix state = prepare * start * prepare.adjoint();
    const char ancilla = part == HadamardTestPart::Real ? 'X' : 'Y';
    return trace_product(kron(pauli_matrix(ancilla), s), state).real();
}

double hadamard_test(const ComplexMatrix &u, const PauliObservable &s,
                     const DensityOperator &rho, HadamardTestPart part) {
    return hadamard_test(u, s.matrix(), rho, part);
}

std::pair<ComplexMatrix, ComplexMatrix> involution_projectors(const ComplexMatrix &g) {
    require_involution(g);
    const ComplexMatrix id = ComplexMatrix::Identity(g.rows(), g.cols());
    return {0.5 * (id + g), 0.5 * (id - g)};
}

std::pair<ComplexMatrix, ComplexMatrix> involution_projectors(const PauliObservable &g) {
    return involution_projectors(pauli_involution(g));
}

double symmetric_product_measure(const ComplexMatrix &s, const ComplexMatrix &g,
                                 const DensityOperator &rho) {
    require_square_of(s, rho.dim(), "S");
    require_square_of(g, rho.dim(), "G");
    require_hermitian(s);
    const auto [plus, minus] = involution_projectors(g);
    const ComplexMatrix &r = rho.matrix();
    const Complex up = trace_product(s, plus * r * plus);
    const Complex down = trace_product(s, minus * r * minus);
    return (up - down).real();
}

double symmetric_product_measure(const ComplexMatrix &s, const PauliObservable &g,
                                 const DensityOperator &rho) {
    return symmetric_product_measure(s, pauli_involution(g), rho);
}

double antisymmetric_product_measure(const ComplexMatrix &s, const ComplexMatrix &g,
                                     const DensityOperator &rho) {
    require_square_of(s, rho.dim(), "S");
    require_square_of(g, rho.dim(), "G");
    require_hermitian(s);
    require_involution(g);
    const ComplexMatrix id = ComplexMatrix::Identity(g.rows(), g.cols());
    const Complex i{0.0, 1.0};
    const ComplexMatrix &r = rho.matrix();
    double sum = 0.0;
    for (double lambda : {1.0, -1.0}) {
        const ComplexMatrix rot = (id + i * lambda * g) / std::sqrt(2.0);
        sum += lambda * trace_product(s, rot * r * rot.adjoint()).real();
    }
    return 0.5 * sum;
}

double antisymmetric_product_measure(const ComplexMatrix &s, const PauliObservable &g,
                                     const DensityOperator &rho) {
    return antisymmetric_product_measure(s, pauli_involution(g), rho);
}

Complex product_expectation(const ComplexMatrix &s, const ComplexMatrix &g,
                            const DensityOperator &rho) {
    const double sym = symmetric_product_measure(s, g, rho);
    const double anti = antisymmetric_product_measure(s, g, rho);
    // anti = i Tr((SG - GS)/2 rho), so Tr((SG - GS)/2 rho) = -i anti
    return Complex{sym, -anti};
}

Complex product_expectation(const ComplexMatrix &s, const PauliObservable &g,
                            const DensityOperator &rho) {
    return product_expectation(s, pauli_involution(g), rho);
}

double symmetrized_verified_estimate(const DensityOperator &rho,
                                     const DensityOperator &rho_bar,
                                     const PauliObservable &obs) {
    if (rho.dim() != rho_bar.dim()) {
        throw DimensionError("state and dual state dimensions differ");
    }
    const double overlap = trace_product(rho_bar.matrix(), rho.matrix()).real();
    if (!(overlap > 1e-12)) {
        throw VanishingNormError("Tr(rho_bar rho) vanishes");
    }
    return symmetric_product_measure(rho_bar.matrix(), obs, rho) / overlap;
}

} // namespace purify
