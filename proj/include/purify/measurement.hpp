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

#include <utility>

#include "purify/pauli.hpp"
#include "purify/tensor.hpp"

namespace purify {

enum class HadamardTestPart { Real, Imaginary };

/// Expectation of X (x) S (Real) or Y (x) S (Imaginary) after the ancilla
/// circuit |0> -H- control-U on rho, i.e. Re or Im of Tr(S U rho).
/// The ancilla is the most significant qubit. Throws PreconditionError if U
/// is not unitary within 1e-10 and DimensionError on size mismatch.
double hadamard_test(const ComplexMatrix &u, const ComplexMatrix &s,
                     const DensityOperator &rho, HadamardTestPart part);
double hadamard_test(const ComplexMatrix &u, const PauliObservable &s,
                     const DensityOperator &rho, HadamardTestPart part);

/// Projectors (I + G)/2 and (I - G)/2 onto the +-1 eigenspaces of an
/// involution. Throws PreconditionError unless G^2 = I within 1e-10.
std::pair<ComplexMatrix, ComplexMatrix> involution_projectors(const ComplexMatrix &g);
std::pair<ComplexMatrix, ComplexMatrix> involution_projectors(const PauliObservable &g);

/// sum_{l=+-1} l Tr(S P_l rho P_l): measure G non-destructively, then S, and
/// multiply the outcomes. Equals Tr((SG + GS)/2 rho).
double symmetric_product_measure(const ComplexMatrix &s, const ComplexMatrix &g,
                                 const DensityOperator &rho);
double symmetric_product_measure(const ComplexMatrix &s, const PauliObservable &g,
                                 const DensityOperator &rho);

/// (1/2) sum_{l=+-1} l Tr(S R_l rho R_l^dagger) with the unitary rotation
/// R_l = exp(i l G pi/4) = (I + i l G)/sqrt(2). Equals i Tr((SG - GS)/2 rho),
/// which is real for Hermitian S and G.
double antisymmetric_product_measure(const ComplexMatrix &s, const ComplexMatrix &g,
                                     const DensityOperator &rho);
double antisymmetric_product_measure(const ComplexMatrix &s, const PauliObservable &g,
                                     const DensityOperator &rho);

/// Tr(S G rho) assembled from the two measurements above:
/// symmetric - i * antisymmetric.
Complex product_expectation(const ComplexMatrix &s, const ComplexMatrix &g,
                            const DensityOperator &rho);
Complex product_expectation(const ComplexMatrix &s, const PauliObservable &g,
                            const DensityOperator &rho);

/// Tr(((rho_bar O + O rho_bar)/2) rho) / Tr(rho_bar rho), with the numerator
/// taken from symmetric_product_measure(S = rho_bar, G = O).
/// Throws VanishingNormError when Tr(rho_bar rho) <= 1e-12.
double symmetrized_verified_estimate(const DensityOperator &rho,
                                     const DensityOperator &rho_bar,
                                     const PauliObservable &obs);

} // namespace purify
