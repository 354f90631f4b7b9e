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

#include "purify/pauli.hpp"
#include "purify/tensor.hpp"

namespace purify {

/// Default separation required between the two largest eigenvalues.
inline constexpr double kDefaultGapTolerance = 1e-8;

/// rho = (1 - p_eps) dominant + p_eps residual, with dominant the projector
/// onto the top eigenvector and residual the normalized remainder, orthogonal
/// to it. When p_eps is 0 the residual is a zero-weight placeholder (|0><0|
/// of the complement is not defined, so the dominant projector is reused).
struct NoisyDecomposition {
    double p_eps;
    DensityOperator dominant;
    DensityOperator residual;
    ComplexVector dominant_vector;
};

/// Throws DegenerateSpectrumError if the top two eigenvalues are within
/// `gap_tolerance`, PreconditionError if rho is not normalized.
NoisyDecomposition decompose_noisy_state(const DensityOperator &rho,
                                         double gap_tolerance = kDefaultGapTolerance);

/// rho^M / Tr(rho^M). M = 1 returns rho unchanged.
DensityOperator purified_state(const DensityOperator &rho, int degree);

/// Upper bound on the infidelity after degree-M purification,
/// p^M / ((1-p)^M + p^M). Throws PreconditionError outside [0, 1).
double purified_infidelity_bound(double p_eps, int degree);

/// Tr(O rho^M) / Tr(rho^M).
double purified_expectation(const DensityOperator &rho, const ComplexMatrix &obs,
                            int degree);
double purified_expectation(const DensityOperator &rho, const PauliObservable &obs,
                            int degree);

/// 1 - |<psi0|v>|^2 for v the dominant eigenvector of rho: the infidelity
/// that remains even in the infinite-degree limit.
double coherent_mismatch(const DensityOperator &rho, const ComplexVector &psi0,
                         double gap_tolerance = kDefaultGapTolerance);

/// Unit top eigenvector of any Hermitian PSD operator (normalized or not).
/// Throws DegenerateSpectrumError as decompose_noisy_state does.
ComplexVector dominant_eigenvector(const ComplexMatrix &a,
                                   double gap_tolerance = kDefaultGapTolerance);

} // namespace purify
