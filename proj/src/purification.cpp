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

#include "purify/purification.hpp"

#include <cmath>
#include <string>

#include "purify/errors.hpp"

namespace purify {

namespace {

constexpr double kMinTraceOfPower = 1e-300;

void require_degree(int degree) {
    if (degree < 1) {
        throw PreconditionError("purification degree must be >= 1, got " +
                                std::to_string(degree));
    }
}

void require_normalized(const DensityOperator &rho, const char *who) {
    if (!rho.normalized()) {
        throw PreconditionError(std::string(who) + " needs a normalized state");
    }
}

void require_gap(const HermitianEigen &eig, double gap_tolerance) {
    if (eig.values.size() > 1 && eig.values[0] - eig.values[1] <= gap_tolerance) {
        throw DegenerateSpectrumError(
            "dominant eigenvalue is degenerate (gap " +
            std::to_string(eig.values[0] - eig.values[1]) +
            "); purification target is ill-defined");
    }
}

} // namespace

ComplexVector dominant_eigenvector(const ComplexMatrix &a, double gap_tolerance) {
    const HermitianEigen eig = hermitian_eig(a);
    require_gap(eig, gap_tolerance);
    return eig.vectors.col(0);
}

NoisyDecomposition decompose_noisy_state(const DensityOperator &rho,
                                         double gap_tolerance) {
    require_normalized(rho, "decompose_noisy_state");
    const HermitianEigen eig = hermitian_eig(rho.matrix());
    require_gap(eig, gap_tolerance);

    const ComplexVector v = eig.vectors.col(0);
    const double top = eig.values[0];
    const ComplexMatrix projector = v * v.adjoint();
    const double p_eps = std::max(0.0, 1.0 - top);
    DensityOperator dominant(projector, true);
    if (p_eps <= 1e-15) {
        return NoisyDecomposition{0.0, dominant, dominant, v};
    }
    const ComplexMatrix rest = (rho.matrix() - top * projector) / p_eps;
    return NoisyDecomposition{p_eps, dominant, DensityOperator(rest, true), v};
}

DensityOperator purified_state(const DensityOperator &rho, int degree) {
    require_degree(degree);
    require_normalized(rho, "purified_state");
    if (degree == 1) {
        return rho;
    }
    const ComplexMatrix power = psd_power(rho.matrix(), degree);
    const double norm = power.trace().real();
    if (!(norm > kMinTraceOfPower)) {
        throw VanishingNormError("Tr(rho^M) vanishes");
    }
    return DensityOperator(power / norm, true);
}

double purified_infidelity_bound(double p_eps, int degree) {
    require_degree(degree);
    if (!(p_eps >= 0.0 && p_eps < 1.0)) {
        throw PreconditionError("infidelity weight must lie in [0, 1)");
    }
    const double bad = std::pow(p_eps, degree);
    const double good = std::pow(1.0 - p_eps, degree);
    return bad / (good + bad);
}

double purified_expectation(const DensityOperator &rho, const ComplexMatrix &obs,
                            int degree) {
    require_degree(degree);
    require_normalized(rho, "purified_expectation");
    if (obs.rows() != rho.dim() || obs.cols() != rho.dim()) {
        throw DimensionError("observable and state dimensions differ");
    }
    const ComplexMatrix power = psd_power(rho.matrix(), degree);
    const double norm = power.trace().real();
    if (!(norm > kMinTraceOfPower)) {
        throw VanishingNormError("Tr(rho^M) vanishes");
    }
    return trace_product(obs, power).real() / norm;
}

double purified_expectation(const DensityOperator &rho, const PauliObservable &obs,
                            int degree) {
    return purified_expectation(rho, obs.matrix(), degree);
}

double coherent_mismatch(const DensityOperator &rho, const ComplexVector &psi0,
                         double gap_tolerance) {
    if (psi0.size() != rho.dim()) {
        throw DimensionError("coherent_mismatch: dimensions differ");
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-10) {
        throw PreconditionError("coherent_mismatch: psi0 is not normalized");
    }
    const ComplexVector v = dominant_eigenvector(rho.matrix(), gap_tolerance);
    return std::max(0.0, 1.0 - std::norm(psi0.dot(v)));
}

} // namespace purify
