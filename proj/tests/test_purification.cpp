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

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "purify/channels.hpp"
#include "purify/errors.hpp"
#include "purify/pauli.hpp"

using namespace purify;

namespace {

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

/// (1-p)|psi><psi| + p sigma with sigma a random state on the orthogonal
/// complement of psi, so psi is the dominant eigenvector for p < 0.5.
struct Constructed {
    ComplexVector psi;
    DensityOperator rho;
};

Constructed constructed_state(oracle::Lcg &rng, Eigen::Index d, double p) {
    const ComplexMatrix q = rng.matrix(d, d).householderQr().householderQ();
    const ComplexVector psi = q.col(0);
    const ComplexMatrix basis = q.rightCols(d - 1);
    const ComplexMatrix sigma = basis * rng.density(d - 1) * basis.adjoint();
    ComplexMatrix rho = (1.0 - p) * psi * psi.adjoint() + p * sigma;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return {psi, DensityOperator(rho)};
}

} // namespace

TEST(decompose_noisy_state, pure_state) {
    const ComplexVector psi = oracle::Lcg(1).matrix(4, 1).col(0).normalized();
    const NoisyDecomposition dec = decompose_noisy_state(DensityOperator::pure(psi));
    EXPECT_NEAR(dec.p_eps, 0.0, 1e-14);
    EXPECT_LT(max_abs(dec.dominant.matrix() - psi * psi.adjoint()), 1e-12);
}

TEST(decompose_noisy_state, diagonal_example) {
    const NoisyDecomposition dec = decompose_noisy_state(DensityOperator(diag2(0.85, 0.15)));
    EXPECT_NEAR(dec.p_eps, 0.15, 1e-15);
    EXPECT_LT(max_abs(dec.dominant.matrix() - diag2(1, 0)), 1e-15);
    EXPECT_LT(max_abs(dec.residual.matrix() - diag2(0, 1)), 1e-14);
}

TEST(decompose_noisy_state, degenerate_spectrum) {
    EXPECT_THROW(decompose_noisy_state(DensityOperator::maximally_mixed(2)),
                 DegenerateSpectrumError);
    // near-degenerate top pair still fails at the default tolerance
    EXPECT_THROW(decompose_noisy_state(DensityOperator(diag2(0.5 + 1e-10, 0.5 - 1e-10))),
                 DegenerateSpectrumError);
    EXPECT_NO_THROW(decompose_noisy_state(DensityOperator(diag2(0.5 + 1e-10, 0.5 - 1e-10)),
                                          1e-12));
    ComplexMatrix not_state = diag2(2.0, 1.0);
    EXPECT_THROW(decompose_noisy_state(DensityOperator(not_state, false)), PreconditionError);
}

TEST(decompose_noisy_state, recomposition_and_orthogonality) {
    oracle::Lcg rng(2);
    for (int t = 0; t < 500; ++t) {
        const Eigen::Index d = Eigen::Index{2} << (t % 4);
        const DensityOperator rho(rng.density(d));
        const NoisyDecomposition dec = decompose_noisy_state(rho);
        const ComplexMatrix rebuilt =
            (1.0 - dec.p_eps) * dec.dominant.matrix() + dec.p_eps * dec.residual.matrix();
        EXPECT_LE(max_abs(rebuilt - rho.matrix()), 1e-9);
        EXPECT_LE(max_abs(dec.dominant.matrix() * dec.residual.matrix()), 1e-9);
        EXPECT_NEAR(dec.residual.trace(), 1.0, 1e-10);
        EXPECT_TRUE(dec.residual.normalized());
    }
}

TEST(purified_state, examples) {
    const DensityOperator rho(oracle::Lcg(3).density(4));
    EXPECT_EQ(purified_state(rho, 1).matrix(), rho.matrix());

    const ComplexVector psi = oracle::Lcg(4).matrix(2, 1).col(0).normalized();
    const DensityOperator pure = DensityOperator::pure(psi);
    EXPECT_LT(max_abs(purified_state(pure, 5).matrix() - pure.matrix()), 1e-12);

    const DensityOperator out = purified_state(DensityOperator(diag2(0.85, 0.15)), 2);
    EXPECT_LT(max_abs(out.matrix() - diag2(0.7225, 0.0225) / 0.745), 1e-15);
}

TEST(purified_state, matches_matrix_power_oracle) {
    oracle::Lcg rng(5);
    for (int m : {2, 3, 4}) {
        const ComplexMatrix rho = rng.density(4);
        const ComplexMatrix p = oracle::power(rho, m);
        const ComplexMatrix expected = p / oracle::trace(p).real();
        EXPECT_LT(max_abs(purified_state(DensityOperator(rho), m).matrix() - expected), 1e-12);
    }
}

TEST(purified_state, vanishing_normalisation) {
    EXPECT_THROW(purified_state(DensityOperator::maximally_mixed(2), 1100), VanishingNormError);
}

TEST(purified_infidelity_bound, examples) {
    for (int m : {1, 2, 5}) {
        EXPECT_EQ(purified_infidelity_bound(0.0, m), 0.0);
        EXPECT_NEAR(purified_infidelity_bound(0.5, m), 0.5, 1e-15);
    }
    EXPECT_NEAR(purified_infidelity_bound(0.1, 2), 0.01 / 0.82, 1e-15);
    EXPECT_THROW(purified_infidelity_bound(1.0, 2), PreconditionError);
    EXPECT_THROW(purified_infidelity_bound(-0.1, 2), PreconditionError);
}

TEST(purified_expectation, examples) {
    oracle::Lcg rng(6);
    const ComplexMatrix rho = rng.density(2);
    const ComplexMatrix z = oracle::pauli('Z');
    EXPECT_NEAR(purified_expectation(DensityOperator(rho), z, 1),
                oracle::trace(z * rho).real(), 1e-14);

    const ComplexVector psi = rng.matrix(2, 1).col(0).normalized();
    const double ideal = (psi.adjoint() * z * psi)(0, 0).real();
    EXPECT_NEAR(purified_expectation(DensityOperator::pure(psi), z, 4), ideal, 1e-12);

    const double p = 0.2;
    const ComplexMatrix noisy = (1.0 - p) * diag2(1, 0) + p * diag2(0.5, 0.5);
    const double l0 = 0.9;
    const double l1 = 0.1;
    EXPECT_NEAR(purified_expectation(DensityOperator(noisy), PauliObservable::single("Z"), 2),
                (l0 * l0 - l1 * l1) / (l0 * l0 + l1 * l1), 1e-14);
    EXPECT_NEAR((l0 * l0 - l1 * l1) / (l0 * l0 + l1 * l1), 0.97561, 1e-5);
}

TEST(coherent_mismatch, examples) {
    oracle::Lcg rng(7);
    const Constructed c = constructed_state(rng, 4, 0.2);
    EXPECT_NEAR(coherent_mismatch(c.rho, c.psi), 0.0, 1e-12);

    const DensityOperator near_one(diag2(1e-3, 1.0 - 1e-3));
    EXPECT_NEAR(coherent_mismatch(near_one, basis_vector(2, 0)), 1.0, 1e-12);

    // global depolarizing keeps the eigenvectors
    GateCircuit circ(2);
    circ.add({GateKind::H, {0}}).add({GateKind::CNOT, {0, 1}}).add({GateKind::RY, {1}, 0.3});
    const ComplexVector psi0 = circ.unitary().col(0);
    const DensityOperator rho =
        prepare_noisy_state(circ, NoiseModel(NoiseKind::DepolarizingGlobal, 0.2));
    EXPECT_NEAR(coherent_mismatch(rho, psi0), 0.0, 1e-10);

    EXPECT_THROW(coherent_mismatch(DensityOperator::maximally_mixed(2), basis_vector(2, 0)),
                 DegenerateSpectrumError);
}

TEST(purification_properties, fidelity_bound_on_constructed_states) {
    oracle::Lcg rng(8);
    for (int t = 0; t < 200; ++t) {
        const double p = 0.4 * rng.uniform();
        const Constructed c = constructed_state(rng, 2 + (t % 3) * 2, p);
        for (int m = 1; m <= 4; ++m) {
            const double f = pure_fidelity(c.psi, purified_state(c.rho, m));
            const double bound = std::pow(1 - p, m) / (std::pow(1 - p, m) + std::pow(p, m));
            EXPECT_GE(f, bound - 1e-9);
            // monotone suppression for p <= 0.5
            EXPECT_LE(1.0 - f, p + 1e-9);
        }
    }
}

TEST(purification_properties, global_depolarizing_is_exact) {
    for (int n : {1, 2}) {
        const int d = 1 << n;
        for (double p : {0.05, 0.2, 0.6}) {
            const ComplexVector psi = oracle::Lcg(9).matrix(d, 1).col(0).normalized();
            const ComplexMatrix rho =
                (1 - p) * psi * psi.adjoint() + p * ComplexMatrix::Identity(d, d) / double(d);
            for (int m = 1; m <= 4; ++m) {
                const double infid = 1.0 - pure_fidelity(psi, purified_state(DensityOperator(rho), m));
                EXPECT_NEAR(infid, oracle::depolarized_purified_infidelity(p, d, m), 1e-10);
            }
        }
    }
}

TEST(purification_properties, similar_states_share_dominant_eigenvector) {
    oracle::Lcg rng(10);
    for (int t = 0; t < 10; ++t) {
        GateCircuit circ(2);
        circ.add({GateKind::RY, {0}, 3 * rng.symmetric()})
            .add({GateKind::CNOT, {0, 1}})
            .add({GateKind::RX, {1}, 3 * rng.symmetric()});
        const NoiseModel noise(NoiseKind::DepolarizingLocal, 0.05);
        const ComplexVector v = dominant_eigenvector(prepare_noisy_state(circ, noise).matrix());
        const ComplexVector w = dominant_eigenvector(dual_state(circ, noise).matrix());
        const ComplexVector r = rng.matrix(4, 1).col(0).normalized();
        const double shared = std::norm(v.dot(w));
        EXPECT_GT(shared, std::norm(v.dot(r)));
        EXPECT_GT(shared, std::norm(w.dot(r)));
    }
}
