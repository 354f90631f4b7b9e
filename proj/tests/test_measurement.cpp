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

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "purify/channels.hpp"
#include "purify/errors.hpp"
#include "purify/purification.hpp"

using namespace purify;

namespace {

ComplexMatrix random_unitary_oracle(oracle::Lcg &rng, Eigen::Index d) {
    return rng.matrix(d, d).householderQr().householderQ();
}

DensityOperator plus_state() {
    ComplexVector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return DensityOperator::pure(v);
}

} // namespace

TEST(hadamard_test, identity_unitary) {
    oracle::Lcg rng(1);
    const DensityOperator rho(rng.density(2));
    const ComplexMatrix s = rng.hermitian(2);
    const ComplexMatrix u = oracle::identity(2);
    EXPECT_NEAR(hadamard_test(u, s, rho, HadamardTestPart::Real),
                oracle::trace(s * rho.matrix()).real(), 1e-14);
    EXPECT_NEAR(hadamard_test(u, s, rho, HadamardTestPart::Imaginary), 0.0, 1e-14);
}

TEST(hadamard_test, eigenstate_phase) {
    const DensityOperator zero = DensityOperator::basis(2, 0);
    const PauliObservable s = PauliObservable::single("I");
    EXPECT_NEAR(hadamard_test(oracle::pauli('Z'), s, zero, HadamardTestPart::Real), 1.0, 1e-14);
    EXPECT_NEAR(hadamard_test(oracle::pauli('Z'), s, zero, HadamardTestPart::Imaginary), 0.0,
                1e-14);
}

TEST(hadamard_test, matches_direct_trace) {
    oracle::Lcg rng(2);
    for (int t = 0; t < 200; ++t) {
        const Eigen::Index d = Eigen::Index{2} << (t % 3);
        const ComplexMatrix u = random_unitary_oracle(rng, d);
        const ComplexMatrix s = rng.hermitian(d);
        const DensityOperator rho(rng.density(d));
        const oracle::C expected = oracle::trace(s * u * rho.matrix());
        const double re = hadamard_test(u, s, rho, HadamardTestPart::Real);
        const double im = hadamard_test(u, s, rho, HadamardTestPart::Imaginary);
        EXPECT_LE(std::abs(Complex(re, im) - expected), 1e-10);
    }
}

TEST(hadamard_test, errors) {
    const DensityOperator rho = DensityOperator::maximally_mixed(2);
    ComplexMatrix not_unitary = oracle::identity(2);
    not_unitary(0, 1) = 0.5;
    EXPECT_THROW(hadamard_test(not_unitary, oracle::pauli('Z'), rho, HadamardTestPart::Real),
                 PreconditionError);
    EXPECT_THROW(hadamard_test(oracle::identity(4), oracle::pauli('Z'), rho,
                               HadamardTestPart::Real),
                 DimensionError);
}

TEST(involution_projectors, examples) {
    const auto [zp, zm] = involution_projectors(PauliObservable::single("Z"));
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1;
    EXPECT_EQ(zp, p0);
    EXPECT_EQ(zm, p1);
    EXPECT_EQ(zp + zm, oracle::identity(2));

    const auto [xp, xm] = involution_projectors(PauliObservable::single("XX"));
    EXPECT_LE(max_abs(xp * xp - xp), 1e-15);
    EXPECT_LE(max_abs(xm * xm - xm), 1e-15);
    EXPECT_LE(max_abs(xp * xm), 1e-15);
    EXPECT_NEAR(oracle::trace(xp).real(), 2.0, 1e-15);
    EXPECT_EQ(xp + xm, oracle::identity(4));

    EXPECT_THROW(involution_projectors(2.0 * oracle::pauli('Z')), PreconditionError);
    EXPECT_THROW(involution_projectors(PauliObservable::parse("0.5*X + 0.5*Z")),
                 PreconditionError);
}

TEST(symmetric_product_measure, examples) {
    oracle::Lcg rng(3);
    const DensityOperator rho(rng.density(2));
    const ComplexMatrix z = oracle::pauli('Z');
    EXPECT_NEAR(symmetric_product_measure(z, z, rho), 1.0, 1e-14);
    for (int t = 0; t < 20; ++t) {
        const DensityOperator r(rng.density(2));
        EXPECT_LE(std::abs(symmetric_product_measure(oracle::pauli('X'), z, r)), 1e-12);
    }
}

TEST(symmetric_product_measure, equals_anticommutator_trace) {
    oracle::Lcg rng(4);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 3;
        const Eigen::Index d = Eigen::Index{1} << n;
        const ComplexMatrix s = rng.hermitian(d);
        const std::string g_string = rng.pauli_string(n);
        const ComplexMatrix g = oracle::pauli_string(g_string);
        const DensityOperator rho(rng.density(d));
        const double expected = oracle::trace(0.5 * (s * g + g * s) * rho.matrix()).real();
        EXPECT_NEAR(symmetric_product_measure(s, PauliObservable::single(g_string), rho),
                    expected, 1e-10);
    }
}

TEST(antisymmetric_product_measure, examples) {
    oracle::Lcg rng(5);
    const DensityOperator rho(rng.density(2));
    const ComplexMatrix z = oracle::pauli('Z');
    EXPECT_NEAR(antisymmetric_product_measure(z, z, rho), 0.0, 1e-14);

    const ComplexMatrix x = oracle::pauli('X');
    const oracle::C brute =
        Complex(0, 1) * oracle::trace(0.5 * (x * z - z * x) * plus_state().matrix());
    EXPECT_NEAR(brute.imag(), 0.0, 1e-15);
    EXPECT_NEAR(antisymmetric_product_measure(x, z, plus_state()), brute.real(), 1e-14);

    // |+i> gives a nonzero commutator term: i Tr(-iY |+i><+i|) = 1
    ComplexVector plus_i(2);
    plus_i << 1.0 / std::sqrt(2.0), Complex(0, 1.0 / std::sqrt(2.0));
    EXPECT_NEAR(antisymmetric_product_measure(x, z, DensityOperator::pure(plus_i)), 1.0, 1e-14);
}

TEST(antisymmetric_product_measure, equals_commutator_trace) {
    oracle::Lcg rng(6);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 3;
        const Eigen::Index d = Eigen::Index{1} << n;
        const ComplexMatrix s = rng.hermitian(d);
        const std::string g_string = rng.pauli_string(n);
        const ComplexMatrix g = oracle::pauli_string(g_string);
        const DensityOperator rho(rng.density(d));
        const oracle::C expected =
            Complex(0, 1) * oracle::trace(0.5 * (s * g - g * s) * rho.matrix());
        EXPECT_NEAR(expected.imag(), 0.0, 1e-12);
        EXPECT_NEAR(antisymmetric_product_measure(s, PauliObservable::single(g_string), rho),
                    expected.real(), 1e-10);
    }
}

TEST(product_expectation, matches_direct_trace) {
    oracle::Lcg rng(7);
    const ComplexMatrix s0 = rng.hermitian(2);
    const DensityOperator rho0(rng.density(2));
    EXPECT_LE(std::abs(product_expectation(s0, oracle::identity(2), rho0) -
                       oracle::trace(s0 * rho0.matrix())),
              1e-14);

    GateCircuit circ(1);
    circ.add({GateKind::RY, {0}, 0.7}).add({GateKind::RZ, {0}, 0.3});
    const NoiseModel noise(NoiseKind::AmplitudeDamping, 0.1);
    const DensityOperator rho = prepare_noisy_state(circ, noise);
    const DensityOperator rho_bar = dual_state(circ, noise);
    const ComplexMatrix z = oracle::pauli('Z');
    EXPECT_LE(std::abs(product_expectation(rho_bar.matrix(), z, rho) -
                       oracle::trace(rho_bar.matrix() * z * rho.matrix())),
              1e-12);

    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 3;
        const Eigen::Index d = Eigen::Index{1} << n;
        const ComplexMatrix s = rng.hermitian(d);
        const std::string g = rng.pauli_string(n);
        const DensityOperator r(rng.density(d));
        const oracle::C expected = oracle::trace(s * oracle::pauli_string(g) * r.matrix());
        EXPECT_LE(std::abs(product_expectation(s, PauliObservable::single(g), r) - expected),
                  1e-10);
    }
}

TEST(symmetrized_verified_estimate, examples) {
    GateCircuit circ(2);
    circ.add({GateKind::H, {0}}).add({GateKind::CNOT, {0, 1}});
    const NoiseModel none;
    const DensityOperator pure = prepare_noisy_state(circ, none);
    EXPECT_NEAR(symmetrized_verified_estimate(pure, dual_state(circ, none),
                                              PauliObservable::single("XX")),
                1.0, 1e-12);

    oracle::Lcg rng(8);
    const DensityOperator rho(rng.density(4));
    const PauliObservable zx = PauliObservable::single("ZX");
    EXPECT_NEAR(symmetrized_verified_estimate(rho, rho, zx), purified_expectation(rho, zx, 2),
                1e-10);
    const DensityOperator rho_bar(rng.positive(4), false);
    EXPECT_NEAR(symmetrized_verified_estimate(rho, rho_bar, PauliObservable::single("II")), 1.0,
                1e-12);
    const double direct = oracle::trace(rho_bar.matrix() * zx.matrix() * rho.matrix()).real() /
                          oracle::trace(rho_bar.matrix() * rho.matrix()).real();
    EXPECT_NEAR(symmetrized_verified_estimate(rho, rho_bar, zx), direct, 1e-10);

    EXPECT_THROW(symmetrized_verified_estimate(DensityOperator::basis(2, 0),
                                               DensityOperator::basis(2, 1),
                                               PauliObservable::single("Z")),
                 VanishingNormError);
}

TEST(symmetrized_verified_estimate, global_depolarizing_matches_second_degree_formula) {
    GateCircuit circ(1);
    circ.add({GateKind::X, {0}});
    for (double p : {0.05, 0.1, 0.2}) {
        const NoiseModel noise(NoiseKind::DepolarizingGlobal, p);
        const double est =
            symmetrized_verified_estimate(prepare_noisy_state(circ, noise),
                                          dual_state(circ, noise), PauliObservable::single("Z"));
        const double l0 = 1.0 - p / 2;
        const double l1 = p / 2;
        EXPECT_NEAR(est, -(l0 * l0 - l1 * l1) / (l0 * l0 + l1 * l1), 1e-10);
    }
}
