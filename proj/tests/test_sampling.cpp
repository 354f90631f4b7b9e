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

#include "purify/sampling.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "purify/errors.hpp"

using namespace purify;

namespace {

DensityOperator plus_state() {
    ComplexVector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return DensityOperator::pure(v);
}

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

SchemeSetup one_qubit_setup(SchemeKind kind, double p, int copies) {
    SchemeSetup s;
    s.kind = kind;
    s.circuit = GateCircuit(1);
    s.circuit.add({GateKind::RY, {0}, 0.6});
    s.noise = NoiseModel(NoiseKind::DepolarizingGlobal, p);
    s.observable = PauliObservable::parse("0.8*Z + 0.6*X");
    s.copies = copies;
    return s;
}

int copies_for(SchemeKind kind) {
    return kind == SchemeKind::Raw || kind == SchemeKind::StateVerification ? 1 : 2;
}

double sample_variance(const std::vector<double> &xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return ss / static_cast<double>(xs.size() - 1);
}

} // namespace

TEST(shot_config, validation) {
    EXPECT_NO_THROW(ShotConfig{}.validate());
    EXPECT_THROW((ShotConfig{0, 1, 1, 1}.validate()), PreconditionError);
    EXPECT_THROW((ShotConfig{10, 1, 0, 1}.validate()), PreconditionError);
    EXPECT_THROW((ShotConfig{10, 1, 1, 0}.validate()), PreconditionError);
}

TEST(outcome_distribution, merges_degenerate_eigenvalues) {
    const OutcomeDistribution d =
        outcome_distribution(ComplexMatrix::Identity(4, 4) / 4.0, oracle::pauli_string("ZZ"));
    ASSERT_EQ(d.outcomes.size(), 2u);
    EXPECT_NEAR(d.probabilities[0] + d.probabilities[1], 1.0, 1e-15);
    EXPECT_NEAR(d.probabilities[0], 0.5, 1e-14);
    EXPECT_NEAR(d.mean(), 0.0, 1e-14);
}

TEST(outcome_distribution, clipping) {
    const ComplexMatrix z = oracle::pauli('Z');
    const OutcomeDistribution ok = outcome_distribution(diag2(1.0 + 1e-8, -1e-8), z);
    for (double p : ok.probabilities) {
        EXPECT_GE(p, 0.0);
    }
    EXPECT_NEAR(ok.mean(), 1.0, 1e-12);
    EXPECT_THROW(outcome_distribution(diag2(1.1, -0.1), z), NumericalStateError);
}

TEST(sample_expectation, constant_outcomes) {
    oracle::Lcg rng(1);
    const DensityOperator rho(rng.density(2));
    const SampleSummary id = sample_expectation(rho, oracle::identity(2), ShotConfig{500, 3});
    EXPECT_DOUBLE_EQ(id.mean, 1.0);
    EXPECT_DOUBLE_EQ(id.std_error, 0.0);

    const SampleSummary eig =
        sample_expectation(DensityOperator::basis(2, 1), oracle::pauli('Z'), ShotConfig{500, 3});
    EXPECT_DOUBLE_EQ(eig.mean, -1.0);
    EXPECT_DOUBLE_EQ(eig.std_error, 0.0);
}

TEST(sample_expectation, binomial_statistics) {
    const SampleSummary s =
        sample_expectation(plus_state(), oracle::pauli('Z'), ShotConfig{10000, 42});
    EXPECT_LE(std::abs(s.mean), 5.0 * s.std_error);
    EXPECT_NEAR(s.std_error, 0.01, 1e-3);
}

TEST(sample_expectation, deterministic_per_seed) {
    const ComplexMatrix z = oracle::pauli('Z');
    const SampleSummary a = sample_expectation(plus_state(), z, ShotConfig{1000, 7});
    const SampleSummary b = sample_expectation(plus_state(), z, ShotConfig{1000, 7});
    const SampleSummary c = sample_expectation(plus_state(), z, ShotConfig{1000, 8});
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_NE(a.mean, c.mean);
    EXPECT_THROW(sample_expectation(plus_state(), oracle::identity(4), ShotConfig{}),
                 DimensionError);
}

TEST(ratio_estimator, examples) {
    const RatioEstimate trivial = ratio_estimator({0.3, 0.02}, {1.0, 0.0});
    EXPECT_DOUBLE_EQ(trivial.ratio, 0.3);
    EXPECT_DOUBLE_EQ(trivial.std_error, 0.02);

    EXPECT_DOUBLE_EQ(ratio_estimator({0.7, 0.01}, {0.7, 0.01}).ratio, 1.0);

    const RatioEstimate r = ratio_estimator({0.5, 0.01}, {0.8, 0.01});
    EXPECT_DOUBLE_EQ(r.ratio, 0.625);
    EXPECT_NEAR(r.std_error, 0.625 * std::sqrt(0.0004 + 0.00015625), 1e-15);
    EXPECT_NEAR(r.std_error, 0.01474, 1e-5);

    // zero numerator keeps the denominator-free term
    EXPECT_NEAR(ratio_estimator({0.0, 0.01}, {0.5, 0.01}).std_error, 0.02, 1e-15);
}

TEST(ratio_estimator, unstable_denominator) {
    EXPECT_THROW(ratio_estimator({0.5, 0.01}, {0.02, 0.01}), UnstableDenominatorError);
    EXPECT_THROW(ratio_estimator({0.5, 0.0}, {0.0, 0.0}), UnstableDenominatorError);
    EXPECT_NO_THROW(ratio_estimator({0.5, 0.01}, {0.04, 0.01}));
}

TEST(scheme_shot_experiment, noiseless_raw) {
    SchemeSetup s;
    s.kind = SchemeKind::Raw;
    s.circuit = GateCircuit(1);
    s.circuit.add({GateKind::H, {0}});
    s.observable = PauliObservable::single("X");
    const EstimateReport r = scheme_shot_experiment(s, ShotConfig{1000, 5});
    ASSERT_TRUE(r.exact_ratio.has_value());
    EXPECT_NEAR(*r.exact_ratio, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(r.ratio, 1.0);
    EXPECT_EQ(r.shots_used, 1000u);
}

TEST(scheme_shot_experiment, combined_million_shots) {
    const EstimateReport r =
        scheme_shot_experiment(one_qubit_setup(SchemeKind::Combined, 0.2, 2), ShotConfig{1000000, 9});
    EXPECT_LE(std::abs(r.ratio - *r.exact_ratio), 5.0 * r.ratio_stderr);
    EXPECT_GT(r.ratio_stderr, 0.0);
    EXPECT_LE(std::abs(r.numerator_imag), 1e-10);
    EXPECT_EQ(r.shots_used, 1000000u);
}

TEST(scheme_shot_experiment, deterministic_across_workers) {
    const SchemeSetup s = one_qubit_setup(SchemeKind::MultiCopy, 0.1, 2);
    const EstimateReport a = scheme_shot_experiment(s, ShotConfig{2000, 17, 8, 1});
    const EstimateReport b = scheme_shot_experiment(s, ShotConfig{2000, 17, 8, 3});
    const EstimateReport c = scheme_shot_experiment(s, ShotConfig{2000, 17, 8, 1});
    for (const EstimateReport &x : {b, c}) {
        EXPECT_EQ(a.ratio, x.ratio);
        EXPECT_EQ(a.ratio_stderr, x.ratio_stderr);
        EXPECT_EQ(a.numerator_mean, x.numerator_mean);
        EXPECT_EQ(a.denominator_mean, x.denominator_mean);
        EXPECT_EQ(a.trial_ratio_variance, x.trial_ratio_variance);
    }
    EXPECT_EQ(a.trials, 8u);
    EXPECT_EQ(a.shots_used, 16000u);
}

TEST(scheme_shot_experiment, trials_use_split_seeds) {
    const SchemeSetup s = one_qubit_setup(SchemeKind::Raw, 0.1, 1);
    const std::vector<EstimateReport> trials = scheme_shot_trials(s, ShotConfig{500, 3, 4});
    ASSERT_EQ(trials.size(), 4u);
    EXPECT_NE(trials[0].ratio, trials[1].ratio);
    // trial 2 alone reproduces from its own prefix of the trial sequence
    const std::vector<EstimateReport> again = scheme_shot_trials(s, ShotConfig{500, 3, 3});
    EXPECT_EQ(again[2].ratio, trials[2].ratio);
}

TEST(scheme_shot_experiment, shot_split) {
    const SchemeSetup s = one_qubit_setup(SchemeKind::Combined, 0.1, 1);
    const EstimateReport r = scheme_shot_experiment(s, ShotConfig{1001, 2});
    EXPECT_EQ(r.shots_used, 1001u);
}

TEST(sampling_properties, convergence_for_every_scheme) {
    for (SchemeKind kind : all_scheme_kinds()) {
        const SchemeSetup s = one_qubit_setup(kind, 0.15, copies_for(kind));
        const std::vector<EstimateReport> trials =
            scheme_shot_trials(s, ShotConfig{100000, 2026, 100});
        int within = 0;
        for (const EstimateReport &r : trials) {
            if (std::abs(r.ratio - *r.exact_ratio) <= 5.0 * r.ratio_stderr) {
                ++within;
            }
        }
        EXPECT_GE(within, 99) << to_string(kind);
    }
}

TEST(sampling_properties, stderr_halves_with_four_times_shots) {
    const SchemeSetup s = one_qubit_setup(SchemeKind::MultiCopy, 0.2, 2);
    const auto mean_stderr = [&](std::uint64_t shots) {
        double acc = 0.0;
        for (const EstimateReport &r : scheme_shot_trials(s, ShotConfig{shots, 77, 50})) {
            acc += r.ratio_stderr;
        }
        return acc / 50.0;
    };
    const double ratio = mean_stderr(40000) / mean_stderr(10000);
    EXPECT_GE(ratio, 0.4);
    EXPECT_LE(ratio, 0.6);
}

TEST(sampling_properties, overhead_grows_with_noise) {
    double previous = 0.0;
    for (double p : {0.1, 0.2, 0.3}) {
        const SchemeSetup s = one_qubit_setup(SchemeKind::MultiCopy, p, 2);
        std::vector<double> ratios;
        for (const EstimateReport &r : scheme_shot_trials(s, ShotConfig{1000, 5, 400})) {
            ratios.push_back(r.ratio);
        }
        const double var = sample_variance(ratios);
        EXPECT_GE(var, previous) << "p = " << p;
        previous = var;
    }
}

TEST(sampling_properties, pooled_report_matches_trials) {
    const SchemeSetup s = one_qubit_setup(SchemeKind::StateVerification, 0.1, 1);
    const ShotConfig cfg{4000, 12, 6};
    const std::vector<EstimateReport> trials = scheme_shot_trials(s, cfg);
    const EstimateReport pooled = scheme_shot_experiment(s, cfg);
    double num = 0.0;
    double den = 0.0;
    std::vector<double> ratios;
    for (const EstimateReport &r : trials) {
        num += r.numerator_mean;
        den += r.denominator_mean;
        ratios.push_back(r.ratio);
    }
    EXPECT_NEAR(pooled.numerator_mean, num / 6.0, 1e-15);
    EXPECT_NEAR(pooled.denominator_mean, den / 6.0, 1e-15);
    EXPECT_NEAR(pooled.ratio, num / den, 1e-14);
    EXPECT_NEAR(pooled.trial_ratio_variance, sample_variance(ratios), 1e-15);
}
