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

#include <cstdint>
#include <vector>

#include "purify/random.hpp"
#include "purify/report.hpp"
#include "purify/schemes.hpp"
#include "purify/tensor.hpp"

namespace purify {

struct ShotConfig {
    std::uint64_t shots = 1000;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    /// Threads used for independent trials. Results do not depend on it.
    unsigned workers = 1;

    /// Throws PreconditionError unless shots >= 1, trials >= 1, workers >= 1.
    void validate() const;
};

/// Mean and standard error of a batch of single-shot outcomes.
struct SampleSummary {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Distinct eigenvalues of an observable with their Born probabilities.
struct OutcomeDistribution {
    std::vector<double> outcomes;
    std::vector<double> probabilities;

    /// Exact expectation sum_i p_i x_i.
    double mean() const;
};

/// Eigendecomposes `obs` and computes <v_i|state|v_i>, merging eigenvalues
/// within 1e-9. Negative probabilities are clipped to zero; if the clipped
/// mass exceeds 1e-6 a NumericalStateError is thrown. The distribution is
/// renormalised to unit total.
OutcomeDistribution outcome_distribution(const ComplexMatrix &state,
                                         const ComplexMatrix &obs);

/// Draws `shots` outcomes (multinomial counts via sequential binomials).
SampleSummary sample_outcomes(const OutcomeDistribution &dist, std::uint64_t shots,
                              Rng &rng);

/// Born-rule sampling of `obs` on `state` with cfg.shots shots seeded by
/// cfg.seed. Deterministic for a given seed.
SampleSummary sample_expectation(const DensityOperator &state, const ComplexMatrix &obs,
                                 const ShotConfig &cfg);

struct RatioEstimate {
    double ratio = 0.0;
    double std_error = 0.0;
};

/// num.mean / den.mean with first-order delta-method error
/// sqrt((num.se / den.mean)^2 + (num.mean den.se / den.mean^2)^2), which is
/// |ratio| sqrt((num.se/num.mean)^2 + (den.se/den.mean)^2) whenever
/// num.mean != 0. Throws UnstableDenominatorError when
/// |den.mean| < 3 den.se or den.mean == 0.
RatioEstimate ratio_estimator(const SampleSummary &num, const SampleSummary &den);

/// One report per trial. Trial t uses seed split_seed(cfg.seed, t); within
/// a trial the denominator batch uses stream 0 and numerator term k uses
/// stream k + 1. Shots are split evenly between numerator and denominator,
/// and the numerator half evenly across Pauli terms.
std::vector<EstimateReport> scheme_shot_trials(const SchemeSetup &setup,
                                               const ShotConfig &cfg);

/// All trials pooled: numerator and denominator means averaged over trials,
/// ratio from the pooled means, trial_ratio_variance from the per-trial
/// ratios. exact_ratio holds the infinite-shot value of the same circuits.
EstimateReport scheme_shot_experiment(const SchemeSetup &setup, const ShotConfig &cfg);

} // namespace purify
