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

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include "purify/errors.hpp"

namespace purify {

namespace {

constexpr double kMergeTolerance = 1e-9;
constexpr double kMaxClippedMass = 1e-6;

SampleSummary weighted_sum(const std::vector<SampleSummary> &parts,
                           const std::vector<double> &weights) {
    SampleSummary out;
    double var = 0.0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        out.mean += weights[k] * parts[k].mean;
        var += weights[k] * weights[k] * parts[k].std_error * parts[k].std_error;
    }
    out.std_error = std::sqrt(var);
    return out;
}

struct PreparedExperiment {
    SchemeMeasurements measurements;
    EstimateReport exact;
    std::vector<OutcomeDistribution> numerator;
    std::vector<double> weights;
    OutcomeDistribution denominator;
    std::uint64_t numerator_shots = 0;
    std::uint64_t denominator_shots = 0;
};

PreparedExperiment prepare(const SchemeSetup &setup, const ShotConfig &cfg) {
    cfg.validate();
    PreparedExperiment p;
    p.measurements = build_scheme_measurements(setup);
    p.exact = evaluate_measurements(p.measurements);
    for (const auto &b : p.measurements.numerator) {
        p.numerator.push_back(outcome_distribution(b.state, b.observable));
        p.weights.push_back(b.weight);
    }
    p.denominator =
        outcome_distribution(p.measurements.denominator.state,
                             p.measurements.denominator.observable);
    const std::uint64_t terms = p.numerator.size();
    const std::uint64_t num_total = cfg.shots / 2;
    p.numerator_shots = num_total / terms;
    p.denominator_shots = cfg.shots - num_total;
    if (p.numerator_shots == 0) {
        throw PreconditionError("shot budget " + std::to_string(cfg.shots) +
                                " too small for " + std::to_string(terms) +
                                " numerator terms");
    }
    return p;
}

EstimateReport run_trial(const PreparedExperiment &p, std::uint64_t trial_seed) {
    Rng den_rng(split_seed(trial_seed, 0));
    const SampleSummary den = sample_outcomes(p.denominator, p.denominator_shots, den_rng);
    std::vector<SampleSummary> parts;
    for (std::size_t k = 0; k < p.numerator.size(); ++k) {
        Rng rng(split_seed(trial_seed, k + 1));
        parts.push_back(sample_outcomes(p.numerator[k], p.numerator_shots, rng));
    }
    const SampleSummary num = weighted_sum(parts, p.weights);
    const RatioEstimate ratio = ratio_estimator(num, den);

    EstimateReport r;
    r.numerator_mean = num.mean;
    r.numerator_stderr = num.std_error;
    r.denominator_mean = den.mean;
    r.denominator_stderr = den.std_error;
    r.ratio = ratio.ratio;
    r.ratio_stderr = ratio.std_error;
    r.shots_used = p.denominator_shots + p.numerator_shots * p.numerator.size();
    r.exact_ratio = p.exact.ratio;
    r.ideal = p.exact.ideal;
    r.resource = p.exact.resource;
    r.numerator_imag = p.exact.numerator_imag;
    r.trials = 1;
    return r;
}

} // namespace

void ShotConfig::validate() const {
    if (shots < 1) {
        throw PreconditionError("shots must be at least 1");
    }
    if (trials < 1) {
        throw PreconditionError("trials must be at least 1");
    }
    if (workers < 1) {
        throw PreconditionError("workers must be at least 1");
    }
}

double OutcomeDistribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        m += probabilities[i] * outcomes[i];
    }
    return m;
}

OutcomeDistribution outcome_distribution(const ComplexMatrix &state,
                                         const ComplexMatrix &obs) {
    if (state.rows() != obs.rows() || state.cols() != obs.cols() ||
        obs.rows() != obs.cols()) {
        throw DimensionError("state and observable dimensions differ");
    }
    const HermitianEigen eig = hermitian_eig(obs);
    OutcomeDistribution dist;
    double clipped = 0.0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const auto v = eig.vectors.col(i);
        double p = v.dot(state * v).real();
        if (p < 0.0) {
            clipped -= p;
            p = 0.0;
        }
        const double x = eig.values(i);
        if (!dist.outcomes.empty() && std::abs(dist.outcomes.back() - x) <= kMergeTolerance) {
            dist.probabilities.back() += p;
        } else {
            dist.outcomes.push_back(x);
            dist.probabilities.push_back(p);
        }
    }
    if (clipped > kMaxClippedMass) {
        throw NumericalStateError("negative outcome probability mass " +
                                  std::to_string(clipped) + " exceeds 1e-6");
    }
    double total = 0.0;
    for (double p : dist.probabilities) {
        total += p;
    }
    if (!(total > 0.0)) {
        throw NumericalStateError("outcome distribution has no mass");
    }
    for (double &p : dist.probabilities) {
        p /= total;
    }
    return dist;
}

SampleSummary sample_outcomes(const OutcomeDistribution &dist, std::uint64_t shots,
                              Rng &rng) {
    if (shots == 0) {
        throw PreconditionError("shots must be at least 1");
    }
    const std::size_t k = dist.outcomes.size();
    std::vector<std::uint64_t> counts(k, 0);
    std::uint64_t remaining = shots;
    double remaining_mass = 1.0;
    for (std::size_t i = 0; i + 1 < k && remaining > 0; ++i) {
        const double q =
            remaining_mass > 0.0 ? std::clamp(dist.probabilities[i] / remaining_mass, 0.0, 1.0)
                                 : 0.0;
        std::binomial_distribution<std::uint64_t> draw(remaining, q);
        counts[i] = draw(rng);
        remaining -= counts[i];
        remaining_mass -= dist.probabilities[i];
    }
    counts[k - 1] += remaining;

    const double n = static_cast<double>(shots);
    double mean = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        mean += static_cast<double>(counts[i]) * dist.outcomes[i];
    }
    mean /= n;
    double ss = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double dx = dist.outcomes[i] - mean;
        ss += static_cast<double>(counts[i]) * dx * dx;
    }
    SampleSummary out;
    out.mean = mean;
    out.std_error = shots > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    return out;
}

SampleSummary sample_expectation(const DensityOperator &state, const ComplexMatrix &obs,
                                 const ShotConfig &cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    return sample_outcomes(outcome_distribution(state.matrix(), obs), cfg.shots, rng);
}

RatioEstimate ratio_estimator(const SampleSummary &num, const SampleSummary &den) {
    if (den.mean == 0.0 || std::abs(den.mean) < 3.0 * den.std_error) {
        throw UnstableDenominatorError("denominator " + std::to_string(den.mean) +
                                       " is within 3 standard errors (" +
                                       std::to_string(den.std_error) + ") of zero");
    }
    RatioEstimate r;
    r.ratio = num.mean / den.mean;
    const double a = num.std_error / den.mean;
    const double b = num.mean * den.std_error / (den.mean * den.mean);
    r.std_error = std::sqrt(a * a + b * b);
    return r;
}

std::vector<EstimateReport> scheme_shot_trials(const SchemeSetup &setup,
                                               const ShotConfig &cfg) {
    const PreparedExperiment p = prepare(setup, cfg);
    const std::size_t trials = cfg.trials;
    std::vector<EstimateReport> out(trials);
    std::vector<std::exception_ptr> errors(trials);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t t = first; t < trials; t += stride) {
            try {
                out[t] = run_trial(p, split_seed(cfg.seed, t));
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min<std::size_t>(cfg.workers, trials);
    if (workers <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work, w, workers);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

EstimateReport scheme_shot_experiment(const SchemeSetup &setup, const ShotConfig &cfg) {
    const std::vector<EstimateReport> trials = scheme_shot_trials(setup, cfg);
    const double t = static_cast<double>(trials.size());
    SampleSummary num;
    SampleSummary den;
    double num_var = 0.0;
    double den_var = 0.0;
    double ratio_mean = 0.0;
    std::uint64_t shots = 0;
    for (const auto &r : trials) {
        num.mean += r.numerator_mean / t;
        den.mean += r.denominator_mean / t;
        num_var += r.numerator_stderr * r.numerator_stderr;
        den_var += r.denominator_stderr * r.denominator_stderr;
        ratio_mean += r.ratio / t;
        shots += r.shots_used;
    }
    num.std_error = std::sqrt(num_var) / t;
    den.std_error = std::sqrt(den_var) / t;
    const RatioEstimate pooled = ratio_estimator(num, den);

    EstimateReport out = trials.front();
    out.numerator_mean = num.mean;
    out.numerator_stderr = num.std_error;
    out.denominator_mean = den.mean;
    out.denominator_stderr = den.std_error;
    out.ratio = pooled.ratio;
    out.ratio_stderr = pooled.std_error;
    out.shots_used = shots;
    out.trials = trials.size();
    double var = 0.0;
    if (trials.size() > 1) {
        for (const auto &r : trials) {
            var += (r.ratio - ratio_mean) * (r.ratio - ratio_mean);
        }
        var /= t - 1.0;
    }
    out.trial_ratio_variance = var;
    return out;
}

} // namespace purify
