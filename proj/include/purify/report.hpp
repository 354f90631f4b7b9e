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
#include <optional>

#include "purify/resources.hpp"

namespace purify {

/// Output of every estimator, exact or sampled.
///
/// ratio = numerator / denominator. Exact estimators leave all stderrs at 0
/// and set ratio == exact_ratio. `exact_ratio` is the infinite-shot value of
/// the simulated procedure (including any machinery noise); `ideal` is the
/// noiseless Tr(O rho0) when the estimator knows it.
struct EstimateReport {
    double numerator_mean = 0.0;
    double denominator_mean = 0.0;
    double ratio = 0.0;
    double numerator_stderr = 0.0;
    double denominator_stderr = 0.0;
    double ratio_stderr = 0.0;
    std::uint64_t shots_used = 0;
    std::optional<double> exact_ratio;
    std::optional<double> ideal;
    ResourceProfile resource;

    /// Imaginary part of the exact numerator (zero for Hermitian targets).
    double numerator_imag = 0.0;
    /// |composite form - reduced form| where an estimator computes both.
    std::optional<double> form_residual;
    /// Sample variance of the per-trial ratios (0 for a single trial).
    double trial_ratio_variance = 0.0;
    std::uint64_t trials = 1;

    std::optional<double> bias() const {
        if (!exact_ratio || !ideal) {
            return std::nullopt;
        }
        return *exact_ratio - *ideal;
    }
};

} // namespace purify
