//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file stats.hpp
//! Sample summaries and log-log regression used by the harness suites.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ssb
{
//---------------------------------------------------------------------------//
//! Mean, sample standard deviation and 95% normal interval of the mean.
struct SampleSummary
{
    std::size_t count = 0;
    double mean = 0;
    double sd = 0;

    double standard_error() const;
    //! 1.96 sd / sqrt(count)
    double half_width() const;
    double ci_low() const { return mean - half_width(); }
    double ci_high() const { return mean + half_width(); }
};

//! Two-pass summary; summation order is the order of the input.
SampleSummary summarize(std::span<double const> x);

//! Sample covariance with the (count - 1) normalization.
double sample_covariance(std::span<double const> x, std::span<double const> y);

//! Sample kurtosis m4 / m2^2 with biased central moments.
double sample_kurtosis(std::span<double const> x);

//---------------------------------------------------------------------------//
//! Ordinary least squares y = intercept + slope x.
struct LinearFit
{
    double slope = 0;
    double intercept = 0;
    double slope_se = 0;
    double r2 = 0;
    std::size_t points = 0;
};

//! Requires at least two distinct abscissae; slope_se needs three points.
LinearFit fit_line(std::span<double const> x, std::span<double const> y);

//! Fit of log y against log x; all inputs must be positive.
LinearFit fit_power_law(std::span<double const> x, std::span<double const> y);

//! Exponent fits below this R^2 are reported as inconclusive.
inline constexpr double min_fit_r2 = 0.9;

//---------------------------------------------------------------------------//
/*!
 * Per-replicate ratio estimate mean(x) / mean(y) with a delta-method
 * standard error.
 */
struct RatioEstimate
{
    double value = 0;
    double se = 0;
};

RatioEstimate ratio_of_means(std::span<double const> x,
                             std::span<double const> y);

}  // namespace ssb
