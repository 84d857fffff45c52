//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file stats.cpp
//---------------------------------------------------------------------------//
#include "stats.hpp"

#include <cmath>
#include <vector>

#include "lattice.hpp"

namespace ssb
{
namespace
{
double mean_of(std::span<double const> x)
{
    double acc = 0;
    for (double v : x)
        acc += v;
    return acc / static_cast<double>(x.size());
}
}  // namespace

//---------------------------------------------------------------------------//
double SampleSummary::standard_error() const
{
    return count > 0 ? sd / std::sqrt(static_cast<double>(count)) : 0.0;
}

double SampleSummary::half_width() const
{
    return 1.96 * standard_error();
}

SampleSummary summarize(std::span<double const> x)
{
    SampleSummary s;
    s.count = x.size();
    if (x.empty())
        return s;
    s.mean = mean_of(x);
    if (x.size() > 1)
    {
        double ss = 0;
        for (double v : x)
            ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(x.size() - 1));
    }
    return s;
}

double sample_covariance(std::span<double const> x, std::span<double const> y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw Error("covariance needs two equal-length samples of size >= 2");
    double const mx = mean_of(x);
    double const my = mean_of(y);
    double acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += (x[i] - mx) * (y[i] - my);
    return acc / static_cast<double>(x.size() - 1);
}

double sample_kurtosis(std::span<double const> x)
{
    if (x.size() < 2)
        throw Error("kurtosis needs at least two samples");
    double const m = mean_of(x);
    double m2 = 0;
    double m4 = 0;
    for (double v : x)
    {
        double const d2 = (v - m) * (v - m);
        m2 += d2;
        m4 += d2 * d2;
    }
    auto const count = static_cast<double>(x.size());
    m2 /= count;
    m4 /= count;
    return m4 / (m2 * m2);
}

//---------------------------------------------------------------------------//
LinearFit fit_line(std::span<double const> x, std::span<double const> y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw Error("line fit needs two equal-length samples of size >= 2");
    double const mx = mean_of(x);
    double const my = mean_of(y);
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0)
        throw Error("line fit needs at least two distinct abscissae");
    LinearFit fit;
    fit.points = x.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double sse = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double const r = y[i] - fit.intercept - fit.slope * x[i];
        sse += r * r;
    }
    fit.r2 = syy > 0 ? 1.0 - sse / syy : 1.0;
    if (x.size() > 2)
        fit.slope_se
            = std::sqrt(sse / static_cast<double>(x.size() - 2) / sxx);
    return fit;
}

LinearFit fit_power_law(std::span<double const> x, std::span<double const> y)
{
    std::vector<double> lx(x.size());
    std::vector<double> ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (!(x[i] > 0))
            throw Error("power-law fit needs positive abscissae");
        lx[i] = std::log(x[i]);
    }
    for (std::size_t i = 0; i < y.size(); ++i)
    {
        if (!(y[i] > 0))
            throw Error("power-law fit needs positive ordinates");
        ly[i] = std::log(y[i]);
    }
    return fit_line(lx, ly);
}

//---------------------------------------------------------------------------//
RatioEstimate ratio_of_means(std::span<double const> x,
                             std::span<double const> y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw Error("ratio estimate needs two equal-length samples");
    double const mx = mean_of(x);
    double const my = mean_of(y);
    if (my == 0)
        throw Error("ratio estimate with zero denominator mean");
    RatioEstimate r;
    r.value = mx / my;
    // Var(mx - r my) / (N my^2)
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = x[i] - r.value * y[i];
    auto const s = summarize(z);
    r.se = s.standard_error() / std::abs(my);
    return r;
}

}  // namespace ssb
