//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file harness_common.cpp
//---------------------------------------------------------------------------//
#include "harness_common.hpp"

#include <cmath>

namespace ssb
{
//---------------------------------------------------------------------------//
std::vector<long>
copy_offsets(std::size_t sites, std::size_t span, std::size_t reach)
{
    std::size_t const width = span + reach;
    std::size_t const count = std::max<std::size_t>(1, sites / width);
    std::vector<long> out(count);
    for (std::size_t c = 0; c < count; ++c)
        out[c] = static_cast<long>(c * sites / count);
    return out;
}

//---------------------------------------------------------------------------//
QuadratureObserver::QuadratureObserver(std::size_t width, std::uint64_t n,
                                       Integrand f)
    : width_(width), n_(static_cast<double>(n)), f_(std::move(f))
{
}

void QuadratureObserver::record(LatticeState const& u, std::size_t)
{
    std::vector<double> value(width_, 0.0);
    f_(u, value);
    double const t = u.time() / n_;
    std::vector<double> integral(width_, 0.0);
    if (!times_.empty())
    {
        double const ds = t - times_.back();
        auto const& prev = values_.back();
        auto const& acc = integrals_.back();
        for (std::size_t i = 0; i < width_; ++i)
            integral[i] = acc[i] + ds * prev[i];
    }
    times_.push_back(t);
    integrals_.push_back(std::move(integral));
    values_.push_back(std::move(value));
}

std::size_t QuadratureObserver::index_of(double t) const
{
    for (std::size_t k = 0; k < times_.size(); ++k)
    {
        if (std::abs(times_[k] - t) <= 1e-9 * std::max(1.0, std::abs(t)))
            return k;
    }
    throw Error("time " + format_number(t) + " is not on the record grid");
}

//---------------------------------------------------------------------------//
EstimateRow estimate(std::string quantity, std::span<double const> samples)
{
    EstimateRow row;
    row.quantity = std::move(quantity);
    row.with(summarize(samples));
    return row;
}

FitRow add_power_fit(Report& report, std::string quantity,
                     std::string variable, std::span<double const> x,
                     std::span<double const> y)
{
    FitRow row;
    row.quantity = std::move(quantity);
    row.variable = std::move(variable);
    row.fit = fit_power_law(x, y);
    report.add(row);
    return row;
}

bool check_exponent(Report& report, std::string name, FitRow const& fit,
                    double lo, double hi)
{
    CheckRow c;
    c.name = std::move(name);
    c.value = fit.fit.slope;
    c.lower = lo;
    c.upper = hi;
    if (!fit.conclusive())
    {
        c.passed = false;
        c.detail = "inconclusive: R^2 = " + format_number(fit.fit.r2)
                   + " below " + format_number(min_fit_r2);
    }
    else
    {
        c.passed = fit.fit.slope >= lo && fit.fit.slope <= hi;
        c.detail = "exponent " + format_number(fit.fit.slope) + " +- "
                   + format_number(fit.fit.slope_se) + ", R^2 = "
                   + format_number(fit.fit.r2);
    }
    return report.check(std::move(c));
}

Report make_report(ExperimentConfig const& cfg)
{
    return Report(cfg.suite, cfg.canonical_text(), cfg.hash(), cfg.seed);
}

}  // namespace ssb
