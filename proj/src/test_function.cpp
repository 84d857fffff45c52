//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_function.cpp
//---------------------------------------------------------------------------//
#include "test_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lattice.hpp"

namespace ssb
{
//---------------------------------------------------------------------------//
char const* to_string(TestFamily f)
{
    switch (f)
    {
        case TestFamily::gaussian:
            return "gaussian";
        case TestFamily::hermite:
            return "hermite";
        case TestFamily::smoothed_indicator:
            return "smoothed-indicator";
    }
    return "?";
}

TestFamily test_family_from_string(std::string const& s)
{
    if (s == "gaussian")
        return TestFamily::gaussian;
    if (s == "hermite")
        return TestFamily::hermite;
    if (s == "smoothed-indicator")
        return TestFamily::smoothed_indicator;
    throw Error("unknown test function family '" + s + "'");
}

//---------------------------------------------------------------------------//
namespace
{
constexpr double inv_sqrt_2pi = 0.3989422804014327;

double normal_pdf(double z)
{
    return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

double normal_cdf(double z)
{
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

// Trapezoid rule on [a, b]; spectrally accurate for smooth functions that
// vanish at both ends.
template<class F>
double trapezoid(F&& f, double a, double b, std::size_t intervals)
{
    double const h = (b - a) / static_cast<double>(intervals);
    double acc = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i < intervals; ++i)
        acc += f(a + h * static_cast<double>(i));
    return acc * h;
}
}  // namespace

TestFunction::TestFunction(TestFamily family, double param, double shift)
    : family_(family), param_(param), shift_(shift)
{
    if (!(param > 0) || !std::isfinite(param))
        throw Error("test function parameter must be positive");

    // Scan outward on a fine grid for the truncation radius.
    double const reach = family_ == TestFamily::smoothed_indicator
                             ? param_ * 4.0
                             : param_ * 8.0;
    std::size_t const grid = 16000;
    double peak = 0;
    for (std::size_t i = 0; i <= grid; ++i)
    {
        double const y = -reach + 2 * reach * static_cast<double>(i)
                                      / static_cast<double>(grid);
        peak = std::max(peak, std::abs(raw(y, 0)));
    }
    double const cut = truncation_threshold * peak;
    double extent = 0;
    for (std::size_t i = 0; i <= grid; ++i)
    {
        double const y = -reach + 2 * reach * static_cast<double>(i)
                                      / static_cast<double>(grid);
        if (std::abs(raw(y, 0)) >= cut)
            extent = std::max(extent, std::abs(y));
    }
    radius_ = extent + 2 * reach / static_cast<double>(grid);

    // Derivative self-check by central differences: error O(h^2).
    double const h = 1e-4 * param_;
    for (int i = -20; i <= 20; ++i)
    {
        double const x = shift_ + 0.1 * param_ * i;
        double const fd1 = (value(x + h) - value(x - h)) / (2 * h);
        double const fd2 = (value(x + h) + value(x - h) - 2 * value(x))
                           / (h * h);
        double const scale1 = 1 + std::abs(d1(x));
        double const scale2 = 1 + std::abs(d2(x));
        if (std::abs(fd1 - d1(x)) > 1e-5 * scale1 / param_
            || std::abs(fd2 - d2(x)) > 1e-3 * scale2 / (param_ * param_))
        {
            throw Error("test function derivatives fail the finite-difference "
                        "check at x = "
                        + std::to_string(x));
        }
    }

    double const lo = shift_ - radius_;
    double const hi = shift_ + radius_;
    std::size_t const intervals = 20000;
    energy_ = trapezoid([this](double x) { return std::pow(value(x), 2); },
                        lo, hi, intervals);
    gradient_energy_ = trapezoid(
        [this](double x) { return std::pow(d1(x), 2); }, lo, hi, intervals);
}

double TestFunction::raw(double y, int order) const
{
    double const s = param_;
    switch (family_)
    {
        case TestFamily::gaussian: {
            double const z = y / s;
            double const g = std::exp(-z * z);
            if (order == 0)
                return g;
            if (order == 1)
                return -2 * z * g / s;
            return (4 * z * z - 2) * g / (s * s);
        }
        case TestFamily::hermite: {
            double const z = y / s;
            double const g = std::exp(-z * z);
            if (order == 0)
                return z * g;
            if (order == 1)
                return (1 - 2 * z * z) * g / s;
            return (4 * z * z * z - 6 * z) * g / (s * s);
        }
        case TestFamily::smoothed_indicator: {
            double const eps = s;
            double const sigma = eps / 8;
            double const a = y / sigma;
            double const b = (y - eps) / sigma;
            if (order == 0)
                return (normal_cdf(a) - normal_cdf(b)) / eps;
            if (order == 1)
                return (normal_pdf(a) - normal_pdf(b)) / (eps * sigma);
            return (-a * normal_pdf(a) + b * normal_pdf(b))
                   / (eps * sigma * sigma);
        }
    }
    return 0;
}

double TestFunction::value(double x) const
{
    return raw(x - shift_, 0);
}
double TestFunction::d1(double x) const
{
    return raw(x - shift_, 1);
}
double TestFunction::d2(double x) const
{
    return raw(x - shift_, 2);
}

std::string TestFunction::describe() const
{
    std::ostringstream os;
    os << to_string(family_) << "(param=" << param_ << ", shift=" << shift_
       << ")";
    return os.str();
}

double inner_product(TestFunction const& phi, TestFunction const& psi)
{
    double const lo = std::min(phi.shift(), psi.shift())
                      - std::max(phi.support_radius(), psi.support_radius());
    double const hi = std::max(phi.shift(), psi.shift())
                      + std::max(phi.support_radius(), psi.support_radius());
    return trapezoid(
        [&](double x) { return phi.value(x) * psi.value(x); }, lo, hi, 40000);
}

//---------------------------------------------------------------------------//
std::uint64_t ceil_sqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r < n)
        ++r;
    while (r > 0 && (r - 1) * (r - 1) >= n)
        --r;
    return r;
}

std::size_t required_sites(std::uint64_t n, double support_radius)
{
    double const m = 8.0 * static_cast<double>(ceil_sqrt(n)) * support_radius;
    return static_cast<std::size_t>(std::ceil(m - 1e-9));
}

double discrete_energy(std::span<double const> psi, std::uint64_t n)
{
    double acc = 0;
    for (double v : psi)
        acc += v * v;
    return acc / std::sqrt(static_cast<double>(n));
}

//---------------------------------------------------------------------------//
SampledTestFunction::SampledTestFunction(TestFunction const& phi,
                                         std::uint64_t n)
    : phi_(phi), n_(n)
{
    if (n == 0)
        throw Error("scaling parameter n must be positive");
    double const root = std::sqrt(static_cast<double>(n));
    // Window: indices with |j / sqrt n - shift| <= R (R measured from 0)
    double const r = phi.support_radius();
    long const first = static_cast<long>(std::ceil((phi.shift() - r) * root));
    long const last = static_cast<long>(std::floor((phi.shift() + r) * root));
    lo_ = std::min(first, last) - 1;
    hi_ = std::max(first, last) + 1;
    std::size_t const count = static_cast<std::size_t>(hi_ - lo_ + 1);

    values_.assign(count, 0.0);
    d1_.assign(count, 0.0);
    d2_.assign(count, 0.0);
    for (long j = first; j <= last; ++j)
    {
        double const x = static_cast<double>(j) / root;
        auto const i = static_cast<std::size_t>(j - lo_);
        values_[i] = phi.value(x);
        d1_[i] = phi.d1(x);
        d2_[i] = phi.d2(x);
    }
    gradient_.assign(count, 0.0);
    laplacian_.assign(count, 0.0);
    double const nd = static_cast<double>(n);
    for (std::size_t i = 0; i < count; ++i)
    {
        double const next = i + 1 < count ? values_[i + 1] : 0.0;
        double const prev = i > 0 ? values_[i - 1] : 0.0;
        gradient_[i] = root * (next - values_[i]);
        laplacian_[i] = nd * (next + prev - 2 * values_[i]);
    }
    energy_ = discrete_energy(values_, n);
    gradient_energy_ = discrete_energy(gradient_, n);
    laplacian_energy_ = discrete_energy(laplacian_, n);
}

std::size_t SampledTestFunction::required_sites() const
{
    return ssb::required_sites(
        n_, phi_.support_radius() + std::abs(phi_.shift()));
}

}  // namespace ssb
