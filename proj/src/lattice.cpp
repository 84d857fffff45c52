//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file lattice.cpp
//---------------------------------------------------------------------------//
#include "lattice.hpp"

#include <algorithm>
#include <cmath>

namespace ssb
{
//---------------------------------------------------------------------------//
LatticeState::LatticeState(std::vector<double> values, double time)
    : values_(std::move(values)), time_(time)
{
    if (values_.size() < min_sites)
    {
        throw Error("lattice needs at least " + std::to_string(min_sites)
                    + " sites, got " + std::to_string(values_.size()));
    }
    if (!(time >= 0))
    {
        throw Error("lattice time must be non-negative");
    }
}

LatticeState LatticeState::zeros(std::size_t sites)
{
    return LatticeState(std::vector<double>(sites, 0.0));
}

void LatticeState::set_time(double t)
{
    if (!(t >= time_))
    {
        throw Error("lattice time may not decrease");
    }
    time_ = t;
}

LatticeState LatticeState::shifted(long k) const
{
    std::vector<double> out(values_.size());
    for (std::size_t j = 0; j < out.size(); ++j)
    {
        out[j] = (*this)[static_cast<long>(j) + k];
    }
    return LatticeState(std::move(out), time_);
}

bool LatticeState::all_finite() const
{
    return std::all_of(values_.begin(), values_.end(),
                       [](double x) { return std::isfinite(x); });
}

//---------------------------------------------------------------------------//
double scaling_gamma(std::uint64_t n)
{
    return std::pow(static_cast<double>(n), -0.25);
}

ScalingParams ScalingParams::scaling(std::uint64_t n, std::size_t sites)
{
    return fixed(n, scaling_gamma(n), sites);
}

ScalingParams ScalingParams::fixed(std::uint64_t n, double gamma,
                                   std::size_t sites)
{
    if (n == 0)
    {
        throw Error("scaling parameter n must be positive");
    }
    if (sites < min_sites)
    {
        throw Error("lattice needs at least 4 sites");
    }
    if (!(gamma >= 0) || !std::isfinite(gamma))
    {
        throw Error("coupling gamma must be finite and non-negative");
    }
    return ScalingParams{n, gamma, sites};
}

//---------------------------------------------------------------------------//
char const* to_string(Nonlinearity kind)
{
    switch (kind)
    {
        case Nonlinearity::sasamoto_spohn:
            return "sasamoto-spohn";
        case Nonlinearity::naive:
            return "naive";
    }
    return "?";
}

Nonlinearity nonlinearity_from_string(std::string const& s)
{
    if (s == "sasamoto-spohn")
        return Nonlinearity::sasamoto_spohn;
    if (s == "naive")
        return Nonlinearity::naive;
    throw Error("unknown nonlinearity '" + s + "'");
}

//---------------------------------------------------------------------------//
namespace
{
inline double current(double a, double b, Nonlinearity kind)
{
    if (kind == Nonlinearity::naive)
        return a * a;
    return (a * a + a * b + b * b) / 3.0;
}
}  // namespace

double local_current(LatticeState const& u, long j, Nonlinearity kind)
{
    return current(u[j], u[j + 1], kind);
}

double nonlinearity(LatticeState const& u, long j, Nonlinearity kind)
{
    return local_current(u, j, kind) - local_current(u, j - 1, kind);
}

double discrete_laplacian(LatticeState const& u, long j)
{
    return u[j + 1] + u[j - 1] - 2 * u[j];
}

std::vector<double>
drift(LatticeState const& u, ScalingParams const& p, Nonlinearity kind)
{
    if (u.size() != p.sites)
    {
        throw Error("state size does not match the scaling parameters");
    }
    std::vector<double> out(u.size());
    std::vector<double> scratch(u.size());
    drift_field(u.values(), p.gamma, out, scratch, kind);
    return out;
}

//---------------------------------------------------------------------------//
void current_field(std::span<double const> u, std::span<double> w,
                   Nonlinearity kind)
{
    std::size_t const m = u.size();
    for (std::size_t j = 0; j + 1 < m; ++j)
    {
        w[j] = current(u[j], u[j + 1], kind);
    }
    w[m - 1] = current(u[m - 1], u[0], kind);
}

void nonlinearity_field(std::span<double const> u, std::span<double> b,
                        std::span<double> w, Nonlinearity kind)
{
    current_field(u, w, kind);
    std::size_t const m = u.size();
    b[0] = w[0] - w[m - 1];
    for (std::size_t j = 1; j < m; ++j)
    {
        b[j] = w[j] - w[j - 1];
    }
}

void drift_field(std::span<double const> u, double gamma,
                 std::span<double> out, std::span<double> w,
                 Nonlinearity kind)
{
    std::size_t const m = u.size();
    current_field(u, w, kind);
    out[0] = 0.5 * (u[1] + u[m - 1] - 2 * u[0]) + gamma * (w[0] - w[m - 1]);
    for (std::size_t j = 1; j + 1 < m; ++j)
    {
        out[j] = 0.5 * (u[j + 1] + u[j - 1] - 2 * u[j])
                 + gamma * (w[j] - w[j - 1]);
    }
    out[m - 1] = 0.5 * (u[0] + u[m - 2] - 2 * u[m - 1])
                 + gamma * (w[m - 1] - w[m - 2]);
}

}  // namespace ssb
