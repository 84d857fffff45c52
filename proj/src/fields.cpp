//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fields.cpp
//---------------------------------------------------------------------------//
#include "fields.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace ssb
{
namespace
{
double quarter_root(std::uint64_t n)
{
    return std::pow(static_cast<double>(n), 0.25);
}

// Prefix sums P[i] = sum_{k < i} w[k]
std::vector<double> prefix_sums(std::span<double const> w)
{
    std::vector<double> p(w.size() + 1, 0.0);
    for (std::size_t i = 0; i < w.size(); ++i)
        p[i + 1] = p[i] + w[i];
    return p;
}

double q_sum(std::span<double const> w, std::vector<double> const& prefix,
             std::span<double const> weights, std::size_t l)
{
    // f index k sits at window index k + 1; its block is k + 2 .. k + 1 + l.
    double const inv_l = 1.0 / static_cast<double>(l);
    double acc = 0;
    for (std::size_t k = 0; k < weights.size(); ++k)
    {
        double const mean = (prefix[k + 2 + l] - prefix[k + 2]) * inv_l;
        acc += (mean * mean - inv_l) * weights[k];
    }
    (void)w;
    return acc;
}

std::string format_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}
}  // namespace

//---------------------------------------------------------------------------//
void check_fits(LatticeState const& u, SampledTestFunction const& f)
{
    if (f.span() > u.size())
    {
        throw Error("test function window of " + std::to_string(f.span())
                    + " sites does not fit on a torus of "
                    + std::to_string(u.size()) + " sites");
    }
}

std::vector<double> gather_window(LatticeState const& u,
                                  SampledTestFunction const& f, long offset,
                                  std::size_t extra, std::size_t pad)
{
    check_fits(u, f);
    std::size_t const count = f.span() + extra + pad;
    std::vector<double> w(count);
    long const first = f.lo() + offset - static_cast<long>(pad);
    auto const values = u.values();
    std::size_t site = u.wrap(first);
    for (std::size_t i = 0; i < count; ++i)
    {
        w[i] = values[site];
        if (++site == values.size())
            site = 0;
    }
    return w;
}

//---------------------------------------------------------------------------//
double weighted_field(LatticeState const& u, SampledTestFunction const& f,
                      std::span<double const> weights, long offset)
{
    if (weights.size() != f.span())
        throw Error("weights do not match the test function window");
    auto const w = gather_window(u, f, offset, 0);
    double acc = 0;
    for (std::size_t k = 0; k < weights.size(); ++k)
        acc += weights[k] * w[k + 1];
    return acc / quarter_root(f.n());
}

double fluctuation_field(LatticeState const& u, SampledTestFunction const& f,
                         long offset)
{
    return weighted_field(u, f, f.values(), offset);
}

double symmetric_increment(LatticeState const& u, SampledTestFunction const& f,
                           long offset)
{
    return 0.5 * weighted_field(u, f, f.laplacian(), offset);
}

double antisymmetric_increment(LatticeState const& u,
                               SampledTestFunction const& f, long offset,
                               Nonlinearity kind)
{
    auto const w = gather_window(u, f, offset, 1);
    auto const grad = f.gradient();
    double acc = 0;
    for (std::size_t k = 0; k < grad.size(); ++k)
    {
        double const a = w[k + 1];
        double const b = w[k + 2];
        double const current = kind == Nonlinearity::naive
                                   ? a * a
                                   : (a * a + a * b + b * b) / 3.0;
        acc += current * grad[k];
    }
    return -acc;
}

//---------------------------------------------------------------------------//
double block_average(LatticeState const& u, long j, std::size_t l)
{
    if (l == 0)
        throw Error("block length must be positive");
    double acc = 0;
    for (std::size_t k = 1; k <= l; ++k)
        acc += u[j + static_cast<long>(k)];
    return acc / static_cast<double>(l);
}

double q_statistic(LatticeState const& u, long j, std::size_t l)
{
    double const mean = block_average(u, j, l);
    return mean * mean - 1.0 / static_cast<double>(l);
}

double q_field_increment(LatticeState const& u, SampledTestFunction const& f,
                         std::size_t l, long offset)
{
    if (l == 0)
        throw Error("block length must be positive");
    auto const w = gather_window(u, f, offset, l);
    auto const prefix = prefix_sums(w);
    return q_sum(w, prefix, f.gradient(), l);
}

double bg_residual_increment(LatticeState const& u,
                             SampledTestFunction const& f, std::size_t l,
                             long offset)
{
    if (l == 0)
        throw Error("block length must be positive");
    auto const w = gather_window(u, f, offset, std::max<std::size_t>(l, 1));
    auto const prefix = prefix_sums(w);
    auto const grad = f.gradient();
    double pair = 0;
    for (std::size_t k = 0; k < grad.size(); ++k)
        pair += w[k + 1] * w[k + 2] * grad[k];
    return pair - q_sum(w, prefix, grad, l);
}

double ucp_statistic_increment(LatticeState const& u,
                               SampledTestFunction const& f, long offset)
{
    auto const w = gather_window(u, f, offset, 1);
    auto const phi = f.values();
    double acc = 0;
    for (std::size_t k = 0; k < phi.size(); ++k)
    {
        double const a = w[k + 1];
        acc += phi[k] * ((a * w[k + 2] - a * a) + 1.0);
    }
    return acc;
}

std::size_t epsilon_block(double eps, std::uint64_t n)
{
    double const raw = eps * std::sqrt(static_cast<double>(n));
    // Guard against eps sqrt(n) landing a hair below an integer.
    auto const l = static_cast<long long>(std::floor(raw + 1e-9));
    if (!(eps > 0) || l < 1)
    {
        throw Error("block size floor(eps sqrt n) = floor("
                    + format_double(raw) + ") is below 1 for eps = "
                    + format_double(eps) + ", n = " + std::to_string(n));
    }
    return static_cast<std::size_t>(l);
}

double a_epsilon_increment(LatticeState const& u, SampledTestFunction const& f,
                           double eps, long offset)
{
    return q_field_increment(u, f, epsilon_block(eps, f.n()), offset);
}

double continuum_a_epsilon_increment(LatticeState const& u,
                                     SampledTestFunction const& f, double eps,
                                     long offset)
{
    epsilon_block(eps, f.n());
    double const root = std::sqrt(static_cast<double>(f.n()));
    auto const extra = static_cast<std::size_t>(std::ceil(eps * root)) + 2;
    auto const w = gather_window(u, f, offset, extra);
    auto const prefix = prefix_sums(w);
    // window index i holds site lo - 1 + i
    auto sum_sites = [&](long first, long last) {
        first = std::max(first, f.lo() - 1);
        last = std::min(last, f.lo() - 1 + static_cast<long>(w.size()) - 1);
        if (last < first)
            return 0.0;
        auto const a = static_cast<std::size_t>(first - (f.lo() - 1));
        auto const b = static_cast<std::size_t>(last - (f.lo() - 1));
        return prefix[b + 1] - prefix[a];
    };
    double const h = eps / 4;
    double const x_lo = static_cast<double>(f.lo()) / root;
    double const x_hi = static_cast<double>(f.hi()) / root;
    auto const steps = static_cast<long>(std::ceil((x_hi - x_lo) / h));
    double const scale = 1.0 / (std::pow(static_cast<double>(f.n()), 0.25) * eps);
    double acc = 0;
    for (long s = 0; s <= steps; ++s)
    {
        double const x = x_lo + h * static_cast<double>(s);
        long const first = static_cast<long>(std::floor(x * root)) + 1;
        long const last = static_cast<long>(std::floor((x + eps) * root));
        double const field = scale * sum_sites(first, last);
        acc += (field * field - 1.0 / eps) * f.function().d1(x);
    }
    return acc * h;
}

double gradient_surrogate(LatticeState const& u, SampledTestFunction const& f,
                          long offset)
{
    auto const w = gather_window(u, f, offset, 1);
    auto const grad = f.gradient();
    double acc = 0;
    for (std::size_t k = 0; k < grad.size(); ++k)
        acc += (w[k + 2] - w[k + 1]) * grad[k];
    return acc * quarter_root(f.n());
}

//---------------------------------------------------------------------------//
LocalObservable::LocalObservable()
    : LocalObservable(CylinderPolynomial<double>::monomial(
                          Monomial::variable(0, 2), 1.0)
                      - CylinderPolynomial<double>::constant(1.0))
{
}

LocalObservable::LocalObservable(CylinderPolynomial<double> g)
    : g_(std::move(g))
{
    auto const sites = g_.sites();
    if (!sites.empty())
    {
        min_site_ = std::min(0L, sites.front());
        max_site_ = std::max(0L, sites.back());
    }
    for (auto const& [m, c] : g_.terms())
        flat_.emplace_back(c, m.factors());
}

double LocalObservable::l2_norm_squared() const
{
    return wick_expectation(g_ * g_);
}

void LocalObservable::check_admissible(std::size_t l) const
{
    for (long s : g_.sites())
    {
        if (s >= 1 && s <= static_cast<long>(l))
        {
            throw Error("local observable support meets the block {1,...,"
                        + std::to_string(l) + "}");
        }
    }
    if (std::abs(wick_expectation(g_)) > 1e-12)
        throw Error("local observable is not centered under the product "
                    "Gaussian measure");
}

double LocalObservable::evaluate_at(std::span<double const> window,
                                    std::size_t center) const
{
    double total = 0;
    for (auto const& [c, factors] : flat_)
    {
        double term = c;
        for (auto const& [site, power] : factors)
        {
            double const x = window[static_cast<std::size_t>(
                static_cast<long>(center) + site)];
            for (int k = 0; k < power; ++k)
                term *= x;
        }
        total += term;
    }
    return total;
}

double one_block_increment(LatticeState const& u, SampledTestFunction const& f,
                           LocalObservable const& g, std::size_t l,
                           long offset)
{
    g.check_admissible(l);
    auto const pad = static_cast<std::size_t>(1 - std::min(0L, g.min_site()));
    auto const extra
        = std::max<std::size_t>(l, static_cast<std::size_t>(g.max_site()));
    auto const w = gather_window(u, f, offset, extra, pad);
    auto const prefix = prefix_sums(w);
    auto const grad = f.gradient();
    double const inv_l = 1.0 / static_cast<double>(l);
    double acc = 0;
    for (std::size_t k = 0; k < grad.size(); ++k)
    {
        std::size_t const i = k + pad;
        double const mean = (prefix[i + 1 + l] - prefix[i + 1]) * inv_l;
        acc += g.evaluate_at(w, i) * (w[i + 1] - mean) * grad[k];
    }
    return acc;
}

//---------------------------------------------------------------------------//
std::string FieldSeries::to_csv() const
{
    std::ostringstream os;
    os << "t,X,S,B,M_residual,M_direct,QV,QV_residual";
    for (double e : epsilons)
        os << ",A_eps=" << format_double(e);
    os << '\n';
    for (auto const& r : rows)
    {
        os << format_double(r.t) << ',' << format_double(r.x) << ','
           << format_double(r.s) << ',' << format_double(r.b) << ','
           << format_double(r.m_residual) << ',' << format_double(r.m_direct)
           << ',' << format_double(r.qv) << ','
           << format_double(r.qv_residual);
        for (double a : r.a)
            os << ',' << format_double(a);
        os << '\n';
    }
    return os.str();
}

FieldDecomposition::FieldDecomposition(SampledTestFunction const& f,
                                       ScalingParams const& p, double dt,
                                       long offset,
                                       std::vector<double> epsilons,
                                       Nonlinearity kind)
    : f_(f), params_(p), dt_(dt), offset_(offset), kind_(kind)
{
    if (f.span() > p.sites)
        throw Error("test function window does not fit on the torus");
    double const q = quarter_root(f.n());
    auto const phi = f.values();
    noise_weights_.resize(phi.size());
    for (std::size_t k = 0; k < phi.size(); ++k)
    {
        double const next = k + 1 < phi.size() ? phi[k + 1] : 0.0;
        noise_weights_[k] = (phi[k] - next) / q;
    }
    for (double e : epsilons)
        blocks_.push_back(epsilon_block(e, f.n()));
    series_.epsilons = std::move(epsilons);
    a_.assign(blocks_.size(), 0.0);
}

void FieldDecomposition::on_step(LatticeState const& u,
                                 std::span<double const> eta, std::size_t)
{
    double const ds = dt_ / static_cast<double>(f_.n());
    double const coupling = params_.gamma * quarter_root(f_.n());
    double const x = fluctuation_field(u, f_, offset_);
    close_increment(x);
    double drift = ds * symmetric_increment(u, f_, offset_);
    s_ += drift;
    if (coupling != 0)
    {
        double const b
            = ds * coupling * antisymmetric_increment(u, f_, offset_, kind_);
        b_ += b;
        drift += b;
    }
    x_prev_ = x;
    pending_drift_ = drift;
    open_ = true;
    double inc = 0;
    long const first = f_.lo() + offset_;
    for (std::size_t k = 0; k < noise_weights_.size(); ++k)
        inc += noise_weights_[k] * eta[u.wrap(first + static_cast<long>(k))];
    m_ += inc;
    qv_ += inc * inc;
    for (std::size_t e = 0; e < blocks_.size(); ++e)
        a_[e] += ds * q_field_increment(u, f_, blocks_[e], offset_);
}

void FieldDecomposition::close_increment(double x)
{
    if (!open_)
        return;
    double const inc = x - x_prev_ - pending_drift_;
    qv_res_ += inc * inc;
    open_ = false;
}

void FieldDecomposition::record(LatticeState const& u, std::size_t)
{
    double const x = fluctuation_field(u, f_, offset_);
    close_increment(x);
    if (!started_)
    {
        x0_ = x;
        started_ = true;
    }
    FieldSeriesRow row;
    row.t = u.time() / static_cast<double>(f_.n());
    row.x = x;
    row.s = s_;
    row.b = b_;
    row.m_residual = x - x0_ - s_ - b_;
    row.m_direct = m_;
    row.qv = qv_;
    row.qv_residual = qv_res_;
    row.a = a_;
    series_.rows.push_back(std::move(row));
}

}  // namespace ssb
