//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polynomial.inl
//! Template definitions for polynomial.hpp.
//---------------------------------------------------------------------------//
#pragma once

#include <set>
#include <sstream>

namespace ssb
{
//---------------------------------------------------------------------------//
template<class S>
CylinderPolynomial<S> CylinderPolynomial<S>::constant(S c)
{
    return monomial(Monomial{}, std::move(c));
}

template<class S>
CylinderPolynomial<S> CylinderPolynomial<S>::variable(long site)
{
    return monomial(Monomial::variable(site), S(1));
}

template<class S>
CylinderPolynomial<S> CylinderPolynomial<S>::monomial(Monomial m, S c)
{
    CylinderPolynomial p;
    p.add_term(m, c);
    return p;
}

template<class S>
int CylinderPolynomial<S>::degree() const
{
    int d = 0;
    for (auto const& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

template<class S>
std::vector<long> CylinderPolynomial<S>::sites() const
{
    std::set<long> s;
    for (auto const& [m, c] : terms_)
        for (auto const& f : m.factors())
            s.insert(f.first);
    return {s.begin(), s.end()};
}

template<class S>
std::pair<long, long> CylinderPolynomial<S>::window() const
{
    auto const s = sites();
    if (s.empty())
        return {0, -1};
    return {s.front(), s.back()};
}

template<class S>
std::size_t CylinderPolynomial<S>::window_width() const
{
    auto const [lo, hi] = window();
    return static_cast<std::size_t>(hi - lo + 1);
}

template<class S>
void CylinderPolynomial<S>::add_term(Monomial const& m, S const& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

template<class S>
CylinderPolynomial<S>& CylinderPolynomial<S>::operator+=(CylinderPolynomial const& o)
{
    for (auto const& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

template<class S>
CylinderPolynomial<S>& CylinderPolynomial<S>::operator-=(CylinderPolynomial const& o)
{
    for (auto const& [m, c] : o.terms_)
        add_term(m, S(-c));
    return *this;
}

template<class S>
CylinderPolynomial<S> CylinderPolynomial<S>::operator+(CylinderPolynomial const& o) const
{
    CylinderPolynomial r = *this;
    r += o;
    return r;
}

template<class S>
CylinderPolynomial<S> CylinderPolynomial<S>::operator-(CylinderPolynomial const& o) const
{
    CylinderPolynomial r = *this;
    r -= o;
    return r;
}

template<class S>
CylinderPolynomial<S> CylinderPolynomial<S>::operator*(CylinderPolynomial const& o) const
{
    CylinderPolynomial r;
    for (auto const& [ma, ca] : terms_)
        for (auto const& [mb, cb] : o.terms_)
            r.add_term(ma * mb, S(ca * cb));
    return r;
}

template<class S>
CylinderPolynomial<S> CylinderPolynomial<S>::scaled(S const& c) const
{
    CylinderPolynomial r;
    for (auto const& [m, v] : terms_)
        r.add_term(m, S(v * c));
    return r;
}

template<class S>
CylinderPolynomial<S> CylinderPolynomial<S>::wrapped(std::size_t sites) const
{
    CylinderPolynomial r;
    for (auto const& [m, c] : terms_)
        r.add_term(m.wrapped(sites), c);
    return r;
}

template<class S>
double CylinderPolynomial<S>::evaluate(
    std::function<double(long)> const& value_at) const
{
    double total = 0;
    for (auto const& [m, c] : terms_)
    {
        double term = to_double(c);
        for (auto const& [site, power] : m.factors())
        {
            double const x = value_at(site);
            for (int k = 0; k < power; ++k)
                term *= x;
        }
        total += term;
    }
    return total;
}

template<class S>
template<class T>
CylinderPolynomial<T> CylinderPolynomial<S>::cast() const
{
    CylinderPolynomial<T> r;
    for (auto const& [m, c] : terms_)
    {
        if constexpr (std::is_same_v<T, double>)
            r.add_term(m, to_double(c));
        else
            r.add_term(m, T(c));
    }
    return r;
}

template<class S>
std::string CylinderPolynomial<S>::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto const& [m, c] : terms_)
    {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")";
        if (!m.empty())
            os << "*" << m.to_string();
    }
    return os.str();
}

//---------------------------------------------------------------------------//
template<class S>
S wick_expectation(CylinderPolynomial<S> const& p)
{
    S total(0);
    for (auto const& [m, c] : p.terms())
    {
        long long moment = 1;
        for (auto const& f : m.factors())
        {
            moment *= gaussian_moment(f.second);
            if (moment == 0)
                break;
        }
        if (moment != 0)
            total += S(c * S(moment));
    }
    return total;
}

template<class S>
CylinderPolynomial<S>
partial_derivative(CylinderPolynomial<S> const& p, long site)
{
    CylinderPolynomial<S> r;
    for (auto const& [m, c] : p.terms())
    {
        int const e = m.exponent(site);
        if (e > 0)
            r.add_term(m.lowered(site), S(c * S(e)));
    }
    return r;
}

namespace detail
{
template<class S>
CylinderPolynomial<S> var(long site, std::size_t m)
{
    long const ms = static_cast<long>(m);
    return CylinderPolynomial<S>::variable(((site % ms) + ms) % ms);
}

template<class S>
CylinderPolynomial<S> current_poly(long j, std::size_t m, Nonlinearity kind)
{
    auto const a = var<S>(j, m);
    auto const b = var<S>(j + 1, m);
    if (kind == Nonlinearity::naive)
        return a * a;
    return (a * a + a * b + b * b).scaled(S(1) / S(3));
}
}  // namespace detail

template<class S>
CylinderPolynomial<S>
apply_generator(CylinderPolynomial<S> const& p0, S const& gamma,
                std::size_t sites, GeneratorPart part, Nonlinearity kind)
{
    if (sites < min_sites)
        throw Error("generator requires at least 4 sites");
    if (!p0.is_zero() && p0.window_width() + 2 > sites)
    {
        throw Error("polynomial window of width "
                    + std::to_string(p0.window_width())
                    + " does not fit in Z_" + std::to_string(sites)
                    + " with a one-site margin");
    }
    auto const p = p0.wrapped(sites);
    long const ms = static_cast<long>(sites);
    auto wrap = [ms](long j) { return ((j % ms) + ms) % ms; };

    std::set<long> active;
    for (long s : p.sites())
    {
        active.insert(s);
        active.insert(wrap(s - 1));
    }

    CylinderPolynomial<S> out;
    S const half = S(1) / S(2);
    if (part != GeneratorPart::antisymmetric)
    {
        for (long j : active)
        {
            long const jp = wrap(j + 1);
            auto const dp = partial_derivative(p, jp) - partial_derivative(p, j);
            if (dp.is_zero())
                continue;
            auto const ddp = partial_derivative(dp, jp)
                             - partial_derivative(dp, j);
            auto const grad = detail::var<S>(jp, sites)
                              - detail::var<S>(j, sites);
            out += ddp.scaled(half);
            out -= (grad * dp).scaled(half);
        }
    }
    if (part != GeneratorPart::symmetric && gamma != 0)
    {
        for (long j : p.sites())
        {
            auto const dj = partial_derivative(p, j);
            auto const b = detail::current_poly<S>(j, sites, kind)
                           - detail::current_poly<S>(j - 1, sites, kind);
            out += (b * dj).scaled(gamma);
        }
    }
    return out;
}

template<class S>
S check_invariance(CylinderPolynomial<S> const& p, S const& gamma,
                   std::size_t sites, GeneratorPart part, Nonlinearity kind)
{
    return abs_value(wick_expectation(apply_generator(p, gamma, sites, part, kind)));
}

template<class S>
S check_ibp(CylinderPolynomial<S> const& p, long site)
{
    auto const lhs = wick_expectation(CylinderPolynomial<S>::variable(site) * p);
    auto const rhs = wick_expectation(partial_derivative(p, site));
    return abs_value(S(lhs - rhs));
}

}  // namespace ssb
