//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polynomial.cpp
//---------------------------------------------------------------------------//
#include "polynomial.hpp"

#include <algorithm>

#include "rng.hpp"

namespace ssb
{
//---------------------------------------------------------------------------//
Monomial::Monomial(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end());
    for (auto const& f : factors)
    {
        if (f.second < 0)
            throw Error("negative exponent in monomial");
        if (f.second == 0)
            continue;
        if (!factors_.empty() && factors_.back().first == f.first)
            factors_.back().second += f.second;
        else
            factors_.push_back(f);
    }
}

Monomial Monomial::variable(long site, int power)
{
    return Monomial({{site, power}});
}

int Monomial::degree() const
{
    int d = 0;
    for (auto const& f : factors_)
        d += f.second;
    return d;
}

int Monomial::exponent(long site) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(),
                               Factor{site, 0});
    return (it != factors_.end() && it->first == site) ? it->second : 0;
}

Monomial Monomial::operator*(Monomial const& other) const
{
    std::vector<Factor> merged = factors_;
    merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
    return Monomial(std::move(merged));
}

Monomial Monomial::lowered(long site) const
{
    std::vector<Factor> f = factors_;
    for (auto& [s, e] : f)
    {
        if (s == site)
            --e;
    }
    return Monomial(std::move(f));
}

Monomial Monomial::wrapped(std::size_t sites) const
{
    long const m = static_cast<long>(sites);
    std::vector<Factor> f = factors_;
    for (auto& [s, e] : f)
        s = ((s % m) + m) % m;
    return Monomial(std::move(f));
}

std::string Monomial::to_string() const
{
    std::string out;
    for (auto const& [s, e] : factors_)
    {
        if (!out.empty())
            out += "*";
        out += "u" + std::to_string(s);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

long long gaussian_moment(int k)
{
    if (k < 0)
        throw Error("negative moment order");
    if (k % 2 == 1)
        return 0;
    long long r = 1;
    for (int i = k - 1; i > 1; i -= 2)
        r *= i;
    return r;
}

//---------------------------------------------------------------------------//
CylinderPolynomial<Rational>
random_polynomial(NoiseStream& rng, int max_degree, int max_window)
{
    auto draw = [&rng](int lo, int hi) {
        return lo
               + static_cast<int>(rng.uniform()
                                  * static_cast<double>(hi - lo + 1));
    };
    int const window = draw(1, max_window);
    int const n_terms = draw(1, 6);
    CylinderPolynomial<Rational> p;
    for (int t = 0; t < n_terms; ++t)
    {
        int const degree = draw(0, max_degree);
        std::vector<Monomial::Factor> factors;
        for (int k = 0; k < degree; ++k)
            factors.emplace_back(draw(0, window - 1), 1);
        int coeff = draw(1, 5);
        if (rng.uniform() < 0.5)
            coeff = -coeff;
        p.add_term(Monomial(std::move(factors)), Rational(coeff));
    }
    return p;
}

}  // namespace ssb
