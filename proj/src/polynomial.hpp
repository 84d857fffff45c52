//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polynomial.hpp
//! Polynomial cylinder functions and exact Gaussian (Wick) calculus.
//!
//! Expectations are taken under the product standard Gaussian measure on the
//! lattice sites. The generator of the periodic lattice dynamics maps
//! polynomials to polynomials, so E[L f] can be evaluated exactly.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lattice.hpp"

namespace ssb
{
using Rational = boost::multiprecision::cpp_rational;

//---------------------------------------------------------------------------//
/*!
 * Product of powers of site variables, sorted by site with positive
 * exponents. The empty monomial is the constant 1.
 */
class Monomial
{
  public:
    using Factor = std::pair<long, int>;

    Monomial() = default;
    //! Canonicalizes: sorts, merges repeated sites, drops zero exponents.
    explicit Monomial(std::vector<Factor> factors);
    static Monomial variable(long site, int power = 1);

    std::vector<Factor> const& factors() const { return factors_; }
    int degree() const;
    int exponent(long site) const;
    bool empty() const { return factors_.empty(); }

    Monomial operator*(Monomial const& other) const;
    //! Exponent of `site` lowered by one (caller checks exponent > 0).
    Monomial lowered(long site) const;
    //! Sites reduced mod M.
    Monomial wrapped(std::size_t sites) const;

    auto operator<=>(Monomial const&) const = default;

    std::string to_string() const;

  private:
    std::vector<Factor> factors_;
};

//! E[x^k] for standard normal x: (k-1)!! for even k, 0 for odd k.
long long gaussian_moment(int k);

//---------------------------------------------------------------------------//
inline double to_double(double x)
{
    return x;
}
inline double to_double(Rational const& x)
{
    return x.convert_to<double>();
}
inline double abs_value(double x)
{
    return x < 0 ? -x : x;
}
inline Rational abs_value(Rational const& x)
{
    return x < 0 ? Rational(-x) : x;
}

//---------------------------------------------------------------------------//
/*!
 * Sparse polynomial in finitely many site variables.
 *
 * Zero coefficients are never stored.
 */
template<class Scalar>
class CylinderPolynomial
{
  public:
    using Terms = std::map<Monomial, Scalar>;

    CylinderPolynomial() = default;
    static CylinderPolynomial constant(Scalar c);
    static CylinderPolynomial variable(long site);
    static CylinderPolynomial monomial(Monomial m, Scalar c);

    Terms const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    //! Smallest and largest site present; {0, -1} for constants.
    std::pair<long, long> window() const;
    std::size_t window_width() const;
    //! All sites that occur, ascending.
    std::vector<long> sites() const;

    void add_term(Monomial const& m, Scalar const& c);

    CylinderPolynomial& operator+=(CylinderPolynomial const& o);
    CylinderPolynomial& operator-=(CylinderPolynomial const& o);
    CylinderPolynomial operator+(CylinderPolynomial const& o) const;
    CylinderPolynomial operator-(CylinderPolynomial const& o) const;
    CylinderPolynomial operator*(CylinderPolynomial const& o) const;
    CylinderPolynomial scaled(Scalar const& c) const;

    //! Sites reduced mod M.
    CylinderPolynomial wrapped(std::size_t sites) const;

    double evaluate(std::function<double(long)> const& value_at) const;

    template<class T>
    CylinderPolynomial<T> cast() const;

    std::string to_string() const;

  private:
    Terms terms_;
};

//---------------------------------------------------------------------------//
// Wick calculus
//---------------------------------------------------------------------------//

template<class Scalar>
Scalar wick_expectation(CylinderPolynomial<Scalar> const& p);

template<class Scalar>
CylinderPolynomial<Scalar>
partial_derivative(CylinderPolynomial<Scalar> const& p, long site);

enum class GeneratorPart
{
    full,
    symmetric,
    antisymmetric
};

/*!
 * Generator of the dynamics on Z_M applied to p:
 *
 *   sum_j (1/2)(d_{j+1} - d_j)^2 - (1/2)(u_{j+1} - u_j)(d_{j+1} - d_j)
 *         + gamma B_j(u) d_j
 *
 * The first two terms form the symmetric part, the last the antisymmetric
 * part. Requires M >= window + 2 so the generator's one-site spread cannot
 * wrap onto the window; the result lives on sites 0..M-1.
 */
template<class Scalar>
CylinderPolynomial<Scalar>
apply_generator(CylinderPolynomial<Scalar> const& p, Scalar const& gamma,
                std::size_t sites, GeneratorPart part = GeneratorPart::full,
                Nonlinearity kind = Nonlinearity::sasamoto_spohn);

//! |E[L_M p]|; zero for every polynomial iff the product measure is invariant.
template<class Scalar>
Scalar check_invariance(CylinderPolynomial<Scalar> const& p,
                        Scalar const& gamma, std::size_t sites,
                        GeneratorPart part = GeneratorPart::full,
                        Nonlinearity kind = Nonlinearity::sasamoto_spohn);

//! |E[u_j p] - E[d_j p]|
template<class Scalar>
Scalar check_ibp(CylinderPolynomial<Scalar> const& p, long site);

//---------------------------------------------------------------------------//
// Random corpus
//---------------------------------------------------------------------------//

class NoiseStream;

/*!
 * Random polynomial with integer coefficients in [-5, 5] \ {0}, total degree
 * at most max_degree, on sites 0 .. window-1 where window is drawn from
 * 1..max_window.
 */
CylinderPolynomial<Rational>
random_polynomial(NoiseStream& rng, int max_degree, int max_window);

}  // namespace ssb

#include "polynomial.inl"
