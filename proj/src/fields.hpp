//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fields.hpp
//! Rescaled fluctuation field, its drift/martingale decomposition, and the
//! local statistics (block averages, Q, A^eps integrands) built on it.
//!
//! Every operation pairs the lattice with a SampledTestFunction whose index
//! range [lo, hi] is placed at torus sites lo + offset .. hi + offset.
//! Macroscopic time t corresponds to microscopic time t n.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "integrator.hpp"
#include "lattice.hpp"
#include "polynomial.hpp"
#include "test_function.hpp"

namespace ssb
{
//---------------------------------------------------------------------------//
// Window access
//---------------------------------------------------------------------------//

/*!
 * Copy of u at torus sites lo + offset - pad ... hi + offset + extra.
 *
 * Index i of the returned vector holds u_{lo + offset + i - pad}.
 */
std::vector<double> gather_window(LatticeState const& u,
                                  SampledTestFunction const& f, long offset,
                                  std::size_t extra, std::size_t pad = 1);

//! Throws if the test-function window does not fit on the torus.
void check_fits(LatticeState const& u, SampledTestFunction const& f);

//---------------------------------------------------------------------------//
// Field and drift rates
//---------------------------------------------------------------------------//

//! X^n(phi) = n^{-1/4} sum_j u_j phi^n_j
double fluctuation_field(LatticeState const& u, SampledTestFunction const& f,
                         long offset = 0);

//! n^{-1/4} sum_j u_j psi_j for arbitrary weights psi on f's index range.
double weighted_field(LatticeState const& u, SampledTestFunction const& f,
                      std::span<double const> weights, long offset = 0);

/*!
 * Rate of the symmetric drift part: (1/2) n^{-1/4} sum_j u_j Lap^n phi_j,
 * so that dS^n_t = symmetric_increment dt in macroscopic time.
 */
double symmetric_increment(LatticeState const& u, SampledTestFunction const& f,
                           long offset = 0);

/*!
 * Rate of the antisymmetric drift part at gamma = n^{-1/4}:
 * -sum_j w_j grad^n phi_j (summation by parts of sum_j phi_j B_j).
 */
double antisymmetric_increment(LatticeState const& u,
                               SampledTestFunction const& f, long offset = 0,
                               Nonlinearity kind = Nonlinearity::sasamoto_spohn);

//---------------------------------------------------------------------------//
// Block statistics
//---------------------------------------------------------------------------//

//! (1/l) sum_{k=1}^{l} u_{j+k}
double block_average(LatticeState const& u, long j, std::size_t l);

//! Q(l, tau_j u) = block_average(u, j, l)^2 - 1/l
double q_statistic(LatticeState const& u, long j, std::size_t l);

//! sum_j {u_j u_{j+1} - tau_j Q(l, u)} grad^n phi_j
double bg_residual_increment(LatticeState const& u,
                             SampledTestFunction const& f, std::size_t l,
                             long offset = 0);

//! sum_j tau_j Q(l, u) grad^n phi_j
double q_field_increment(LatticeState const& u, SampledTestFunction const& f,
                         std::size_t l, long offset = 0);

//! sum_j phi_j {(u_j u_{j+1} - u_j^2) + 1}
double ucp_statistic_increment(LatticeState const& u,
                               SampledTestFunction const& f, long offset = 0);

//! Block size floor(eps sqrt n); throws when it is below 1.
std::size_t epsilon_block(double eps, std::uint64_t n);

//! sum_j tau_j Q(floor(eps sqrt n), u) grad^n phi_j
double a_epsilon_increment(LatticeState const& u, SampledTestFunction const& f,
                           double eps, long offset = 0);

/*!
 * Continuum form of the A^eps integrand,
 * int (X^n(i_eps(x))^2 - 1/eps) phi'(x) dx, on an x-grid of spacing eps/4.
 * Agrees with a_epsilon_increment only as n grows.
 */
double continuum_a_epsilon_increment(LatticeState const& u,
                                     SampledTestFunction const& f, double eps,
                                     long offset = 0);

//! n^{1/4} sum_j (u_{j+1} - u_j) grad^n phi_j
double gradient_surrogate(LatticeState const& u, SampledTestFunction const& f,
                          long offset = 0);

//---------------------------------------------------------------------------//
/*!
 * Centered local observable g for the one-block estimate.
 *
 * g is a polynomial in sites relative to j; g_j(u) = g(tau_j u). Its support
 * must avoid {1, ..., l} and its Gaussian mean must vanish.
 */
class LocalObservable
{
  public:
    //! Default g(u) = u_0^2 - 1.
    LocalObservable();
    explicit LocalObservable(CylinderPolynomial<double> g);

    CylinderPolynomial<double> const& polynomial() const { return g_; }
    //! ||g||^2 in L^2 of the product Gaussian measure.
    double l2_norm_squared() const;
    //! Throws if the support meets {1, ..., l} or E[g] != 0.
    void check_admissible(std::size_t l) const;
    //! Largest positive / most negative site offsets used.
    long max_site() const { return max_site_; }
    long min_site() const { return min_site_; }

    double evaluate_at(std::span<double const> window, std::size_t center) const;

  private:
    CylinderPolynomial<double> g_;
    std::vector<std::pair<double, std::vector<std::pair<long, int>>>> flat_;
    long min_site_ = 0;
    long max_site_ = 0;
};

//! sum_j g_j (u_{j+1} - block_average_j) grad^n phi_j
double one_block_increment(LatticeState const& u, SampledTestFunction const& f,
                           LocalObservable const& g, std::size_t l,
                           long offset = 0);

//---------------------------------------------------------------------------//
// Decomposition series
//---------------------------------------------------------------------------//

struct FieldSeriesRow
{
    double t = 0;  //!< macroscopic time
    double x = 0;
    double s = 0;
    double b = 0;
    double m_residual = 0;
    double m_direct = 0;
    double qv = 0;  //!< realized quadratic variation of m_direct
    double qv_residual = 0;  //!< realized quadratic variation of m_residual
    std::vector<double> a;  //!< cumulative A^eps integrals, one per epsilon
};

struct FieldSeries
{
    std::vector<double> epsilons;
    std::vector<FieldSeriesRow> rows;

    //! CSV with header t,X,S,B,M_residual,M_direct,QV,QV_residual,
    //! A_eps=<eps>...
    std::string to_csv() const;
};

/*!
 * Observer building X^n, S^n, B^n and both martingale constructions.
 *
 * Drift integrals use left-endpoint quadrature per integrator step, the
 * same rule as the Euler step, so X - X_0 - S - B equals the direct noise
 * sum up to rounding under the Euler scheme.
 */
class FieldDecomposition final : public Observer
{
  public:
    FieldDecomposition(SampledTestFunction const& f, ScalingParams const& p,
                       double dt, long offset = 0,
                       std::vector<double> epsilons = {},
                       Nonlinearity kind = Nonlinearity::sasamoto_spohn);

    void record(LatticeState const& u, std::size_t step) override;
    bool wants_steps() const override { return true; }
    void on_step(LatticeState const& u, std::span<double const> eta,
                 std::size_t step) override;

    FieldSeries const& series() const { return series_; }

  private:
    SampledTestFunction const& f_;
    ScalingParams params_;
    double dt_;
    long offset_;
    Nonlinearity kind_;
    std::vector<double> noise_weights_;
    std::vector<std::size_t> blocks_;
    double x0_ = 0;
    double s_ = 0;
    double b_ = 0;
    double m_ = 0;
    double qv_ = 0;
    double qv_res_ = 0;
    // Residual increment of the step that starts at x_prev_
    double x_prev_ = 0;
    double pending_drift_ = 0;
    bool open_ = false;
    std::vector<double> a_;

    void close_increment(double x);
    bool started_ = false;
    FieldSeries series_;
};

}  // namespace ssb
