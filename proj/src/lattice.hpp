//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file lattice.hpp
//! Periodic lattice fields, currents and drift of the lattice Burgers SDE.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssb
{
//---------------------------------------------------------------------------//
//! Base error type for the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
/*!
 * Field values u_j on the torus Z_M together with the microscopic time.
 *
 * Site indices passed to any accessor are reduced mod M, so negative and
 * out-of-range indices address the periodic image.
 */
class LatticeState
{
  public:
    LatticeState() = default;
    explicit LatticeState(std::vector<double> values, double time = 0.0);

    static LatticeState zeros(std::size_t sites);

    std::size_t size() const { return values_.size(); }
    double time() const { return time_; }
    void set_time(double t);

    double operator[](long j) const { return values_[wrap(j)]; }
    double& operator[](long j) { return values_[wrap(j)]; }

    std::span<double const> values() const { return values_; }
    std::span<double> values() { return values_; }

    std::size_t wrap(long j) const
    {
        long const m = static_cast<long>(values_.size());
        long r = j % m;
        return static_cast<std::size_t>(r < 0 ? r + m : r);
    }

    //! Cyclic shift: (tau_k u)_j = u_{j+k}.
    LatticeState shifted(long k) const;

    bool all_finite() const;

  private:
    std::vector<double> values_;
    double time_ = 0;
};

//---------------------------------------------------------------------------//
//! Minimum lattice size accepted anywhere in the library.
inline constexpr std::size_t min_sites = 4;

//---------------------------------------------------------------------------//
/*!
 * Scaling parameter n, coupling gamma and lattice size M.
 *
 * In scaling mode gamma is n^{-1/4}.
 */
struct ScalingParams
{
    std::uint64_t n = 1;
    double gamma = 1.0;
    std::size_t sites = min_sites;

    static ScalingParams scaling(std::uint64_t n, std::size_t sites);
    static ScalingParams fixed(std::uint64_t n, double gamma, std::size_t sites);
};

double scaling_gamma(std::uint64_t n);

//---------------------------------------------------------------------------//
/*!
 * Discretization of the quadratic current.
 *
 * The Sasamoto-Spohn current keeps the Gaussian product measure invariant;
 * the naive current w_j = u_j^2 does not and serves as a negative control.
 */
enum class Nonlinearity
{
    sasamoto_spohn,
    naive
};

char const* to_string(Nonlinearity);
Nonlinearity nonlinearity_from_string(std::string const&);

//---------------------------------------------------------------------------//
// Local operators (periodic, site index reduced mod M)
//---------------------------------------------------------------------------//

// w_j = (u_j^2 + u_j u_{j+1} + u_{j+1}^2) / 3
double local_current(LatticeState const& u, long j,
                     Nonlinearity kind = Nonlinearity::sasamoto_spohn);

// B_j = w_j - w_{j-1}
double nonlinearity(LatticeState const& u, long j,
                    Nonlinearity kind = Nonlinearity::sasamoto_spohn);

// u_{j+1} + u_{j-1} - 2 u_j
double discrete_laplacian(LatticeState const& u, long j);

//! Component j is (1/2) Laplacian + gamma * B_j.
std::vector<double> drift(LatticeState const& u, ScalingParams const& p,
                          Nonlinearity kind = Nonlinearity::sasamoto_spohn);

//---------------------------------------------------------------------------//
// Vectorized kernels used by the integrator; all spans have length M.
//---------------------------------------------------------------------------//

void current_field(std::span<double const> u, std::span<double> w,
                   Nonlinearity kind);
void nonlinearity_field(std::span<double const> u, std::span<double> b,
                        std::span<double> scratch, Nonlinearity kind);
void drift_field(std::span<double const> u, double gamma,
                 std::span<double> out, std::span<double> scratch,
                 Nonlinearity kind);

}  // namespace ssb
