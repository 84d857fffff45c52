//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file integrator.hpp
//! Time stepping of the lattice SDE with conservative noise.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "rng.hpp"

namespace ssb
{
class RealFft;

//---------------------------------------------------------------------------//
enum class Scheme
{
    euler,
    ou_splitting
};

char const* to_string(Scheme);
Scheme scheme_from_string(std::string const&);

//---------------------------------------------------------------------------//
/*!
 * Time discretization. Times are microscopic.
 *
 * Snapshots are recorded at step 0, every `record_stride` steps, and at the
 * final step.
 */
struct IntegratorConfig
{
    Scheme scheme = Scheme::ou_splitting;
    double dt = 0.01;
    double t_end = 1.0;
    std::size_t record_stride = 1;

    //! Throws Error on violation.
    void validate() const;
    //! Number of steps to reach t_end (rounded to nearest).
    std::size_t total_steps() const;
};

//---------------------------------------------------------------------------//
//! Non-finite state encountered while stepping.
class TrajectoryError : public Error
{
  public:
    TrajectoryError(std::uint64_t seed, std::uint64_t replicate,
                    std::size_t step);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t replicate() const { return replicate_; }
    std::size_t step() const { return step_; }

  private:
    std::uint64_t seed_;
    std::uint64_t replicate_;
    std::size_t step_;
};

//---------------------------------------------------------------------------//
// Sampling
//---------------------------------------------------------------------------//

//! M i.i.d. standard normals at time 0.
LatticeState sample_invariant(NoiseStream& rng, std::size_t sites);

//! d_j = eta_j - eta_{j-1} with eta_j ~ N(0, dt) i.i.d. (periodic).
std::vector<double>
sample_conservative_noise(NoiseStream& rng, double dt, std::size_t sites);

//! d_j = eta_j - eta_{j-1} for given increments.
void conservative_difference(std::span<double const> eta,
                             std::span<double> out);

//---------------------------------------------------------------------------//
/*!
 * Reusable single-trajectory stepper with preallocated workspace.
 *
 * The step is driven by Brownian increments eta_j ~ N(0, dt); the
 * conservative noise is their backward difference. The ou-splitting scheme
 * applies an explicit nonlinear kick followed by the exact Ornstein-Uhlenbeck
 * flow of (1/2) Laplacian, whose noise is the same conservative increment
 * passed through the per-mode filter sqrt((1 - e^{-lambda dt}) / (lambda dt)).
 */
class Stepper
{
  public:
    Stepper(ScalingParams const& params, IntegratorConfig const& config,
            Nonlinearity kind = Nonlinearity::sasamoto_spohn);
    ~Stepper();
    Stepper(Stepper&&) noexcept;
    Stepper& operator=(Stepper&&) noexcept;

    //! Draw the next eta from the stream into the internal buffer.
    void draw(NoiseStream& rng);
    //! Mutable access to eta (e.g. to force zero noise).
    std::span<double> eta() { return eta_; }
    std::span<double const> eta() const { return eta_; }

    //! Advance the values of u by dt using the current eta; time untouched.
    void advance(LatticeState& u);

    void step(LatticeState& u, NoiseStream& rng)
    {
        draw(rng);
        advance(u);
    }

    ScalingParams const& params() const { return params_; }
    IntegratorConfig const& config() const { return config_; }

  private:
    ScalingParams params_;
    IntegratorConfig config_;
    Nonlinearity kind_;
    std::vector<double> eta_;
    std::vector<double> work_;
    std::vector<double> scratch_;
    // ou-splitting only
    std::unique_ptr<RealFft> fft_;
    std::vector<double> decay_;
    std::vector<double> filter_;
    std::vector<std::complex<double>> kicked_hat_;

    void advance_euler(LatticeState& u);
    void advance_ou(LatticeState& u);
};

//---------------------------------------------------------------------------//
// Single steps (allocate a fresh stepper; convenient for tests)
//---------------------------------------------------------------------------//

LatticeState euler_step(LatticeState const& u, ScalingParams const& p,
                        IntegratorConfig const& cfg, NoiseStream& rng,
                        Nonlinearity kind = Nonlinearity::sasamoto_spohn);
LatticeState euler_step(LatticeState const& u, ScalingParams const& p,
                        IntegratorConfig const& cfg,
                        std::span<double const> eta,
                        Nonlinearity kind = Nonlinearity::sasamoto_spohn);

LatticeState ou_splitting_step(LatticeState const& u, ScalingParams const& p,
                               IntegratorConfig const& cfg, NoiseStream& rng,
                               Nonlinearity kind
                               = Nonlinearity::sasamoto_spohn);
LatticeState ou_splitting_step(LatticeState const& u, ScalingParams const& p,
                               IntegratorConfig const& cfg,
                               std::span<double const> eta,
                               Nonlinearity kind
                               = Nonlinearity::sasamoto_spohn);

//---------------------------------------------------------------------------//
/*!
 * Field observer invoked by simulate().
 *
 * record() sees the state at every recorded step. Observers that return true
 * from wants_steps() also see, before each step, the left-endpoint state and
 * the Brownian increments eta driving that step.
 */
class Observer
{
  public:
    virtual ~Observer() = default;
    virtual void record(LatticeState const& u, std::size_t step) = 0;
    virtual bool wants_steps() const { return false; }
    virtual void on_step(LatticeState const&, std::span<double const>,
                         std::size_t)
    {
    }
};

/*!
 * Realized noise integral sum_steps sum_j w_j eta_j for weights placed at
 * a window offset on the torus, with its per-step realized quadratic
 * variation. Values are sampled at every recorded step.
 */
class NoiseIntegral final : public Observer
{
  public:
    NoiseIntegral(std::vector<double> weights, long offset);

    void record(LatticeState const& u, std::size_t step) override;
    bool wants_steps() const override { return true; }
    void on_step(LatticeState const& u, std::span<double const> eta,
                 std::size_t step) override;

    double value() const { return value_; }
    double realized_qv() const { return qv_; }
    std::vector<double> const& series() const { return series_; }
    std::vector<double> const& qv_series() const { return qv_series_; }

  private:
    std::vector<double> weights_;
    long offset_;
    double value_ = 0;
    double qv_ = 0;
    std::vector<double> series_;
    std::vector<double> qv_series_;
};

struct TrajectorySummary
{
    LatticeState final_state;
    std::size_t steps = 0;
    std::vector<std::size_t> record_steps;
    std::vector<double> record_times;
};

/*!
 * Integrate from u0 to cfg.t_end.
 *
 * Throws TrajectoryError (seed, replicate, step) on a non-finite state.
 */
TrajectorySummary simulate(LatticeState u0, ScalingParams const& p,
                           IntegratorConfig const& cfg, NoiseStream& rng,
                           std::span<Observer* const> observers,
                           Nonlinearity kind = Nonlinearity::sasamoto_spohn);

}  // namespace ssb
