//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file integrator.cpp
//---------------------------------------------------------------------------//
#include "integrator.hpp"

#include <cmath>

#include "spectral.hpp"

namespace ssb
{
//---------------------------------------------------------------------------//
char const* to_string(Scheme s)
{
    return s == Scheme::euler ? "euler" : "ou-splitting";
}

Scheme scheme_from_string(std::string const& s)
{
    if (s == "euler")
        return Scheme::euler;
    if (s == "ou-splitting")
        return Scheme::ou_splitting;
    throw Error("unknown scheme '" + s + "'");
}

void IntegratorConfig::validate() const
{
    if (!(dt > 0) || !std::isfinite(dt))
        throw Error("dt must be positive");
    if (scheme == Scheme::euler && !(dt < 1))
        throw Error("euler scheme requires dt < 1 (explicit stability)");
    if (!(t_end >= 0) || (t_end > 0 && t_end < dt * (1 - 1e-12)))
        throw Error("t_end must be zero or at least dt");
    if (record_stride == 0)
        throw Error("record_stride must be positive");
}

std::size_t IntegratorConfig::total_steps() const
{
    return static_cast<std::size_t>(std::llround(t_end / dt));
}

//---------------------------------------------------------------------------//
TrajectoryError::TrajectoryError(std::uint64_t seed, std::uint64_t replicate,
                                 std::size_t step)
    : Error("non-finite lattice state at step " + std::to_string(step)
            + " (seed " + std::to_string(seed) + ", replicate "
            + std::to_string(replicate) + ")")
    , seed_(seed)
    , replicate_(replicate)
    , step_(step)
{
}

//---------------------------------------------------------------------------//
LatticeState sample_invariant(NoiseStream& rng, std::size_t sites)
{
    std::vector<double> values(sites);
    rng.fill_normal(values);
    return LatticeState(std::move(values));
}

void conservative_difference(std::span<double const> eta,
                             std::span<double> out)
{
    std::size_t const m = eta.size();
    out[0] = eta[0] - eta[m - 1];
    for (std::size_t j = 1; j < m; ++j)
    {
        out[j] = eta[j] - eta[j - 1];
    }
}

std::vector<double>
sample_conservative_noise(NoiseStream& rng, double dt, std::size_t sites)
{
    if (!(dt > 0))
        throw Error("dt must be positive");
    std::vector<double> eta(sites);
    rng.fill_normal(eta, std::sqrt(dt));
    std::vector<double> d(sites);
    conservative_difference(eta, d);
    return d;
}

//---------------------------------------------------------------------------//
Stepper::Stepper(ScalingParams const& params, IntegratorConfig const& config,
                 Nonlinearity kind)
    : params_(params)
    , config_(config)
    , kind_(kind)
    , eta_(params.sites, 0.0)
    , work_(params.sites)
    , scratch_(params.sites)
{
    config_.validate();
    if (config_.scheme == Scheme::ou_splitting)
    {
        std::size_t const m = params_.sites;
        fft_ = std::make_unique<RealFft>(m);
        decay_.assign(fft_->modes(), 1.0);
        filter_.assign(fft_->modes(), 0.0);
        kicked_hat_.resize(fft_->modes());
        double const dt = config_.dt;
        for (std::size_t k = 1; k < fft_->modes(); ++k)
        {
            double const lambda = laplacian_eigenvalue(k, m);
            decay_[k] = std::exp(-0.5 * lambda * dt);
            filter_[k] = std::sqrt(-std::expm1(-lambda * dt) / (lambda * dt));
        }
    }
}

Stepper::~Stepper() = default;
Stepper::Stepper(Stepper&&) noexcept = default;
Stepper& Stepper::operator=(Stepper&&) noexcept = default;

void Stepper::draw(NoiseStream& rng)
{
    rng.fill_normal(eta_, std::sqrt(config_.dt));
}

void Stepper::advance(LatticeState& u)
{
    if (u.size() != params_.sites)
        throw Error("state size does not match the stepper");
    if (config_.scheme == Scheme::euler)
        advance_euler(u);
    else
        advance_ou(u);
}

void Stepper::advance_euler(LatticeState& u)
{
    auto values = u.values();
    std::size_t const m = values.size();
    drift_field(values, params_.gamma, work_, scratch_, kind_);
    double const dt = config_.dt;
    values[0] += dt * work_[0] + (eta_[0] - eta_[m - 1]);
    for (std::size_t j = 1; j < m; ++j)
    {
        values[j] += dt * work_[j] + (eta_[j] - eta_[j - 1]);
    }
}

void Stepper::advance_ou(LatticeState& u)
{
    auto values = u.values();
    std::size_t const m = values.size();
    double const dt = config_.dt;
    auto real = fft_->real();
    auto spec = fft_->spectrum();

    // Nonlinear kick
    if (params_.gamma != 0)
    {
        nonlinearity_field(values, work_, scratch_, kind_);
        double const kick = dt * params_.gamma;
        for (std::size_t j = 0; j < m; ++j)
            real[j] = values[j] + kick * work_[j];
    }
    else
    {
        std::copy(values.begin(), values.end(), real.begin());
    }
    fft_->forward();
    std::copy(spec.begin(), spec.end(), kicked_hat_.begin());

    // Conservative noise increment
    conservative_difference(eta_, real);
    fft_->forward();

    // Exact linear flow; the zero mode carries the conserved momentum.
    spec[0] = kicked_hat_[0];
    for (std::size_t k = 1; k < spec.size(); ++k)
    {
        spec[k] = decay_[k] * kicked_hat_[k] + filter_[k] * spec[k];
    }
    fft_->inverse();
    double const norm = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j)
        values[j] = real[j] * norm;
}

//---------------------------------------------------------------------------//
namespace
{
LatticeState step_with(LatticeState const& u, ScalingParams const& p,
                       IntegratorConfig cfg, std::span<double const> eta,
                       Nonlinearity kind, Scheme scheme)
{
    cfg.scheme = scheme;
    Stepper stepper(p, cfg, kind);
    if (eta.size() != p.sites)
        throw Error("noise increment size does not match the lattice");
    std::copy(eta.begin(), eta.end(), stepper.eta().begin());
    LatticeState out = u;
    stepper.advance(out);
    out.set_time(u.time() + cfg.dt);
    return out;
}

std::vector<double> draw_eta(NoiseStream& rng, double dt, std::size_t sites)
{
    std::vector<double> eta(sites);
    rng.fill_normal(eta, std::sqrt(dt));
    return eta;
}
}  // namespace

LatticeState euler_step(LatticeState const& u, ScalingParams const& p,
                        IntegratorConfig const& cfg,
                        std::span<double const> eta, Nonlinearity kind)
{
    return step_with(u, p, cfg, eta, kind, Scheme::euler);
}

LatticeState euler_step(LatticeState const& u, ScalingParams const& p,
                        IntegratorConfig const& cfg, NoiseStream& rng,
                        Nonlinearity kind)
{
    auto const eta = draw_eta(rng, cfg.dt, p.sites);
    return euler_step(u, p, cfg, eta, kind);
}

LatticeState ou_splitting_step(LatticeState const& u, ScalingParams const& p,
                               IntegratorConfig const& cfg,
                               std::span<double const> eta, Nonlinearity kind)
{
    return step_with(u, p, cfg, eta, kind, Scheme::ou_splitting);
}

LatticeState ou_splitting_step(LatticeState const& u, ScalingParams const& p,
                               IntegratorConfig const& cfg, NoiseStream& rng,
                               Nonlinearity kind)
{
    auto const eta = draw_eta(rng, cfg.dt, p.sites);
    return ou_splitting_step(u, p, cfg, eta, kind);
}

//---------------------------------------------------------------------------//
NoiseIntegral::NoiseIntegral(std::vector<double> weights, long offset)
    : weights_(std::move(weights)), offset_(offset)
{
}

void NoiseIntegral::record(LatticeState const&, std::size_t)
{
    series_.push_back(value_);
    qv_series_.push_back(qv_);
}

void NoiseIntegral::on_step(LatticeState const& u,
                            std::span<double const> eta, std::size_t)
{
    double inc = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i)
    {
        inc += weights_[i] * eta[u.wrap(offset_ + static_cast<long>(i))];
    }
    value_ += inc;
    qv_ += inc * inc;
}

//---------------------------------------------------------------------------//
TrajectorySummary simulate(LatticeState u0, ScalingParams const& p,
                           IntegratorConfig const& cfg, NoiseStream& rng,
                           std::span<Observer* const> observers,
                           Nonlinearity kind)
{
    cfg.validate();
    TrajectorySummary summary;
    std::size_t const steps = cfg.total_steps();
    double const t0 = u0.time();
    Stepper stepper(p, cfg, kind);

    std::vector<Observer*> step_observers;
    for (auto* obs : observers)
    {
        if (obs->wants_steps())
            step_observers.push_back(obs);
    }

    auto record = [&](LatticeState const& u, std::size_t step) {
        summary.record_steps.push_back(step);
        summary.record_times.push_back(u.time());
        for (auto* obs : observers)
            obs->record(u, step);
    };

    LatticeState u = std::move(u0);
    record(u, 0);
    for (std::size_t step = 0; step < steps; ++step)
    {
        stepper.draw(rng);
        for (auto* obs : step_observers)
            obs->on_step(u, stepper.eta(), step);
        stepper.advance(u);
        u.set_time(t0 + static_cast<double>(step + 1) * cfg.dt);
        std::size_t const done = step + 1;
        bool const at_record = done % cfg.record_stride == 0 || done == steps;
        if (at_record)
        {
            if (!u.all_finite())
                throw TrajectoryError(rng.seed(), rng.replicate_id(), done);
            record(u, done);
        }
    }
    summary.steps = steps;
    summary.final_state = std::move(u);
    return summary;
}

}  // namespace ssb
