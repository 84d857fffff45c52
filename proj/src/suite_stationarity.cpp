//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file suite_stationarity.cpp
//! Site moments along trajectories started from the product Gaussian.
//---------------------------------------------------------------------------//
#include <array>
#include <cmath>

#include "suites.hpp"

namespace ssb
{
namespace
{
constexpr std::size_t moment_count = 5;

struct Moment
{
    char const* name;
    double target;
    double budget;  // scheme-bias allowance added to the 3 sigma band
};

constexpr std::array<Moment, moment_count> moments{{
    {"mean", 0.0, 0.02},
    {"variance", 1.0, 0.02},
    {"lag1_covariance", 0.0, 0.02},
    {"lag2_covariance", 0.0, 0.02},
    {"fourth_moment", 3.0, 0.12},
}};

using MomentVector = std::array<double, moment_count>;

MomentVector site_moments(LatticeState const& u)
{
    MomentVector m{};
    auto const m_sites = static_cast<long>(u.size());
    for (long j = 0; j < m_sites; ++j)
    {
        double const x = u[j];
        double const x2 = x * x;
        m[0] += x;
        m[1] += x2;
        m[2] += x * u[j + 1];
        m[3] += x * u[j + 2];
        m[4] += x2 * x2;
    }
    for (double& v : m)
        v /= static_cast<double>(m_sites);
    return m;
}

class MomentObserver final : public Observer
{
  public:
    explicit MomentObserver(std::vector<std::size_t> steps)
        : steps_(std::move(steps)), values_(steps_.size())
    {
    }
    void record(LatticeState const& u, std::size_t step) override
    {
        for (std::size_t k = 0; k < steps_.size(); ++k)
        {
            if (steps_[k] == step)
                values_[k] = site_moments(u);
        }
    }
    std::vector<MomentVector> const& values() const { return values_; }

  private:
    std::vector<std::size_t> steps_;
    std::vector<MomentVector> values_;
};

struct Replicate
{
    bool diverged = false;
    std::size_t diverged_step = 0;
    bool initial_matches = true;
    std::vector<MomentVector> values;
};

struct EnsembleResult
{
    std::vector<Replicate> replicates;
    std::size_t diverged = 0;
};

EnsembleResult run_moments(ExperimentConfig const& cfg, std::size_t sites,
                           double dt, std::uint64_t point,
                           std::vector<double> const& times,
                           RunOptions const& opts, std::uint64_t& steps)
{
    std::uint64_t const n = cfg.n.front();
    auto const params = cfg.params(n, sites);
    ExperimentConfig local = cfg;
    local.integrator.dt = dt;
    auto const integ = local.integrator_for(n, cfg.horizon);
    std::vector<std::size_t> record_steps;
    for (double t : times)
        record_steps.push_back(*step_for_time(t, n, dt));

    EnsembleResult out;
    out.replicates = run_ensemble<Replicate>(
        cfg.ensemble, opts.threads, [&](std::size_t r) {
            Replicate rep;
            NoiseStream rng(cfg.seed, stream_id(point, r));
            auto u0 = sample_invariant(rng, sites);
            MomentObserver obs(record_steps);
            Observer* list[] = {&obs};
            try
            {
                simulate(u0, params, integ, rng, list, cfg.nonlinearity);
            }
            catch (TrajectoryError const& e)
            {
                rep.diverged = true;
                rep.diverged_step = e.step();
                return rep;
            }
            rep.values = obs.values();
            // A fresh stream reproduces the initial law exactly.
            NoiseStream again(cfg.seed, stream_id(point, r));
            auto const direct = site_moments(sample_invariant(again, sites));
            for (std::size_t k = 0; k < record_steps.size(); ++k)
            {
                if (record_steps[k] == 0 && rep.values[k] != direct)
                    rep.initial_matches = false;
            }
            return rep;
        });
    for (auto const& r : out.replicates)
        out.diverged += r.diverged ? 1 : 0;
    steps += static_cast<std::uint64_t>(integ.total_steps())
             * (cfg.ensemble - out.diverged);
    return out;
}

std::vector<double> column(EnsembleResult const& e, std::size_t time_index,
                           std::size_t moment)
{
    std::vector<double> out;
    for (auto const& r : e.replicates)
    {
        if (!r.diverged)
            out.push_back(r.values[time_index][moment]);
    }
    return out;
}
}  // namespace

Report run_stationarity(ExperimentConfig const& cfg, RunOptions const& opts)
{
    Report report = make_report(cfg);
    std::uint64_t const n = cfg.n.front();
    std::size_t const sites = cfg.sites != 0 ? cfg.sites : std::max(min_sites, n);
    auto const params = cfg.params(n, sites);
    std::uint64_t steps = 0;

    auto const main = run_moments(cfg, sites, cfg.integrator.dt, 0, cfg.times,
                                  opts, steps);
    report.note(std::string("nonlinearity ") + to_string(cfg.nonlinearity)
                + ", gamma = " + format_number(params.gamma) + ", M = "
                + std::to_string(sites) + ", scheme "
                + to_string(cfg.integrator.scheme) + ", dt = "
                + format_number(cfg.integrator.dt));

    report.check("replicates without divergence",
                 static_cast<double>(cfg.ensemble - main.diverged),
                 static_cast<double>(cfg.ensemble),
                 static_cast<double>(cfg.ensemble),
                 std::to_string(main.diverged) + " trajectories overflowed");

    bool initial_ok = true;
    for (auto const& r : main.replicates)
        initial_ok = initial_ok && r.initial_matches;
    report.check("moments at t = 0 reproduce the invariant sample exactly",
                 initial_ok ? 1.0 : 0.0, 1.0, 1.0);

    if (main.diverged == cfg.ensemble)
    {
        report.add_steps(steps);
        return report;
    }
    for (std::size_t k = 0; k < cfg.times.size(); ++k)
    {
        for (std::size_t m = 0; m < moment_count; ++m)
        {
            auto const x = column(main, k, m);
            auto& row = report.add(estimate(moments[m].name, x));
            row.n = n;
            row.t = cfg.times[k];
            row.reference = moments[m].target;
            double const se = summarize(x).standard_error();
            double const band = 3 * se + moments[m].budget;
            report.check(std::string(moments[m].name) + " at t = "
                             + format_number(cfg.times[k]),
                         row.mean, moments[m].target - band,
                         moments[m].target + band,
                         "3 sigma = " + format_number(3 * se)
                             + ", bias budget = "
                             + format_number(moments[m].budget));
        }
    }

    if (cfg.dt_study)
    {
        // Same grid at dt/2; the variance shift measures the scheme bias.
        double const half = cfg.integrator.dt / 2;
        auto const fine = run_moments(cfg, sites, half, 1, cfg.times, opts,
                                      steps);
        if (fine.diverged == 0)
        {
            std::size_t const last = cfg.times.size() - 1;
            for (std::size_t m : {std::size_t{1}, std::size_t{4}})
            {
                auto const coarse_x = column(main, last, m);
                auto const fine_x = column(fine, last, m);
                auto& row = report.add(estimate(
                    std::string(moments[m].name) + "_dt_half", fine_x));
                row.n = n;
                row.t = cfg.times[last];
                row.reference = moments[m].target;
                report.note(std::string(moments[m].name) + " at t = "
                            + format_number(cfg.times[last]) + ": dt "
                            + format_number(cfg.integrator.dt) + " -> "
                            + format_number(summarize(coarse_x).mean)
                            + ", dt " + format_number(half) + " -> "
                            + format_number(summarize(fine_x).mean));
            }
        }
        else
        {
            report.note("dt/2 study: " + std::to_string(fine.diverged)
                        + " trajectories overflowed");
        }
    }
    report.add_steps(steps);
    return report;
}

}  // namespace ssb
