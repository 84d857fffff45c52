//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file suite_baseline.cpp
//! Exactly solvable control: space-time covariance of the linear dynamics.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <numeric>

#include "fields.hpp"
#include "spectral.hpp"
#include "suites.hpp"

namespace ssb
{
namespace
{
struct Replicate
{
    // cov[a][k] = (1/M) sum_i u_{i+k}(t_a) u_i(0)
    std::vector<std::vector<double>> cov;
    std::vector<double> field;  // mean over copies of X_t X_0
    std::vector<double> momentum;  // S_t S_0 / M
    double momentum_drift = 0;
};

class CovarianceObserver final : public Observer
{
  public:
    CovarianceObserver(std::vector<std::size_t> steps,
                       SampledTestFunction const& f,
                       std::vector<long> offsets)
        : steps_(std::move(steps)), f_(f), offsets_(std::move(offsets))
    {
        rep_.cov.resize(steps_.size());
        rep_.field.resize(steps_.size());
        rep_.momentum.resize(steps_.size());
    }

    void record(LatticeState const& u, std::size_t step) override
    {
        auto const m = u.size();
        if (step == 0)
        {
            u0_.assign(u.values().begin(), u.values().end());
            x0_.clear();
            for (long off : offsets_)
                x0_.push_back(fluctuation_field(u, f_, off));
            s0_ = std::accumulate(u0_.begin(), u0_.end(), 0.0);
        }
        double const s = std::accumulate(u.values().begin(),
                                         u.values().end(), 0.0);
        rep_.momentum_drift = std::max(rep_.momentum_drift, std::abs(s - s0_));
        for (std::size_t a = 0; a < steps_.size(); ++a)
        {
            if (steps_[a] != step)
                continue;
            auto& c = rep_.cov[a];
            c.assign(m, 0.0);
            for (std::size_t k = 0; k < m; ++k)
            {
                double acc = 0;
                for (std::size_t i = 0; i < m; ++i)
                    acc += u.values()[(i + k) % m] * u0_[i];
                c[k] = acc / static_cast<double>(m);
            }
            double acc = 0;
            for (std::size_t c2 = 0; c2 < offsets_.size(); ++c2)
                acc += fluctuation_field(u, f_, offsets_[c2]) * x0_[c2];
            rep_.field[a] = acc / static_cast<double>(offsets_.size());
            rep_.momentum[a] = s * s0_ / static_cast<double>(m);
        }
    }

    Replicate take() { return std::move(rep_); }

  private:
    std::vector<std::size_t> steps_;
    SampledTestFunction const& f_;
    std::vector<long> offsets_;
    std::vector<double> u0_;
    std::vector<double> x0_;
    double s0_ = 0;
    Replicate rep_;
};
}  // namespace

Report run_linear_baseline(ExperimentConfig const& cfg, RunOptions const& opts)
{
    Report report = make_report(cfg);
    std::uint64_t const n = cfg.n.front();
    std::size_t const sites = cfg.sites_for(n);
    SampledTestFunction const f(cfg.test_function(), n);
    auto const params = cfg.params(n, sites);
    auto const integ = cfg.integrator_for(n, cfg.horizon);
    auto const offsets = copy_offsets(sites, f.span(), 1);

    std::vector<double> times{0.0};
    for (double t : cfg.times)
    {
        if (t > 0)
            times.push_back(t);
    }
    std::vector<std::size_t> steps;
    for (double t : times)
        steps.push_back(*step_for_time(t, n, integ.dt));

    report.note("gamma = " + format_number(params.gamma) + ", M = "
                + std::to_string(sites) + ", scheme "
                + to_string(integ.scheme) + ", dt = " + format_number(integ.dt)
                + "; site covariances are averaged over translations");

    auto reps = run_ensemble<Replicate>(
        cfg.ensemble, opts.threads, [&](std::size_t r) {
            NoiseStream rng(cfg.seed, stream_id(0, r));
            auto u0 = sample_invariant(rng, sites);
            CovarianceObserver obs(steps, f, offsets);
            Observer* list[] = {&obs};
            simulate(u0, params, integ, rng, list, Nonlinearity::sasamoto_spohn);
            return obs.take();
        });
    report.add_steps(static_cast<std::uint64_t>(integ.total_steps())
                     * cfg.ensemble);

    double drift = 0;
    for (auto const& r : reps)
        drift = std::max(drift, r.momentum_drift);
    double const drift_tol = 1e-10 * static_cast<double>(integ.total_steps())
                             * static_cast<double>(sites);
    report.check("momentum conserved along every trajectory", drift, 0,
                 std::max(drift_tol, 1e-10 * static_cast<double>(sites)));

    auto const vals = f.values();
    for (std::size_t a = 0; a < times.size(); ++a)
    {
        double const micro = times[a] * static_cast<double>(n);
        auto const kernel = heat_kernel(micro, sites);
        double worst_z = 0;
        std::size_t worst_k = 0;
        for (std::size_t k = 0; k < sites; ++k)
        {
            std::vector<double> x;
            for (auto const& r : reps)
                x.push_back(r.cov[a][k]);
            auto const s = summarize(x);
            auto& row = report.add(estimate("site_covariance", x));
            row.n = n;
            row.l = k;  // separation
            row.t = times[a];
            row.reference = kernel[k];
            double const z = s.standard_error() > 0
                                 ? std::abs(s.mean - kernel[k])
                                       / s.standard_error()
                                 : (s.mean == kernel[k] ? 0.0 : HUGE_VAL);
            if (z > worst_z)
            {
                worst_z = z;
                worst_k = k;
            }
        }
        if (times[a] > 0)
        {
            report.check("site covariance within 3 sigma of exp(t Lap / 2) "
                         "at t = " + format_number(times[a]),
                         worst_z, 0, 3.0,
                         "largest |z| over " + std::to_string(sites)
                             + " separations, at separation "
                             + std::to_string(worst_k));
        }

        // sum_i sum_j phi_i phi_j K(i - j) / sqrt(n)
        double contraction = 0;
        for (std::size_t i = 0; i < vals.size(); ++i)
        {
            for (std::size_t j = 0; j < vals.size(); ++j)
            {
                long const d = (static_cast<long>(i) - static_cast<long>(j));
                long const m = static_cast<long>(sites);
                contraction += vals[i] * vals[j]
                               * kernel[static_cast<std::size_t>(((d % m) + m) % m)];
            }
        }
        contraction /= std::sqrt(static_cast<double>(n));
        std::vector<double> x;
        for (auto const& r : reps)
            x.push_back(r.field[a]);
        auto const s = summarize(x);
        auto& row = report.add(estimate("field_covariance", x));
        row.n = n;
        row.t = times[a];
        row.reference = contraction;
        if (times[a] > 0)
        {
            report.check("E[X_t X_0] within 3 sigma of the phi contraction at "
                         "t = " + format_number(times[a]),
                         s.mean, contraction - 3 * s.standard_error(),
                         contraction + 3 * s.standard_error());
        }

        std::vector<double> mom;
        for (auto const& r : reps)
            mom.push_back(r.momentum[a]);
        auto& mrow = report.add(estimate("momentum_mode_covariance", mom));
        mrow.n = n;
        mrow.t = times[a];
        mrow.reference = 1.0;
    }
    return report;
}

}  // namespace ssb
