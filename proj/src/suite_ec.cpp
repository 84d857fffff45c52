//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file suite_ec.cpp
//! Energy-condition estimates: the curvature integral bound, the A^eps
//! Cauchy property in eps, and the gradient surrogate.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <numeric>

#include "fields.hpp"
#include "suites.hpp"

namespace ssb
{
namespace
{
// Second moment of the integral over [0, t] is bounded by 4 t E(phi') for
// the curvature field (Kipnis-Varadhan with the exact H^{-1} norm).
constexpr double curvature_bound = 4.0;

std::vector<double> column(std::vector<std::vector<double>> const& reps,
                           std::size_t k, double scale = 1.0)
{
    std::vector<double> out;
    for (auto const& r : reps)
        out.push_back(r[k] * scale);
    return out;
}
}  // namespace

Report run_ec_estimates(ExperimentConfig const& cfg, RunOptions const& opts)
{
    Report report = make_report(cfg);
    auto const phi = cfg.test_function();

    // eps ascending
    std::vector<double> eps = cfg.eps;
    std::sort(eps.begin(), eps.end());
    std::size_t const ne = eps.size();
    std::vector<double> times = cfg.times;
    std::sort(times.begin(), times.end());
    std::size_t const nt = times.size();
    std::size_t const pairs = ne - 1;

    // per copy: A_lat[ne], A_cont[ne], X(phi''), surrogate
    std::size_t const per_copy = 2 * ne + 2;
    // stats: per time {ec1, surrogate, pair diffs...}, per eps {gap, lat^2}
    std::size_t const per_time = 2 + pairs;
    std::size_t const width = nt * per_time + 2 * ne;

    for (std::size_t i = 0; i < cfg.n.size(); ++i)
    {
        std::uint64_t const n = cfg.n[i];
        std::size_t const sites = cfg.sites_for(n);
        SampledTestFunction const f(phi, n);
        auto const params = cfg.params(n, sites);
        auto const integ = cfg.integrator_for(n, cfg.horizon);
        double const root = std::sqrt(static_cast<double>(n));
        auto const reach
            = static_cast<std::size_t>(std::ceil(eps.back() * root)) + 3;
        auto const offsets = copy_offsets(sites, f.span(), reach);
        std::size_t const copies = offsets.size();
        auto const d2 = f.second_derivative();

        std::string blocks;
        for (double e : eps)
            blocks += (blocks.empty() ? "" : ", ")
                      + std::to_string(epsilon_block(e, n));
        report.note("n = " + std::to_string(n) + ": M = "
                    + std::to_string(sites) + ", " + std::to_string(copies)
                    + " copies, block sizes floor(eps sqrt n) = {" + blocks
                    + "}, " + std::to_string(integ.total_steps()) + " steps");

        auto reps = run_ensemble<std::vector<double>>(
            cfg.ensemble, opts.threads, [&](std::size_t r) {
                NoiseStream rng(cfg.seed, stream_id(i, r));
                auto u0 = sample_invariant(rng, sites);
                QuadratureObserver obs(
                    copies * per_copy, n,
                    [&](LatticeState const& u, std::span<double> out) {
                        for (std::size_t c = 0; c < copies; ++c)
                        {
                            auto o = out.subspan(c * per_copy, per_copy);
                            long const off = offsets[c];
                            for (std::size_t e = 0; e < ne; ++e)
                            {
                                o[e] = a_epsilon_increment(u, f, eps[e], off);
                                o[ne + e] = continuum_a_epsilon_increment(
                                    u, f, eps[e], off);
                            }
                            o[2 * ne] = weighted_field(u, f, d2, off);
                            o[2 * ne + 1] = gradient_surrogate(u, f, off);
                        }
                    });
                Observer* list[] = {&obs};
                simulate(u0, params, integ, rng, list, cfg.nonlinearity);

                std::vector<double> stats(width, 0.0);
                double const inv = 1.0 / static_cast<double>(copies);
                for (std::size_t a = 0; a < nt; ++a)
                {
                    auto const& rec = obs.integrals()[obs.index_of(times[a])];
                    double* s = stats.data() + a * per_time;
                    for (std::size_t c = 0; c < copies; ++c)
                    {
                        double const* v = rec.data() + c * per_copy;
                        s[0] += v[2 * ne] * v[2 * ne] * inv;
                        s[1] += v[2 * ne + 1] * v[2 * ne + 1] * inv;
                        for (std::size_t k = 0; k < pairs; ++k)
                        {
                            double const d = v[k + 1] - v[k];
                            s[2 + k] += d * d * inv;
                        }
                    }
                }
                auto const& last = obs.integrals().back();
                double* g = stats.data() + nt * per_time;
                for (std::size_t c = 0; c < copies; ++c)
                {
                    double const* v = last.data() + c * per_copy;
                    for (std::size_t e = 0; e < ne; ++e)
                    {
                        double const d = v[e] - v[ne + e];
                        g[2 * e] += d * d * inv;
                        g[2 * e + 1] += v[e] * v[e] * inv;
                    }
                }
                return stats;
            });
        report.add_steps(static_cast<std::uint64_t>(integ.total_steps())
                         * cfg.ensemble);

        double const energy = phi.gradient_energy();
        double const lattice_energy = f.gradient_energy();
        double kappa1 = 0;
        double kappa_s = 0;
        double kappa2 = 0;
        for (std::size_t a = 0; a < nt; ++a)
        {
            double const t = times[a];
            if (t <= 0)
                continue;
            auto const ec1 = column(reps, a * per_time, 1.0 / (t * energy));
            auto const sur
                = column(reps, a * per_time + 1, 1.0 / (t * lattice_energy));
            auto& r1 = report.add(estimate("ec1_ratio", ec1));
            r1.n = n;
            r1.t = t;
            kappa1 = std::max(kappa1, r1.mean);
            auto const s1 = summarize(ec1);
            report.check("EC1 ratio bounded by 4 at t - s = "
                             + format_number(t) + ", n = " + std::to_string(n),
                         s1.mean - 1.96 * s1.standard_error(),
                         -std::numeric_limits<double>::infinity(),
                         curvature_bound, "value is mean - 1.96 se");
            auto& r2 = report.add(estimate("surrogate_ratio", sur));
            r2.n = n;
            r2.t = t;
            kappa_s = std::max(kappa_s, r2.mean);
            auto const s2 = summarize(sur);
            report.check("surrogate ratio bounded by 4 at t - s = "
                             + format_number(t) + ", n = " + std::to_string(n),
                         s2.mean - 1.96 * s2.standard_error(),
                         -std::numeric_limits<double>::infinity(),
                         curvature_bound, "value is mean - 1.96 se");
            for (std::size_t k = 0; k < pairs; ++k)
            {
                double const e = eps[k + 1];
                auto const d = column(reps, a * per_time + 2 + k,
                                      1.0 / (t * e * energy));
                auto& r = report.add(estimate("ec2_ratio", d));
                r.n = n;
                r.t = t;
                r.eps = e;
                r.l = epsilon_block(e, n);
                kappa2 = std::max(kappa2, r.mean);
            }
        }
        report.note("fitted kappa at n = " + std::to_string(n)
                    + ": EC1 " + format_number(kappa1) + ", surrogate "
                    + format_number(kappa_s) + ", EC2 "
                    + format_number(kappa2));

        // eps-halving at the full horizon
        std::size_t const a_top = nt - 1;
        double const t_top = times[a_top];
        if (t_top > 0)
        {
            std::vector<double> e_grid, d_grid;
            for (std::size_t k = 0; k < pairs; ++k)
            {
                auto const d = column(reps, a_top * per_time + 2 + k);
                auto& r = report.add(estimate("E|A^eps - A^delta|^2", d));
                r.n = n;
                r.t = t_top;
                r.eps = eps[k + 1];
                r.l = epsilon_block(eps[k + 1], n);
                e_grid.push_back(eps[k + 1]);
                d_grid.push_back(r.mean);
            }
            for (std::size_t k = 0; k + 1 < pairs; ++k)
            {
                auto const small = column(reps, a_top * per_time + 2 + k);
                auto const big = column(reps, a_top * per_time + 3 + k);
                auto const ratio = ratio_of_means(small, big);
                EstimateRow row;
                row.quantity = "ec2_halving_ratio";
                row.n = n;
                row.t = t_top;
                row.eps = eps[k + 2];
                row.replicates = reps.size();
                row.mean = ratio.value;
                row.sd = ratio.se * std::sqrt(static_cast<double>(reps.size()));
                row.ci_low = ratio.value - 1.96 * ratio.se;
                row.ci_high = ratio.value + 1.96 * ratio.se;
                row.reference = eps[k + 1] / eps[k + 2];
                report.add(row);
                report.check("EC2 halving ratio D(" + format_number(eps[k + 1])
                                 + ") / D(" + format_number(eps[k + 2])
                                 + ") at n = " + std::to_string(n),
                             ratio.value, 0.35, 0.7,
                             "se " + format_number(ratio.se));
            }
            if (pairs >= 2
                && std::all_of(d_grid.begin(), d_grid.end(),
                               [](double v) { return v > 0; }))
            {
                FitRow fit;
                fit.quantity = "E|A^eps - A^delta|^2";
                fit.variable = "eps";
                fit.n = n;
                fit.t = t_top;
                fit.fit = fit_power_law(e_grid, d_grid);
                report.add(fit);
            }
            // lattice vs continuum A^eps
            for (std::size_t e = 0; e < ne; ++e)
            {
                std::size_t const base = nt * per_time + 2 * e;
                auto const gap = column(reps, base);
                auto const size = column(reps, base + 1);
                auto& r = report.add(estimate("A_eps_lattice_continuum_gap", gap));
                r.n = n;
                r.t = t_top;
                r.eps = eps[e];
                auto& s = report.add(estimate("A_eps_lattice_second_moment", size));
                s.n = n;
                s.t = t_top;
                s.eps = eps[e];
            }
        }
    }
    return report;
}

}  // namespace ssb
