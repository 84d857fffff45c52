//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file suite_qv.cpp
//! Quadratic variation and second moments of the field martingale.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <memory>

#include "fields.hpp"
#include "suites.hpp"

namespace ssb
{
namespace
{
struct Replicate
{
    double qv_direct = 0;   // mean over copies of the realized QV
    double qv_residual = 0;
    double worst_ratio = 1;  // copy whose QV ratio is furthest from 1
    double max_gap = 0;
    std::vector<double> increment_sq;  // per time pair, mean over copies
};
}  // namespace

Report run_qv_check(ExperimentConfig const& cfg, RunOptions const& opts)
{
    Report report = make_report(cfg);
    std::uint64_t const n = cfg.n.front();
    std::size_t const sites = cfg.sites_for(n);
    auto const phi = cfg.test_function();
    SampledTestFunction const f(phi, n);
    auto const params = cfg.params(n, sites);
    auto const integ = cfg.integrator_for(n, cfg.horizon);
    auto const offsets = copy_offsets(sites, f.span(), 1);
    double const energy = f.gradient_energy();
    double const expected = cfg.horizon * energy;

    std::vector<double> grid{0.0};
    for (double t : cfg.times)
    {
        if (t > grid.back())
            grid.push_back(t);
    }

    report.note("M = " + std::to_string(sites) + ", "
                + std::to_string(offsets.size()) + " translated copies, "
                + std::to_string(integ.total_steps()) + " steps of dt = "
                + format_number(integ.dt) + ", scheme "
                + to_string(integ.scheme) + ", E_n(grad phi) = "
                + format_number(energy));

    auto const reps = run_ensemble<Replicate>(
        cfg.ensemble, opts.threads, [&](std::size_t r) {
            NoiseStream rng(cfg.seed, stream_id(0, r));
            auto u0 = sample_invariant(rng, sites);
            std::vector<std::unique_ptr<FieldDecomposition>> obs;
            std::vector<Observer*> list;
            for (long off : offsets)
            {
                obs.push_back(std::make_unique<FieldDecomposition>(
                    f, params, integ.dt, off, std::vector<double>{},
                    cfg.nonlinearity));
                list.push_back(obs.back().get());
            }
            simulate(u0, params, integ, rng, list, cfg.nonlinearity);

            Replicate rep;
            rep.increment_sq.assign(grid.size() - 1, 0.0);
            double const copies = static_cast<double>(offsets.size());
            for (auto const& o : obs)
            {
                auto const& rows = o->series().rows;
                auto const& last = rows.back();
                rep.qv_direct += last.qv / copies;
                rep.qv_residual += last.qv_residual / copies;
                if (expected > 0)
                {
                    double const ratio = last.qv / expected;
                    if (std::abs(ratio - 1) > std::abs(rep.worst_ratio - 1))
                        rep.worst_ratio = ratio;
                }
                for (auto const& row : rows)
                {
                    rep.max_gap = std::max(
                        rep.max_gap, std::abs(row.m_residual - row.m_direct));
                }
                auto value_at = [&](double t) {
                    for (auto const& row : rows)
                    {
                        if (std::abs(row.t - t) <= 1e-9 * std::max(1.0, t))
                            return row.m_direct;
                    }
                    throw Error("time not on the record grid");
                };
                for (std::size_t k = 0; k + 1 < grid.size(); ++k)
                {
                    double const d = value_at(grid[k + 1]) - value_at(grid[k]);
                    rep.increment_sq[k] += d * d / copies;
                }
            }
            return rep;
        });
    report.add_steps(static_cast<std::uint64_t>(integ.total_steps())
                     * cfg.ensemble);

    std::vector<double> direct, residual;
    double worst = 1;
    double max_gap = 0;
    for (auto const& r : reps)
    {
        direct.push_back(r.qv_direct);
        residual.push_back(r.qv_residual);
        if (std::abs(r.worst_ratio - 1) > std::abs(worst - 1))
            worst = r.worst_ratio;
        max_gap = std::max(max_gap, r.max_gap);
    }

    auto add_qv = [&](char const* name, std::vector<double> const& x) {
        auto& row = report.add(estimate(name, x));
        row.n = n;
        row.t = cfg.horizon;
        row.reference = expected;
        return row.mean;
    };
    double const qv_direct = add_qv("realized_qv_direct", direct);
    double const qv_residual = add_qv("realized_qv_residual", residual);

    double const tolerance = 1e-8 * static_cast<double>(integ.total_steps());
    if (expected > 0)
    {
        report.check("realized QV (direct) / (t E_n(grad phi))",
                     qv_direct / expected, 0.95, 1.05);
        report.check("realized QV (residual) / (t E_n(grad phi))",
                     qv_residual / expected, 0.95, 1.05);
        report.note("single-path QV ratio furthest from 1: "
                    + format_number(worst));
    }
    else
    {
        report.check("realized QV vanishes at zero horizon", qv_direct, 0, 0);
    }
    {
        EstimateRow row;
        row.quantity = "max_abs_residual_minus_direct";
        row.n = n;
        row.t = cfg.horizon;
        row.replicates = cfg.ensemble;
        row.mean = row.ci_low = row.ci_high = max_gap;
        row.reference = 0.0;
        report.add(row);
        report.check("max |M_residual - M_direct| <= 1e-8 per step", max_gap,
                     0, tolerance,
                     std::string("scheme ") + to_string(integ.scheme));
    }

    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
    {
        std::vector<double> x;
        for (auto const& r : reps)
            x.push_back(r.increment_sq[k]);
        double const width = grid[k + 1] - grid[k];
        auto& row = report.add(estimate("E|M_t - M_s|^2", x));
        row.n = n;
        row.t = grid[k + 1];
        row.reference = width * energy;
        double const se = summarize(x).standard_error();
        report.check("E|M_t - M_s|^2 = (t - s) E_n(grad phi) on ["
                         + format_number(grid[k]) + ", "
                         + format_number(grid[k + 1]) + "]",
                     row.mean, width * energy - 3 * se,
                     width * energy + 3 * se, "3 sigma band");
    }
    return report;
}

}  // namespace ssb
