//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file suite_scaling.cpp
//! Second moments of time-integrated local statistics and their power-law
//! scaling in n and l: Boltzmann-Gibbs residual, one-block, ucp decay.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <limits>

#include "fields.hpp"
#include "polynomial.hpp"
#include "suites.hpp"

namespace ssb
{
namespace
{
using Integrand = std::function<void(LatticeState const&, long, std::span<double>)>;
using Reduce = std::function<void(QuadratureObserver const&, std::span<double>)>;

struct GridPoint
{
    std::uint64_t n = 0;
    std::size_t sites = 0;
    SampledTestFunction f;
    std::vector<long> offsets;
    ScalingParams params;
    IntegratorConfig integ;
};

GridPoint make_point(ExperimentConfig const& cfg, std::uint64_t n,
                     std::size_t reach)
{
    std::size_t const sites = cfg.sites_for(n);
    SampledTestFunction f(cfg.test_function(), n);
    auto offsets = copy_offsets(sites, f.span(), reach);
    return {n, sites, std::move(f), std::move(offsets), cfg.params(n, sites),
            cfg.integrator_for(n, cfg.horizon)};
}

/*!
 * Run the ensemble at one grid point.
 *
 * `integrand` fills `per_copy` values for one translated copy; `reduce`
 * turns the quadrature record of all copies into `width` statistics.
 */
std::vector<std::vector<double>>
run_point(ExperimentConfig const& cfg, RunOptions const& opts,
          std::uint64_t point, GridPoint const& gp, std::size_t per_copy,
          Integrand const& integrand, std::size_t width, Reduce const& reduce)
{
    std::size_t const copies = gp.offsets.size();
    return run_ensemble<std::vector<double>>(
        cfg.ensemble, opts.threads, [&](std::size_t r) {
            NoiseStream rng(cfg.seed, stream_id(point, r));
            auto u0 = sample_invariant(rng, gp.sites);
            QuadratureObserver obs(
                copies * per_copy, gp.n,
                [&](LatticeState const& u, std::span<double> out) {
                    for (std::size_t c = 0; c < copies; ++c)
                    {
                        integrand(u, gp.offsets[c],
                                  out.subspan(c * per_copy, per_copy));
                    }
                });
            Observer* list[] = {&obs};
            simulate(u0, gp.params, gp.integ, rng, list, cfg.nonlinearity);
            std::vector<double> stats(width, 0.0);
            reduce(obs, stats);
            return stats;
        });
}

std::vector<double> column(std::vector<std::vector<double>> const& reps,
                           std::size_t k, double scale = 1.0)
{
    std::vector<double> out;
    out.reserve(reps.size());
    for (auto const& r : reps)
        out.push_back(r[k] * scale);
    return out;
}

// Mean over copies of (final integral)^2 for components k, k + stride, ...
double mean_final_square(QuadratureObserver const& obs, std::size_t k,
                         std::size_t per_copy)
{
    auto const& last = obs.integrals().back();
    std::size_t const copies = last.size() / per_copy;
    double acc = 0;
    for (std::size_t c = 0; c < copies; ++c)
    {
        double const v = last[c * per_copy + k];
        acc += v * v;
    }
    return acc / static_cast<double>(copies);
}

void add_doubling_ratios(Report& report, std::string const& quantity,
                         std::vector<std::uint64_t> const& ns,
                         std::vector<SampleSummary> const& s, std::size_t l,
                         double t)
{
    for (std::size_t i = 0; i + 1 < ns.size(); ++i)
    {
        if (ns[i + 1] != 2 * ns[i] || s[i].mean <= 0 || s[i + 1].mean <= 0)
            continue;
        double const ratio = s[i + 1].mean / s[i].mean;
        double const rel = std::hypot(s[i].standard_error() / s[i].mean,
                                      s[i + 1].standard_error() / s[i + 1].mean);
        EstimateRow row;
        row.quantity = quantity + "_n_doubling_ratio";
        row.n = ns[i + 1];
        row.l = l;
        row.t = t;
        row.replicates = s[i].count;
        row.mean = ratio;
        row.sd = ratio * rel;
        row.ci_low = ratio * (1 - 1.96 * rel);
        row.ci_high = ratio * (1 + 1.96 * rel);
        row.reference = std::sqrt(0.5);
        report.add(row);
    }
}

std::string grid_note(GridPoint const& gp)
{
    return "n = " + std::to_string(gp.n) + ": M = " + std::to_string(gp.sites)
           + ", " + std::to_string(gp.offsets.size()) + " copies, "
           + std::to_string(gp.integ.total_steps()) + " steps";
}

// Cov(Q_j, Q_k) = 2 ((l - |j - k|)_+ / l^2)^2 under the product Gaussian.
double static_q_variance(std::span<double const> psi, std::size_t l)
{
    double const l2 = static_cast<double>(l * l);
    double acc = 0;
    for (std::size_t j = 0; j < psi.size(); ++j)
    {
        if (psi[j] == 0)
            continue;
        std::size_t const lo = j >= l ? j - l + 1 : 0;
        std::size_t const hi = std::min(psi.size(), j + l);
        for (std::size_t k = lo; k < hi; ++k)
        {
            double const overlap = static_cast<double>(
                l - (j > k ? j - k : k - j));
            acc += psi[j] * psi[k] * 2 * (overlap / l2) * (overlap / l2);
        }
    }
    return acc;
}

//---------------------------------------------------------------------------//
/*!
 * Shared driver for the (n, l) grid of bg-scaling and one-block.
 *
 * The integrand per copy has |l| components (one per block length) plus
 * `extra` trailing components handled by `extra_reduce`.
 */
struct BlockGridResult
{
    // summaries[i][k]: n index i, l index k, normalized second moment
    std::vector<std::vector<SampleSummary>> summaries;
    std::vector<std::vector<std::vector<double>>> raw;
    std::vector<GridPoint> points;
};

void report_block_grid(Report& report, ExperimentConfig const& cfg,
                       BlockGridResult const& res, std::string const& quantity,
                       double norm_scale)
{
    auto const& ns = cfg.n;
    auto const& ls = cfg.l;
    double const t = cfg.horizon;
    std::size_t const ref_index
        = std::find(ls.begin(), ls.end(), cfg.l_ref) - ls.begin();

    for (std::size_t i = 0; i < ns.size(); ++i)
    {
        for (std::size_t k = 0; k < ls.size(); ++k)
        {
            auto const& s = res.summaries[i][k];
            EstimateRow row;
            row.quantity = quantity;
            row.n = ns[i];
            row.l = ls[k];
            row.t = t;
            row.with(s);
            report.add(row);
            // C = m sqrt(n) / (t l): the prefactor of the t l / sqrt(n) law
            double const c = std::sqrt(static_cast<double>(ns[i]))
                             / (t * static_cast<double>(ls[k]));
            EstimateRow crow = row;
            crow.quantity = quantity + "_fitted_C";
            crow.mean *= c;
            crow.sd *= c;
            crow.ci_low *= c;
            crow.ci_high *= c;
            report.add(crow);
        }
    }
    report.note(quantity + " is E|J|^2 / (" + format_number(norm_scale)
                + " t) with the normalization described in the suite help");

    // Fits in n at every l, and in l at every n.
    std::vector<double> xs(ns.begin(), ns.end());
    FitRow n_fit_ref;
    if (ns.size() >= 2)
    {
        for (std::size_t k = 0; k < ls.size(); ++k)
        {
            std::vector<double> y;
            for (std::size_t i = 0; i < ns.size(); ++i)
                y.push_back(res.summaries[i][k].mean);
            if (std::any_of(y.begin(), y.end(), [](double v) { return v <= 0; }))
                continue;
            FitRow fit;
            fit.quantity = quantity;
            fit.variable = "n";
            fit.l = ls[k];
            fit.t = t;
            fit.fit = fit_power_law(xs, y);
            report.add(fit);
            if (k == ref_index)
                n_fit_ref = fit;
        }
        std::vector<SampleSummary> at_ref;
        for (std::size_t i = 0; i < ns.size(); ++i)
            at_ref.push_back(res.summaries[i][ref_index]);
        add_doubling_ratios(report, quantity, ns, at_ref, cfg.l_ref, t);
        check_exponent(report,
                       quantity + " n-exponent at l = "
                           + std::to_string(cfg.l_ref),
                       n_fit_ref, -0.7, -0.3);
    }
    if (ls.size() >= 2)
    {
        std::vector<double> xl(ls.begin(), ls.end());
        FitRow l_fit_top;
        for (std::size_t i = 0; i < ns.size(); ++i)
        {
            std::vector<double> y;
            for (std::size_t k = 0; k < ls.size(); ++k)
                y.push_back(res.summaries[i][k].mean);
            if (std::any_of(y.begin(), y.end(), [](double v) { return v <= 0; }))
                continue;
            FitRow fit;
            fit.quantity = quantity;
            fit.variable = "l";
            fit.n = ns[i];
            fit.t = t;
            fit.fit = fit_power_law(xl, y);
            report.add(fit);
            if (i + 1 == ns.size())
                l_fit_top = fit;
        }
        check_exponent(report,
                       quantity + " l-exponent at n = "
                           + std::to_string(ns.back()),
                       l_fit_top, 0.5, 1.3);
    }
}

bool report_zero_horizon(Report& report, BlockGridResult const& res)
{
    double worst = 0;
    for (auto const& per_n : res.raw)
        for (auto const& rep : per_n)
            for (double v : rep)
                worst = std::max(worst, std::abs(v));
    return report.check("second moments vanish at zero horizon", worst, 0, 0);
}
}  // namespace

//---------------------------------------------------------------------------//
Report run_bg_scaling(ExperimentConfig const& cfg, RunOptions const& opts)
{
    Report report = make_report(cfg);
    auto const& ls = cfg.l;
    std::size_t const l_max = *std::max_element(ls.begin(), ls.end());
    std::size_t const per_copy = ls.size() + 1;
    std::size_t const width = ls.size() + 2;

    BlockGridResult res;
    for (std::size_t i = 0; i < cfg.n.size(); ++i)
    {
        auto gp = make_point(cfg, cfg.n[i], l_max + 1);
        auto const& f = gp.f;
        Integrand integrand = [&](LatticeState const& u, long off,
                                  std::span<double> out) {
            for (std::size_t k = 0; k < ls.size(); ++k)
                out[k] = bg_residual_increment(u, f, ls[k], off);
            out[ls.size()] = q_field_increment(u, f, l_max, off);
        };
        Reduce reduce = [&](QuadratureObserver const& obs,
                            std::span<double> stats) {
            for (std::size_t k = 0; k < per_copy; ++k)
                stats[k] = mean_final_square(obs, k, per_copy);
            // static Q-field second moment at t = 0
            auto const& first = obs.values().front();
            std::size_t const copies = first.size() / per_copy;
            double acc = 0;
            for (std::size_t c = 0; c < copies; ++c)
            {
                double const v = first[c * per_copy + ls.size()];
                acc += v * v;
            }
            stats[ls.size() + 1] = acc / static_cast<double>(copies);
        };
        auto reps = run_point(cfg, opts, i, gp, per_copy, integrand, width,
                              reduce);
        report.add_steps(static_cast<std::uint64_t>(gp.integ.total_steps())
                         * cfg.ensemble);
        report.note(grid_note(gp));

        double const energy = f.gradient_energy();
        std::vector<SampleSummary> row;
        for (std::size_t k = 0; k < ls.size(); ++k)
        {
            double const norm = cfg.horizon > 0 ? 1.0 / (cfg.horizon * energy)
                                                : 1.0;
            row.push_back(summarize(column(reps, k, norm)));
        }
        res.summaries.push_back(std::move(row));

        // Crude-bound regime at l_max
        double const oracle = static_q_variance(f.gradient(), l_max);
        auto const stat = summarize(column(reps, ls.size() + 1));
        {
            auto& r = report.add(estimate("static_q_field_second_moment",
                                          column(reps, ls.size() + 1)));
            r.n = gp.n;
            r.l = l_max;
            r.reference = oracle;
            report.check("static Q-field second moment matches the Gaussian "
                         "oracle at n = " + std::to_string(gp.n),
                         r.mean, oracle - 3 * stat.standard_error(),
                         oracle + 3 * stat.standard_error(), "3 sigma band");
        }
        if (cfg.horizon > 0)
        {
            double const t2 = cfg.horizon * cfg.horizon;
            auto const q = column(reps, ls.size());
            auto const qs = summarize(q);
            auto& r = report.add(estimate("q_field_integral_second_moment", q));
            r.n = gp.n;
            r.l = l_max;
            r.t = cfg.horizon;
            r.reference = t2 * oracle;
            double const crude = t2 * std::sqrt(static_cast<double>(gp.n))
                                 / static_cast<double>(l_max) * energy;
            report.note("crude bound constant at n = " + std::to_string(gp.n)
                        + ", l = " + std::to_string(l_max) + ": "
                        + format_number(qs.mean / crude));
            report.check("E|int Q|^2 <= t^2 E_mu[Q-field^2] at n = "
                             + std::to_string(gp.n),
                         qs.mean - 3 * qs.standard_error(),
                         -std::numeric_limits<double>::infinity(), t2 * oracle,
                         "Cauchy-Schwarz bound, value is mean - 3 sigma");
        }
        res.raw.push_back(std::move(reps));
        res.points.push_back(std::move(gp));
    }

    if (cfg.horizon == 0)
    {
        report_zero_horizon(report, res);
        return report;
    }
    report_block_grid(report, cfg, res, "bg_residual_second_moment", 1.0);
    return report;
}

//---------------------------------------------------------------------------//
Report run_one_block(ExperimentConfig const& cfg, RunOptions const& opts)
{
    Report report = make_report(cfg);
    auto const& ls = cfg.l;
    std::size_t const l_max = *std::max_element(ls.begin(), ls.end());

    CylinderPolynomial<double> poly;
    for (auto const& term : cfg.observable)
    {
        std::vector<Monomial::Factor> factors;
        for (auto const& [site, power] : term.factors)
            factors.push_back({site, power});
        poly.add_term(Monomial(std::move(factors)), term.coefficient);
    }
    LocalObservable const g(poly);
    double const norm_g = g.l2_norm_squared();
    double const mean_g = wick_expectation(poly);
    {
        EstimateRow r;
        r.quantity = "observable_l2_norm_squared";
        r.mean = r.ci_low = r.ci_high = norm_g;
        report.add(r);
        EstimateRow m;
        m.quantity = "observable_mean";
        m.mean = m.ci_low = m.ci_high = mean_g;
        m.reference = 0.0;
        report.add(m);
    }
    report.check("observable is centered under the product Gaussian",
                 std::abs(mean_g), 0, 1e-12);
    for (std::size_t l : ls)
        g.check_admissible(l);

    std::size_t const reach
        = l_max + 1 + static_cast<std::size_t>(g.max_site() - g.min_site());
    BlockGridResult res;
    for (std::size_t i = 0; i < cfg.n.size(); ++i)
    {
        auto gp = make_point(cfg, cfg.n[i], reach);
        auto const& f = gp.f;
        Integrand integrand = [&](LatticeState const& u, long off,
                                  std::span<double> out) {
            for (std::size_t k = 0; k < ls.size(); ++k)
                out[k] = one_block_increment(u, f, g, ls[k], off);
        };
        Reduce reduce = [&](QuadratureObserver const& obs,
                            std::span<double> stats) {
            for (std::size_t k = 0; k < ls.size(); ++k)
                stats[k] = mean_final_square(obs, k, ls.size());
        };
        auto reps = run_point(cfg, opts, i, gp, ls.size(), integrand,
                              ls.size(), reduce);
        report.add_steps(static_cast<std::uint64_t>(gp.integ.total_steps())
                         * cfg.ensemble);
        report.note(grid_note(gp));
        double const energy = f.gradient_energy();
        double const norm = (cfg.horizon > 0 && norm_g > 0)
                                ? 1.0 / (cfg.horizon * norm_g * energy)
                                : 1.0;
        std::vector<SampleSummary> row;
        for (std::size_t k = 0; k < ls.size(); ++k)
            row.push_back(summarize(column(reps, k, norm)));
        res.summaries.push_back(std::move(row));
        res.raw.push_back(std::move(reps));
        res.points.push_back(std::move(gp));
    }
    if (cfg.horizon == 0 || norm_g == 0)
    {
        report_zero_horizon(report, res);
        return report;
    }
    report_block_grid(report, cfg, res, "one_block_second_moment", norm_g);
    return report;
}

//---------------------------------------------------------------------------//
Report run_ucp_decay(ExperimentConfig const& cfg, RunOptions const& opts)
{
    Report report = make_report(cfg);

    // E_mu[(u_0 u_1 - u_0^2) + 1] by Wick calculus
    {
        using P = CylinderPolynomial<Rational>;
        auto const y = P::variable(0) * P::variable(1)
                       - P::variable(0) * P::variable(0) + P::constant(1);
        double const mean = to_double(wick_expectation(y));
        EstimateRow r;
        r.quantity = "static_mean_ucp_integrand_site";
        r.mean = r.ci_low = r.ci_high = mean;
        r.reference = 0.0;
        report.add(r);
        report.check("E_mu[(u_0 u_1 - u_0^2) + 1] == 0 (exact)", mean, 0, 0);
    }

    std::vector<SampleSummary> summaries;
    std::vector<double> raw_max;
    for (std::size_t i = 0; i < cfg.n.size(); ++i)
    {
        auto gp = make_point(cfg, cfg.n[i], 1);
        auto const& f = gp.f;
        Integrand integrand = [&](LatticeState const& u, long off,
                                  std::span<double> out) {
            out[0] = ucp_statistic_increment(u, f, off);
        };
        Reduce reduce = [&](QuadratureObserver const& obs,
                            std::span<double> stats) {
            std::size_t const copies = obs.integrals().front().size();
            double acc = 0;
            for (std::size_t c = 0; c < copies; ++c)
            {
                double sup = 0;
                for (auto const& rec : obs.integrals())
                    sup = std::max(sup, rec[c] * rec[c]);
                acc += sup;
            }
            stats[0] = acc / static_cast<double>(copies);
        };
        auto reps = run_point(cfg, opts, i, gp, 1, integrand, 1, reduce);
        report.add_steps(static_cast<std::uint64_t>(gp.integ.total_steps())
                         * cfg.ensemble);
        report.note(grid_note(gp) + ", sup over "
                    + std::to_string(gp.integ.total_steps()
                                         / gp.integ.record_stride
                                     + 1)
                    + " grid times");
        double const energy = f.energy();
        double const norm = cfg.horizon > 0 ? 1.0 / (cfg.horizon * energy)
                                            : 1.0;
        auto const x = column(reps, 0, norm);
        auto& row = report.add(estimate("ucp_sup_second_moment", x));
        row.n = gp.n;
        row.t = cfg.horizon;
        summaries.push_back(summarize(x));
        for (double v : column(reps, 0))
            raw_max.push_back(std::abs(v));
        EstimateRow crow = row;
        double const c = std::sqrt(static_cast<double>(gp.n));
        crow.quantity = "ucp_fitted_C";
        crow.mean *= c;
        crow.sd *= c;
        crow.ci_low *= c;
        crow.ci_high *= c;
        report.add(crow);
    }
    if (cfg.horizon == 0)
    {
        report.check("sup |Y|^2 vanishes at zero horizon",
                     *std::max_element(raw_max.begin(), raw_max.end()), 0, 0);
        return report;
    }
    if (cfg.n.size() >= 2)
    {
        std::vector<double> xs(cfg.n.begin(), cfg.n.end());
        std::vector<double> ys;
        for (auto const& s : summaries)
            ys.push_back(s.mean);
        FitRow fit;
        fit.quantity = "ucp_sup_second_moment";
        fit.variable = "n";
        fit.t = cfg.horizon;
        fit.fit = fit_power_law(xs, ys);
        report.add(fit);
        add_doubling_ratios(report, "ucp_sup_second_moment", cfg.n, summaries,
                            0, cfg.horizon);
        check_exponent(report, "ucp sup second moment n-exponent", fit, -0.7,
                       -0.3);
    }
    return report;
}

}  // namespace ssb
