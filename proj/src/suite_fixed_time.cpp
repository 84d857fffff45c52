//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file suite_fixed_time.cpp
//! Fixed-time marginals of the fluctuation field against white noise.
//---------------------------------------------------------------------------//
#include <cmath>
#include <complex>

#include "fields.hpp"
#include "spectral.hpp"
#include "suites.hpp"

namespace ssb
{
namespace
{
struct Probe
{
    std::string name;
    TestFunction phi;
};

//! X^n at every translate s of a fixed window, by FFT correlation.
class ShiftedFields
{
  public:
    ShiftedFields(std::vector<Probe> const& probes, std::uint64_t n,
                  std::size_t sites)
        : fft_(sites), scale_(std::pow(static_cast<double>(n), -0.25))
    {
        long const m = static_cast<long>(sites);
        for (auto const& p : probes)
        {
            SampledTestFunction const f(p.phi, n);
            if (f.span() > sites)
                throw Error("test function '" + p.name
                            + "' does not fit on the torus");
            auto real = fft_.real();
            std::fill(real.begin(), real.end(), 0.0);
            auto const v = f.values();
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                long const j = f.lo() + static_cast<long>(i);
                real[static_cast<std::size_t>(((j % m) + m) % m)] += v[i];
            }
            fft_.forward();
            auto spec = fft_.spectrum();
            kernels_.emplace_back(spec.begin(), spec.end());
        }
    }

    //! out[p][s] = n^{-1/4} sum_j phi^p_j u_{j+s}
    void evaluate(LatticeState const& u, std::vector<std::vector<double>>& out)
    {
        auto real = fft_.real();
        std::copy(u.values().begin(), u.values().end(), real.begin());
        fft_.forward();
        auto spec = fft_.spectrum();
        std::vector<std::complex<double>> const uhat(spec.begin(), spec.end());
        double const norm = scale_ / static_cast<double>(fft_.size());
        out.resize(kernels_.size());
        for (std::size_t p = 0; p < kernels_.size(); ++p)
        {
            for (std::size_t k = 0; k < uhat.size(); ++k)
                spec[k] = std::conj(kernels_[p][k]) * uhat[k];
            fft_.inverse();
            out[p].assign(real.begin(), real.end());
            for (double& x : out[p])
                x *= norm;
        }
    }

  private:
    RealFft fft_;
    double scale_;
    std::vector<std::vector<std::complex<double>>> kernels_;
};

//! Shift-averaged moments of one replicate at one record time.
struct Moments
{
    std::vector<double> mean;    // per probe
    std::vector<double> second;  // per probe
    std::vector<double> fourth;  // per probe
    std::vector<double> cross;   // upper triangle, p < q
};

class MomentObserver final : public Observer
{
  public:
    MomentObserver(ShiftedFields& fields, std::size_t probes)
        : fields_(fields), probes_(probes)
    {
    }

    void record(LatticeState const& u, std::size_t) override
    {
        fields_.evaluate(u, x_);
        Moments m;
        double const count = static_cast<double>(u.size());
        for (std::size_t p = 0; p < probes_; ++p)
        {
            double s1 = 0, s2 = 0, s4 = 0;
            for (double x : x_[p])
            {
                double const x2 = x * x;
                s1 += x;
                s2 += x2;
                s4 += x2 * x2;
            }
            m.mean.push_back(s1 / count);
            m.second.push_back(s2 / count);
            m.fourth.push_back(s4 / count);
        }
        for (std::size_t p = 0; p < probes_; ++p)
        {
            for (std::size_t q = p + 1; q < probes_; ++q)
            {
                double s = 0;
                for (std::size_t i = 0; i < x_[p].size(); ++i)
                    s += x_[p][i] * x_[q][i];
                m.cross.push_back(s / count);
            }
        }
        records_.push_back(std::move(m));
    }

    std::vector<Moments> take() { return std::move(records_); }

  private:
    ShiftedFields& fields_;
    std::size_t probes_;
    std::vector<std::vector<double>> x_;
    std::vector<Moments> records_;
};

//! Kurtosis mean(b) / mean(a)^2 with a delta-method standard error.
std::pair<double, double>
kurtosis_estimate(std::vector<double> const& a, std::vector<double> const& b)
{
    auto const sa = summarize(a);
    auto const sb = summarize(b);
    double const k = sb.mean / (sa.mean * sa.mean);
    double const ga = -2 * sb.mean / (sa.mean * sa.mean * sa.mean);
    double const gb = 1 / (sa.mean * sa.mean);
    double const var = ga * ga * sa.sd * sa.sd + gb * gb * sb.sd * sb.sd
                       + 2 * ga * gb * sample_covariance(a, b);
    return {k, std::sqrt(std::max(var, 0.0) / static_cast<double>(a.size()))};
}

double discrete_inner(TestFunction const& phi, TestFunction const& psi,
                      std::uint64_t n)
{
    SampledTestFunction const f(phi, n), g(psi, n);
    double s = 0;
    for (long j = std::max(f.lo(), g.lo()); j <= std::min(f.hi(), g.hi()); ++j)
        s += f.values()[static_cast<std::size_t>(j - f.lo())]
             * g.values()[static_cast<std::size_t>(j - g.lo())];
    return s / std::sqrt(static_cast<double>(n));
}
}  // namespace

Report run_fixed_time_field(ExperimentConfig const& cfg, RunOptions const& opts)
{
    Report report = make_report(cfg);
    std::uint64_t const n = cfg.n.front();
    std::size_t const sites = cfg.sites_for(n);
    auto const params = cfg.params(n, sites);
    auto const integ = cfg.integrator_for(n, cfg.horizon);

    TestFunction const primary = cfg.test_function();
    double const far = 2 * primary.support_radius() + 1;
    std::vector<Probe> probes{
        {"phi", primary},
        {"phi_disjoint", TestFunction(primary.family(), primary.param(), far)},
    };
    if (primary.family() != TestFamily::gaussian)
        probes.push_back({"gaussian", TestFunction::gaussian(cfg.phi_scale)});
    if (primary.family() != TestFamily::hermite)
        probes.push_back(
            {"hermite", TestFunction(TestFamily::hermite, cfg.phi_scale)});
    if (primary.family() != TestFamily::smoothed_indicator)
        probes.push_back({"smoothed_indicator",
                          TestFunction(TestFamily::smoothed_indicator,
                                       cfg.phi_scale)});
    std::size_t const np = probes.size();

    std::string battery;
    for (auto const& p : probes)
        battery += (battery.empty() ? "" : "; ") + p.name + " = "
                   + p.phi.describe();
    report.note("battery: " + battery);
    report.note("moments are averaged over all " + std::to_string(sites)
                + " translates of each test function per replicate");

    auto reps = run_ensemble<std::vector<Moments>>(
        cfg.ensemble, opts.threads, [&](std::size_t r) {
            NoiseStream rng(cfg.seed, stream_id(0, r));
            auto u0 = sample_invariant(rng, sites);
            ShiftedFields fields(probes, n, sites);
            MomentObserver obs(fields, np);
            Observer* list[] = {&obs};
            simulate(u0, params, integ, rng, list, cfg.nonlinearity);
            return obs.take();
        });
    report.add_steps(static_cast<std::uint64_t>(integ.total_steps())
                     * cfg.ensemble);

    std::size_t const records = reps.front().size();
    std::size_t const last = records - 1;
    double const record_dt = integ.dt * static_cast<double>(integ.record_stride)
                             / static_cast<double>(n);
    auto time_of = [&](std::size_t k) {
        return k == last ? cfg.horizon
                         : std::min(cfg.horizon,
                                    static_cast<double>(k) * record_dt);
    };

    auto column = [&](std::size_t k, auto pick) {
        std::vector<double> x;
        x.reserve(reps.size());
        for (auto const& r : reps)
            x.push_back(pick(r[k]));
        return x;
    };

    for (std::size_t k = 0; k < records; ++k)
    {
        double const t = time_of(k);
        for (std::size_t p = 0; p < np; ++p)
        {
            SampledTestFunction const f(probes[p].phi, n);
            auto const a = column(k, [p](Moments const& m) {
                return m.second[p];
            });
            auto const b = column(k, [p](Moments const& m) {
                return m.fourth[p];
            });
            auto const mu = column(k, [p](Moments const& m) {
                return m.mean[p];
            });

            auto& r0 = report.add(estimate("mean_" + probes[p].name, mu));
            r0.n = n;
            r0.t = t;
            r0.reference = 0.0;

            auto& r1 = report.add(estimate("second_moment_" + probes[p].name, a));
            r1.n = n;
            r1.t = t;
            r1.reference = f.energy();
            double const ratio = r1.mean / f.energy();

            auto const [kurt, kurt_se] = kurtosis_estimate(a, b);
            EstimateRow kr;
            kr.quantity = "kurtosis_" + probes[p].name;
            kr.n = n;
            kr.t = t;
            kr.replicates = a.size();
            kr.mean = kurt;
            kr.sd = kurt_se * std::sqrt(static_cast<double>(a.size()));
            kr.ci_low = kurt - 1.96 * kurt_se;
            kr.ci_high = kurt + 1.96 * kurt_se;
            kr.reference = 3.0;
            report.add(kr);

            if (p == 0 && k == last)
            {
                report.check("E[X_t(phi)^2] / E_n(phi) within 1 +- 2%", ratio,
                             0.98, 1.02,
                             "continuum energy "
                                 + format_number(probes[p].phi.energy()));
                report.check("kurtosis of X_t(phi) within CI of 3", 3.0,
                             kr.ci_low, kr.ci_high,
                             "estimate " + format_number(kurt));
            }
        }

        std::size_t idx = 0;
        for (std::size_t p = 0; p < np; ++p)
        {
            for (std::size_t q = p + 1; q < np; ++q, ++idx)
            {
                auto const c = column(k, [idx](Moments const& m) {
                    return m.cross[idx];
                });
                auto& row = report.add(estimate(
                    "cross_" + probes[p].name + "_" + probes[q].name, c));
                row.n = n;
                row.t = t;
                row.reference = discrete_inner(probes[p].phi, probes[q].phi, n);
                if (k == last && p == 0 && q == 1)
                {
                    report.check("disjoint-support covariance within CI of 0",
                                 0.0, row.ci_low, row.ci_high,
                                 "estimate " + format_number(row.mean)
                                     + ", continuum inner product "
                                     + format_number(inner_product(
                                         probes[p].phi, probes[q].phi)));
                }
            }
        }
    }
    return report;
}

}  // namespace ssb
