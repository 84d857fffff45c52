//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file suite_invariance.cpp
//! Exact certification of E[L f] = 0 and Gaussian integration by parts.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>

#include "polynomial.hpp"
#include "rng.hpp"
#include "suites.hpp"

namespace ssb
{
namespace
{
struct CorpusEntry
{
    CylinderPolynomial<Rational> p;
    Rational gamma;
    std::size_t sites = 0;
};

std::vector<CorpusEntry> make_corpus(ExperimentConfig const& cfg)
{
    NoiseStream rng(cfg.seed, 0);
    std::vector<CorpusEntry> corpus;
    // Fixed members first, then random ones.
    auto u = [](long j) { return CylinderPolynomial<Rational>::variable(j); };
    std::vector<CylinderPolynomial<Rational>> fixed{u(0) * u(0),
                                                    u(0) * u(1) * u(2)};
    for (std::size_t i = 0; i < cfg.corpus; ++i)
    {
        CorpusEntry e;
        e.p = i < fixed.size() ? fixed[i]
                               : random_polynomial(rng, cfg.degree, cfg.window);
        auto const k = 1 + static_cast<long>(std::floor(rng.uniform() * 1000));
        e.gamma = Rational(k, 1000);
        e.sites = std::max<std::size_t>(min_sites, e.p.window_width() + 2);
        corpus.push_back(std::move(e));
    }
    return corpus;
}

EstimateRow max_row(std::string quantity, double value, std::size_t count)
{
    EstimateRow r;
    r.quantity = std::move(quantity);
    r.replicates = count;
    r.mean = r.ci_low = r.ci_high = value;
    r.reference = 0.0;
    return r;
}
}  // namespace

Report run_invariance_exact(ExperimentConfig const& cfg, RunOptions const&)
{
    Report report = make_report(cfg);
    auto const corpus = make_corpus(cfg);
    bool const rational = cfg.arithmetic != "float";
    bool const floating = cfg.arithmetic != "rational";

    report.note("corpus: " + std::to_string(corpus.size())
                + " polynomials, degree <= " + std::to_string(cfg.degree)
                + ", window <= " + std::to_string(cfg.window)
                + " sites, gamma = k/1000 with k uniform in 1..1000");

    if (rational)
    {
        std::size_t nonzero_full = 0;
        std::size_t nonzero_sym = 0;
        std::size_t nonzero_anti = 0;
        std::size_t nonzero_ibp = 0;
        std::size_t ibp_cases = 0;
        std::size_t naive_detected = 0;
        for (auto const& e : corpus)
        {
            if (check_invariance(e.p, e.gamma, e.sites) != 0)
                ++nonzero_full;
            if (check_invariance(e.p, e.gamma, e.sites,
                                 GeneratorPart::symmetric)
                != 0)
                ++nonzero_sym;
            if (check_invariance(e.p, e.gamma, e.sites,
                                 GeneratorPart::antisymmetric)
                != 0)
                ++nonzero_anti;
            if (check_invariance(e.p, e.gamma, e.sites, GeneratorPart::full,
                                 Nonlinearity::naive)
                != 0)
                ++naive_detected;
            auto const [lo, hi] = e.p.window();
            for (long j = std::min(lo, 0L); j <= std::max(hi, 0L); ++j)
            {
                ++ibp_cases;
                if (check_ibp(e.p, j) != 0)
                    ++nonzero_ibp;
            }
        }
        auto const n = corpus.size();
        report.add(max_row("rational_nonzero_E[Lf]",
                           static_cast<double>(nonzero_full), n));
        report.add(max_row("rational_nonzero_E[Sf]",
                           static_cast<double>(nonzero_sym), n));
        report.add(max_row("rational_nonzero_E[Af]",
                           static_cast<double>(nonzero_anti), n));
        report.add(max_row("rational_nonzero_ibp",
                           static_cast<double>(nonzero_ibp), ibp_cases));
        EstimateRow naive = max_row("naive_current_nonzero_E[Lf]",
                                    static_cast<double>(naive_detected), n);
        naive.reference.reset();
        report.add(naive);
        report.check("rational E[L f] == 0 for every corpus member",
                     static_cast<double>(nonzero_full), 0, 0);
        report.check("rational E[S f] == 0 for every corpus member",
                     static_cast<double>(nonzero_sym), 0, 0);
        report.check("rational E[A f] == 0 for every corpus member",
                     static_cast<double>(nonzero_anti), 0, 0);
        report.check("rational E[u_j f] == E[d_j f] at every window site",
                     static_cast<double>(nonzero_ibp), 0, 0,
                     std::to_string(ibp_cases) + " (polynomial, site) pairs");
        report.note("naive current w_j = u_j^2 gives E[L f] != 0 for "
                    + std::to_string(naive_detected) + " of "
                    + std::to_string(n) + " corpus members");
    }

    if (floating)
    {
        double max_full = 0;
        double max_ibp = 0;
        for (auto const& e : corpus)
        {
            auto const p = e.p.cast<double>();
            double const g = to_double(e.gamma);
            max_full = std::max(max_full, check_invariance(p, g, e.sites));
            auto const [lo, hi] = p.window();
            for (long j = std::min(lo, 0L); j <= std::max(hi, 0L); ++j)
                max_ibp = std::max(max_ibp, check_ibp(p, j));
        }
        report.add(max_row("float_max_abs_E[Lf]", max_full, corpus.size()));
        report.add(max_row("float_max_abs_ibp", max_ibp, corpus.size()));
        report.check("float max |E[L f]| <= 1e-9", max_full, 0, 1e-9);
        report.check("float max |E[u_j f] - E[d_j f]| <= 1e-9", max_ibp, 0,
                     1e-9);
    }
    return report;
}

}  // namespace ssb
