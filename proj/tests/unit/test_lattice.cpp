//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "integrator.hpp"
#include "lattice.hpp"
#include "rng.hpp"

using namespace ssb;

namespace
{
LatticeState random_state(std::uint64_t seed, std::size_t m)
{
    NoiseStream rng(seed, 0);
    return sample_invariant(rng, m);
}
}  // namespace

TEST_CASE("periodic indexing")
{
    LatticeState u({1, 2, 3, 4, 5});
    CHECK(u[-1] == 5);
    CHECK(u[5] == 1);
    CHECK(u[-6] == 5);
    CHECK(u.shifted(2)[0] == 3);
    CHECK(u.shifted(-1)[0] == 5);
}

TEST_CASE("local current and nonlinearity by hand")
{
    LatticeState u({1, 2, -1, 3});
    // w_0 = (1 + 2 + 4) / 3, w_3 = (9 + 3 + 1) / 3
    CHECK(local_current(u, 0) == doctest::Approx(7.0 / 3));
    CHECK(local_current(u, 3) == doctest::Approx(13.0 / 3));
    CHECK(nonlinearity(u, 0) == doctest::Approx(7.0 / 3 - 13.0 / 3));
    CHECK(local_current(u, 1, Nonlinearity::naive) == 4);
    CHECK(nonlinearity(u, 1, Nonlinearity::naive) == 3);
    CHECK(discrete_laplacian(u, 0) == 2 + 3 - 2);
}

TEST_CASE("scaling coupling")
{
    CHECK(scaling_gamma(256) == doctest::Approx(0.25));
    CHECK(ScalingParams::scaling(16, 8).gamma == doctest::Approx(0.5));
    CHECK_THROWS(ScalingParams::fixed(0, 1, 8));
}

TEST_CASE("drift conserves momentum")
{
    for (std::size_t m : {4, 5, 16, 101})
    {
        auto const u = random_state(m, m);
        for (auto kind : {Nonlinearity::sasamoto_spohn, Nonlinearity::naive})
        {
            auto const d = drift(u, ScalingParams::fixed(1, 0.7, m), kind);
            double const s = std::accumulate(d.begin(), d.end(), 0.0);
            CHECK(std::abs(s) < 1e-12 * static_cast<double>(m));
        }
    }
}

TEST_CASE("Sasamoto-Spohn nonlinearity conserves the energy sum u_j^2")
{
    // sum_j u_j B_j telescopes to zero for w_j = (a^2 + ab + b^2)/3 since
    // (b - a) w = (b^3 - a^3)/3; the naive current does not.
    auto const u = random_state(3, 50);
    double ss = 0, naive = 0;
    for (long j = 0; j < 50; ++j)
    {
        ss += u[j] * nonlinearity(u, j);
        naive += u[j] * nonlinearity(u, j, Nonlinearity::naive);
    }
    CHECK(std::abs(ss) < 1e-12);
    CHECK(std::abs(naive) > 1e-3);
}

TEST_CASE("vectorized kernels match the pointwise operators")
{
    std::size_t const m = 37;
    auto const u = random_state(9, m);
    std::vector<double> w(m), b(m), d(m), scratch(m);
    for (auto kind : {Nonlinearity::sasamoto_spohn, Nonlinearity::naive})
    {
        current_field(u.values(), w, kind);
        nonlinearity_field(u.values(), b, scratch, kind);
        drift_field(u.values(), 0.3, d, scratch, kind);
        auto const ref = drift(u, ScalingParams::fixed(1, 0.3, m), kind);
        for (std::size_t j = 0; j < m; ++j)
        {
            long const jj = static_cast<long>(j);
            CHECK(w[j] == doctest::Approx(local_current(u, jj, kind)));
            CHECK(b[j] == doctest::Approx(nonlinearity(u, jj, kind)));
            CHECK(d[j] == doctest::Approx(ref[j]));
            CHECK(ref[j]
                  == doctest::Approx(0.5 * discrete_laplacian(u, jj)
                                     + 0.3 * nonlinearity(u, jj, kind)));
        }
    }
}

TEST_CASE("invalid states")
{
    CHECK_THROWS(LatticeState(std::vector<double>{}));
    LatticeState u({1, 2, 3, 4});
    CHECK(u.all_finite());
    u[2] = NAN;
    CHECK_FALSE(u.all_finite());
    CHECK_THROWS(nonlinearity_from_string("quadratic"));
    CHECK(nonlinearity_from_string("naive") == Nonlinearity::naive);
}
