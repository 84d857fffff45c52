//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "test_function.hpp"

using namespace ssb;

TEST_CASE("gaussian energies in closed form")
{
    // int exp(-2x^2) = sqrt(pi/2); int 4x^2 exp(-2x^2) = sqrt(pi/2)
    double const root = std::sqrt(std::numbers::pi / 2);
    auto const g = TestFunction::gaussian();
    CHECK(g.energy() == doctest::Approx(root).epsilon(1e-9));
    CHECK(g.gradient_energy() == doctest::Approx(root).epsilon(1e-9));
    // scale s: int phi^2 = s sqrt(pi/2), int phi'^2 = sqrt(pi/2) / s
    auto const g2 = TestFunction::gaussian(2.0);
    CHECK(g2.energy() == doctest::Approx(2 * root).epsilon(1e-9));
    CHECK(g2.gradient_energy() == doctest::Approx(root / 2).epsilon(1e-9));
    // hermite x exp(-x^2): int x^2 exp(-2x^2) = sqrt(pi/2) / 4
    TestFunction const h(TestFamily::hermite);
    CHECK(h.energy() == doctest::Approx(root / 4).epsilon(1e-9));
}

TEST_CASE("closed-form derivatives against central differences")
{
    for (auto fam : {TestFamily::gaussian, TestFamily::hermite,
                     TestFamily::smoothed_indicator})
    {
        TestFunction const f(fam, 0.8, 0.3);
        double const h = 1e-4;
        for (double x : {-0.7, -0.1, 0.35, 0.6, 1.2})
        {
            double const d1 = (f.value(x + h) - f.value(x - h)) / (2 * h);
            double const d2
                = (f.value(x + h) - 2 * f.value(x) + f.value(x - h)) / (h * h);
            CHECK(f.d1(x) == doctest::Approx(d1).epsilon(1e-5).scale(1));
            CHECK(f.d2(x) == doctest::Approx(d2).epsilon(1e-3).scale(1));
        }
    }
}

TEST_CASE("support radius truncates at the threshold")
{
    auto const g = TestFunction::gaussian(1.0, 2.0);
    double const r = g.support_radius();
    // exp(-R^2) = 1e-12
    CHECK(r == doctest::Approx(std::sqrt(12 * std::log(10.0))).epsilon(1e-3));
    CHECK(std::abs(g.value(2.0 + r + 1e-3)) < 1e-12);
}

TEST_CASE("torus size rule")
{
    CHECK(ceil_sqrt(256) == 16);
    CHECK(ceil_sqrt(257) == 17);
    CHECK(ceil_sqrt(1) == 1);
    // n = 256, R = 3: 8 * 16 * 3
    CHECK(required_sites(256, 3.0) == 384);
    CHECK(required_sites(64, 0.5) == 32);
}

TEST_CASE("sampled window and discrete operators")
{
    auto const phi = TestFunction::gaussian();
    std::uint64_t const n = 64;
    SampledTestFunction const f(phi, n);
    double const root = 8;
    auto const v = f.values();
    CHECK(v.front() == 0);
    CHECK(v.back() == 0);
    CHECK(f.hi() - f.lo() + 1 == static_cast<long>(f.span()));
    for (std::size_t i = 1; i + 1 < f.span(); ++i)
    {
        long const j = f.lo() + static_cast<long>(i);
        CHECK(v[i] == doctest::Approx(phi.value(j / root)));
        CHECK(f.gradient()[i] == doctest::Approx(root * (v[i + 1] - v[i])));
        CHECK(f.laplacian()[i]
              == doctest::Approx(64 * (v[i + 1] + v[i - 1] - 2 * v[i])));
    }
    CHECK(f.energy() == doctest::Approx(discrete_energy(v, n)));
    CHECK(f.gradient_energy() == doctest::Approx(discrete_energy(f.gradient(), n)));
    // Riemann sums of smooth rapidly decaying functions converge fast.
    CHECK(f.energy() == doctest::Approx(phi.energy()).epsilon(1e-8));
    CHECK(f.gradient_energy() == doctest::Approx(phi.gradient_energy()).epsilon(0.01));
}

TEST_CASE("summation by parts is exact on the window")
{
    // sum_j phi_j lap psi_j = -sum_j grad phi_j grad psi_j (n scaling: the
    // Laplacian carries n, each gradient sqrt n)
    SampledTestFunction const f(TestFunction::gaussian(), 100);
    double lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < f.span(); ++i)
    {
        lhs += f.values()[i] * f.laplacian()[i];
        rhs -= f.gradient()[i] * f.gradient()[i];
    }
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("inner products")
{
    auto const g = TestFunction::gaussian();
    CHECK(inner_product(g, g) == doctest::Approx(g.energy()).epsilon(1e-9));
    CHECK(std::abs(inner_product(g, TestFunction(TestFamily::hermite))) < 1e-12);
    TestFunction const far(TestFamily::gaussian, 1.0,
                           2 * g.support_radius() + 1);
    CHECK(std::abs(inner_product(g, far)) < 1e-20);
}

TEST_CASE("invalid parameters")
{
    CHECK_THROWS(TestFunction(TestFamily::gaussian, 0.0));
    CHECK_THROWS(SampledTestFunction(TestFunction::gaussian(), 0));
    CHECK_THROWS(test_family_from_string("box"));
}
