//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <doctest.h>

#include "integrator.hpp"
#include "spectral.hpp"

using namespace ssb;

namespace
{
Eigen::MatrixXd periodic_laplacian(std::size_t m)
{
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t j = 0; j < m; ++j)
    {
        a(j, j) = -2;
        a(j, (j + 1) % m) += 1;
        a(j, (j + m - 1) % m) += 1;
    }
    return a;
}

IntegratorConfig config(Scheme s, double dt)
{
    IntegratorConfig c;
    c.scheme = s;
    c.dt = dt;
    c.t_end = dt;
    return c;
}

//! Columns: response of one step to unit initial data (eta = 0) and to
//! unit noise increments (u = 0).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd>
probe_linear_step(std::size_t m, double dt, Scheme scheme)
{
    auto const p = ScalingParams::fixed(1, 0.0, m);
    auto const cfg = config(scheme, dt);
    Eigen::MatrixXd flow(m, m), noise(m, m);
    for (std::size_t k = 0; k < m; ++k)
    {
        std::vector<double> e(m, 0.0), zero(m, 0.0);
        e[k] = 1;
        auto const a = scheme == Scheme::euler
                           ? euler_step(LatticeState(e), p, cfg, zero)
                           : ou_splitting_step(LatticeState(e), p, cfg, zero);
        auto const b
            = scheme == Scheme::euler
                  ? euler_step(LatticeState(zero), p, cfg, e)
                  : ou_splitting_step(LatticeState(zero), p, cfg, e);
        for (std::size_t j = 0; j < m; ++j)
        {
            flow(j, k) = a.values()[j];
            noise(j, k) = b.values()[j];
        }
    }
    return {flow, noise};
}
}  // namespace

TEST_CASE("laplacian eigenvalues and heat kernel against expm")
{
    for (std::size_t m : {4, 7, 16})
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
            -periodic_laplacian(m));
        std::vector<double> lam;
        for (std::size_t k = 0; k < m; ++k)
            lam.push_back(laplacian_eigenvalue(k, m));
        std::sort(lam.begin(), lam.end());
        for (std::size_t k = 0; k < m; ++k)
            CHECK(lam[k] == doctest::Approx(es.eigenvalues()[k]).epsilon(1e-12));

        for (double t : {0.0, 0.3, 1.0, 5.0})
        {
            Eigen::MatrixXd const e = (0.5 * t * periodic_laplacian(m)).exp();
            auto const k = heat_kernel(t, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    CHECK(k[(i + m - j) % m]
                          == doctest::Approx(e(i, j)).epsilon(1e-10).scale(1));
        }
    }
}

TEST_CASE("real FFT round trip")
{
    RealFft fft(12);
    std::vector<double> x(12);
    for (std::size_t j = 0; j < 12; ++j)
        x[j] = std::sin(0.7 * static_cast<double>(j * j));
    std::copy(x.begin(), x.end(), fft.real().begin());
    fft.forward();
    CHECK(fft.spectrum()[0].real()
          == doctest::Approx(std::accumulate(x.begin(), x.end(), 0.0)));
    fft.inverse();
    for (std::size_t j = 0; j < 12; ++j)
        CHECK(fft.real()[j] / 12 == doctest::Approx(x[j]).scale(1));
}

TEST_CASE("smooth FFT sizes")
{
    CHECK(smooth_size(1) == 1);
    CHECK(smooth_size(337) == 343);
    CHECK(smooth_size(505) == 512);
    CHECK(smooth_size(673) == 675);
    CHECK(smooth_size(968) == 972);
    CHECK(smooth_size(384) == 384);
    CHECK(smooth_size(11) == 12);
}

TEST_CASE("euler step by hand")
{
    std::vector<double> u{1, -2, 0.5, 3, 0};
    std::vector<double> eta{0.1, 0.2, -0.3, 0.0, 0.4};
    auto const p = ScalingParams::fixed(1, 0.7, 5);
    auto const cfg = config(Scheme::euler, 0.05);
    LatticeState const s(u);
    auto const out = euler_step(s, p, cfg, eta);
    auto const d = drift(s, p);
    for (long j = 0; j < 5; ++j)
    {
        double const noise = eta[static_cast<std::size_t>(j)]
                             - eta[static_cast<std::size_t>((j + 4) % 5)];
        CHECK(out[j] == doctest::Approx(s[j] + 0.05 * d[j] + noise));
    }
    CHECK(out.time() == doctest::Approx(0.05));
}

TEST_CASE("ou-splitting linear flow is the exact heat semigroup")
{
    std::size_t const m = 9;
    double const dt = 0.37;
    auto const [flow, noise] = probe_linear_step(m, dt, Scheme::ou_splitting);
    Eigen::MatrixXd const expected = (0.5 * dt * periodic_laplacian(m)).exp();
    CHECK((flow - expected).cwiseAbs().maxCoeff() < 1e-12);

    // Stationary covariance: flow flow^T + dt noise noise^T = I, so the
    // product Gaussian measure is preserved exactly at gamma = 0.
    Eigen::MatrixXd const cov
        = flow * flow.transpose() + dt * noise * noise.transpose();
    CHECK((cov - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff()
          < 1e-12);

    // Noise map: g(-Lap dt) applied to the conservative difference with
    // g(x) = sqrt((1 - e^{-x}) / x).
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(-periodic_laplacian(m));
    Eigen::VectorXd g(m);
    for (std::size_t k = 0; k < m; ++k)
    {
        double const x = std::max(es.eigenvalues()[k], 0.0) * dt;
        g[k] = x < 1e-14 ? 1.0 : std::sqrt(-std::expm1(-x) / x);
    }
    Eigen::MatrixXd diff = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t j = 0; j < m; ++j)
    {
        diff(j, j) = 1;
        diff(j, (j + m - 1) % m) = -1;
    }
    Eigen::MatrixXd const gm
        = es.eigenvectors() * g.asDiagonal() * es.eigenvectors().transpose();
    CHECK((noise - gm * diff).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("euler linear step is I + dt Lap / 2")
{
    std::size_t const m = 6;
    auto const [flow, noise] = probe_linear_step(m, 0.2, Scheme::euler);
    Eigen::MatrixXd const expected = Eigen::MatrixXd::Identity(m, m)
                                     + 0.1 * periodic_laplacian(m);
    CHECK((flow - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("ou-splitting kick precedes the linear flow")
{
    std::size_t const m = 8;
    double const dt = 0.1, gamma = 0.6;
    std::vector<double> u{0.3, -1.2, 0.8, 2.0, -0.5, 0.1, 1.1, -0.9};
    std::vector<double> zero(m, 0.0);
    auto const p = ScalingParams::fixed(1, gamma, m);
    LatticeState const s(u);
    auto const out = ou_splitting_step(s, p, config(Scheme::ou_splitting, dt),
                                       zero);
    Eigen::VectorXd kicked(m);
    for (long j = 0; j < static_cast<long>(m); ++j)
        kicked[j] = s[j] + dt * gamma * nonlinearity(s, j);
    Eigen::VectorXd const expected
        = (0.5 * dt * periodic_laplacian(m)).exp() * kicked;
    for (std::size_t j = 0; j < m; ++j)
        CHECK(out.values()[j] == doctest::Approx(expected[j]).scale(1));
}

TEST_CASE("momentum is conserved along trajectories")
{
    for (auto scheme : {Scheme::euler, Scheme::ou_splitting})
    {
        std::size_t const m = 64;
        NoiseStream rng(5, 1);
        auto u0 = sample_invariant(rng, m);
        double const s0 = std::accumulate(u0.values().begin(),
                                          u0.values().end(), 0.0);
        IntegratorConfig cfg;
        cfg.scheme = scheme;
        cfg.dt = 0.05;
        cfg.t_end = 50;
        cfg.record_stride = 100;
        auto const res = simulate(u0, ScalingParams::fixed(1, 0.5, m), cfg,
                                  rng, {});
        double const s1 = std::accumulate(res.final_state.values().begin(),
                                          res.final_state.values().end(), 0.0);
        CHECK(std::abs(s1 - s0) <= 1e-10 * 1000 * m);
        CHECK(res.steps == 1000);
        CHECK(res.record_steps.front() == 0);
        CHECK(res.record_steps.back() == 1000);
        CHECK(res.record_steps.size() == 11);
    }
}

TEST_CASE("record grid includes a final partial stride")
{
    IntegratorConfig cfg;
    cfg.dt = 0.1;
    cfg.t_end = 2.5;
    cfg.record_stride = 10;
    NoiseStream rng(1, 0);
    auto const res = simulate(sample_invariant(rng, 8),
                              ScalingParams::fixed(1, 0.1, 8), cfg, rng, {});
    CHECK(res.record_steps == std::vector<std::size_t>{0, 10, 20, 25});
}

TEST_CASE("integrator validation")
{
    IntegratorConfig cfg;
    cfg.scheme = Scheme::euler;
    cfg.dt = 1.5;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.dt = 0.5;
    CHECK_NOTHROW(cfg.validate());
    cfg.dt = -1;
    CHECK_THROWS(cfg.validate());
    cfg.scheme = Scheme::ou_splitting;
    cfg.dt = 1.5;
    cfg.t_end = 3;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.total_steps() == 2);
}

TEST_CASE("divergent trajectories raise TrajectoryError")
{
    // Naive current with a strong coupling blows up in finite time.
    IntegratorConfig cfg;
    cfg.scheme = Scheme::euler;
    cfg.dt = 0.5;
    cfg.t_end = 500;
    cfg.record_stride = 1;
    std::vector<double> u(8, 0.0);
    u[0] = 4;
    NoiseStream rng(1, 0);
    CHECK_THROWS_AS(simulate(LatticeState(u), ScalingParams::fixed(1, 3, 8),
                             cfg, rng, {}, Nonlinearity::naive),
                    TrajectoryError);
}

TEST_CASE("conservative noise sums to zero")
{
    NoiseStream rng(3, 0);
    auto const d = sample_conservative_noise(rng, 0.1, 33);
    CHECK(std::abs(std::accumulate(d.begin(), d.end(), 0.0)) < 1e-13);
}
