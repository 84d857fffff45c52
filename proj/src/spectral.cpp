//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file spectral.cpp
//---------------------------------------------------------------------------//
#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "lattice.hpp"

namespace ssb
{
namespace
{
// FFTW's planner is not re-entrant.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}
}  // namespace

RealFft::RealFft(std::size_t size) : size_(size)
{
    if (size < min_sites)
    {
        throw Error("transform size too small");
    }
    std::lock_guard lock(planner_mutex());
    real_ = fftw_alloc_real(size_);
    auto* spec = fftw_alloc_complex(size_ / 2 + 1);
    spectrum_ = spec;
    int const n = static_cast<int>(size_);
    forward_plan_ = fftw_plan_dft_r2c_1d(n, real_, spec, FFTW_ESTIMATE);
    inverse_plan_ = fftw_plan_dft_c2r_1d(n, spec, real_, FFTW_ESTIMATE);
    if (!forward_plan_ || !inverse_plan_)
    {
        throw Error("FFTW planning failed");
    }
}

RealFft::~RealFft()
{
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
    fftw_free(real_);
    fftw_free(spectrum_);
}

std::span<std::complex<double>> RealFft::spectrum()
{
    return {reinterpret_cast<std::complex<double>*>(spectrum_), modes()};
}

void RealFft::forward()
{
    fftw_execute(static_cast<fftw_plan>(forward_plan_));
}

void RealFft::inverse()
{
    // c2r destroys its input; callers always rebuild the spectrum.
    fftw_execute(static_cast<fftw_plan>(inverse_plan_));
}

//---------------------------------------------------------------------------//
std::size_t smooth_size(std::size_t sites)
{
    for (std::size_t m = std::max<std::size_t>(sites, 1);; ++m)
    {
        std::size_t r = m;
        for (std::size_t p : {2, 3, 5, 7})
        {
            while (r % p == 0)
                r /= p;
        }
        if (r == 1)
            return m;
    }
}

double laplacian_eigenvalue(std::size_t k, std::size_t sites)
{
    return 2.0
           - 2.0
                 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k)
                            / static_cast<double>(sites));
}

std::vector<double> heat_kernel(double t, std::size_t sites)
{
    std::vector<double> kernel(sites, 0.0);
    double const m = static_cast<double>(sites);
    for (std::size_t d = 0; d < sites; ++d)
    {
        double acc = 0;
        for (std::size_t k = 0; k < sites; ++k)
        {
            double const decay
                = std::exp(-0.5 * t * laplacian_eigenvalue(k, sites));
            acc += decay
                   * std::cos(2.0 * std::numbers::pi * static_cast<double>((k * d) % sites)
                              / m);
        }
        kernel[d] = acc / m;
    }
    return kernel;
}

}  // namespace ssb
