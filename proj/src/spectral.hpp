//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file spectral.hpp
//! Real-to-complex transforms on the torus and circulant Laplacian spectra.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ssb
{
//---------------------------------------------------------------------------//
/*!
 * Owning r2c/c2r transform pair of fixed length M.
 *
 * Buffers are allocated by the transform itself so every execution sees the
 * same alignment, which keeps results bit-identical across instances. The
 * inverse is unnormalized (returns M times the input).
 */
class RealFft
{
  public:
    explicit RealFft(std::size_t size);
    ~RealFft();
    RealFft(RealFft const&) = delete;
    RealFft& operator=(RealFft const&) = delete;

    std::size_t size() const { return size_; }
    std::size_t modes() const { return size_ / 2 + 1; }

    std::span<double> real() { return {real_, size_}; }
    std::span<std::complex<double>> spectrum();

    //! real() -> spectrum()
    void forward();
    //! spectrum() -> real(), scaled by M
    void inverse();

  private:
    std::size_t size_;
    double* real_ = nullptr;
    void* spectrum_ = nullptr;
    void* forward_plan_ = nullptr;
    void* inverse_plan_ = nullptr;
};

//! Smallest M' >= M whose prime factors are all in {2, 3, 5, 7}.
std::size_t smooth_size(std::size_t sites);

//! lambda_k = 2 - 2 cos(2 pi k / M): eigenvalues of -Laplacian.
double laplacian_eigenvalue(std::size_t k, std::size_t sites);

/*!
 * Heat-semigroup kernel (exp(t Laplacian / 2))_{i,j} as a function of the
 * separation i - j mod M, from the circulant eigendecomposition.
 */
std::vector<double> heat_kernel(double t, std::size_t sites);

}  // namespace ssb
