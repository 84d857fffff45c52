//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rng.hpp
//! Counter-based Gaussian noise streams.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace ssb
{
//---------------------------------------------------------------------------//
//! Philox4x32 with 10 rounds (Salmon et al., SC'11).
std::array<std::uint32_t, 4>
philox4x32(std::array<std::uint32_t, 4> counter,
           std::array<std::uint32_t, 2> key);

//! SplitMix64 finalizer, used to derive Philox keys from user seeds.
std::uint64_t splitmix64(std::uint64_t x);

//---------------------------------------------------------------------------//
/*!
 * Reproducible stream of standard normal variates.
 *
 * Variate number `counter` of replicate `replicate_id` under `seed` is a pure
 * function of the triple: block counter/4 of Philox keyed by the seed and
 * replicate gives four 32-bit uniforms, which Box-Muller maps to four
 * normals. Streams can therefore be created in any order on any worker.
 */
class NoiseStream
{
  public:
    NoiseStream(std::uint64_t seed, std::uint64_t replicate_id,
                std::uint64_t counter = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t replicate_id() const { return replicate_; }
    //! Index of the next variate to be drawn.
    std::uint64_t counter() const { return counter_; }

    double normal();
    //! Fill with scale * N(0,1) variates.
    void fill_normal(std::span<double> out, double scale = 1.0);
    //! Uniform on [0, 1), consuming one variate slot.
    double uniform();

  private:
    std::uint64_t seed_;
    std::uint64_t replicate_;
    std::uint64_t counter_;
    std::array<std::uint32_t, 2> key_;

    std::array<double, 4> block_normals(std::uint64_t block) const;
    std::array<std::uint32_t, 4> raw_block(std::uint64_t block) const;
};

}  // namespace ssb
