//---------------------------------------------------------------------------//
// Copyright 2026 ssburgers contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rng.cpp
//---------------------------------------------------------------------------//
#include "rng.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace ssb
{
namespace
{
constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo,
                    std::uint32_t& hi)
{
    std::uint64_t const p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

// 32-bit uniform in (0, 1]
inline double open_unit(std::uint32_t x)
{
    return (static_cast<double>(x) + 1.0) * 0x1.0p-32;
}

// sin and cos on [0, pi/4] by truncated Taylor series; the remainders are
// below 1e-17 there.
inline void short_sincos(double x, double& s, double& c)
{
    double const x2 = x * x;
    s = x
        * (1.0
           + x2 * (-1.0 / 6
           + x2 * (1.0 / 120
           + x2 * (-1.0 / 5040
           + x2 * (1.0 / 362880
           + x2 * (-1.0 / 39916800
           + x2 * (1.0 / 6227020800
           + x2 * (-1.0 / 1307674368000))))))));
    c = 1.0
        + x2 * (-1.0 / 2
        + x2 * (1.0 / 24
        + x2 * (-1.0 / 720
        + x2 * (1.0 / 40320
        + x2 * (-1.0 / 3628800
        + x2 * (1.0 / 479001600
        + x2 * (-1.0 / 87178291200
        + x2 * (1.0 / 20922789888000))))))));
}

// Box-Muller pair. The angle is drawn as an octant (3 bits) plus an offset
// in (0, pi/4) (29 bits), so sin and cos only need the short range.
inline void box_muller(std::uint32_t a, std::uint32_t b, double* out)
{
    double const radius = std::sqrt(-2.0 * std::log(open_unit(a)));
    double const theta = (static_cast<double>(b >> 3) + 0.5) * 0x1.0p-29
                         * (std::numbers::pi / 4);
    double s, c;
    short_sincos(theta, s, c);
    if (b & 1u)
        std::swap(s, c);
    double x, y;
    switch ((b >> 1) & 3u)
    {
        case 0: x = c; y = s; break;
        case 1: x = -s; y = c; break;
        case 2: x = -c; y = -s; break;
        default: x = s; y = -c; break;
    }
    out[0] = radius * x;
    out[1] = radius * y;
}
}  // namespace

//---------------------------------------------------------------------------//
std::array<std::uint32_t, 4>
philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key)
{
    for (int round = 0; round < 10; ++round)
    {
        std::uint32_t lo0, hi0, lo1, hi1;
        mulhilo(philox_m0, ctr[0], lo0, hi0);
        mulhilo(philox_m1, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += philox_w0;
        key[1] += philox_w1;
    }
    return ctr;
}

std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

//---------------------------------------------------------------------------//
NoiseStream::NoiseStream(std::uint64_t seed, std::uint64_t replicate_id,
                         std::uint64_t counter)
    : seed_(seed), replicate_(replicate_id), counter_(counter)
{
    std::uint64_t const k = splitmix64(seed);
    key_ = {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
}

std::array<std::uint32_t, 4> NoiseStream::raw_block(std::uint64_t block) const
{
    return philox4x32({static_cast<std::uint32_t>(block),
                       static_cast<std::uint32_t>(block >> 32),
                       static_cast<std::uint32_t>(replicate_),
                       static_cast<std::uint32_t>(replicate_ >> 32)},
                      key_);
}

std::array<double, 4> NoiseStream::block_normals(std::uint64_t block) const
{
    auto const r = raw_block(block);
    std::array<double, 4> z;
    box_muller(r[0], r[1], z.data());
    box_muller(r[2], r[3], z.data() + 2);
    return z;
}

double NoiseStream::normal()
{
    double const z = block_normals(counter_ / 4)[counter_ % 4];
    ++counter_;
    return z;
}

void NoiseStream::fill_normal(std::span<double> out, double scale)
{
    std::size_t i = 0;
    std::size_t const size = out.size();
    while (i < size && counter_ % 4 != 0)
        out[i++] = scale * normal();
    for (; i + 3 < size; i += 4)
    {
        auto const z = block_normals(counter_ / 4);
        for (int k = 0; k < 4; ++k)
            out[i + k] = scale * z[k];
        counter_ += 4;
    }
    while (i < size)
        out[i++] = scale * normal();
}

double NoiseStream::uniform()
{
    auto const r = raw_block(counter_ / 4);
    std::uint32_t const x = r[counter_ % 4];
    ++counter_;
    return static_cast<double>(x) * 0x1.0p-32;
}

}  // namespace ssb
