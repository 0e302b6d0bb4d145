// SPDX-License-Identifier: Apache-2.0
//
// irsdiv - link-level simulation and analytics for IRS-integrated access points
// Copyright (C) 2026 The irsdiv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irsdiv/random.hpp"

#include <cmath>

namespace irsdiv
{
    namespace
    {
        constexpr std::uint32_t philox_m0 = 0xD2511F53u;
        constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
        constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
        constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

        inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo) noexcept
        {
            const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
            hi = static_cast<std::uint32_t>(p >> 32);
            lo = static_cast<std::uint32_t>(p);
        }
    }

    philox_counter philox4x32_10(philox_counter ctr, philox_key key) noexcept
    {
        for (int round = 0; round < 10; ++round)
        {
            if (round > 0)
            {
                key[0] += philox_w0;
                key[1] += philox_w1;
            }
            std::uint32_t hi0, lo0, hi1, lo1;
            mulhilo(philox_m0, ctr[0], hi0, lo0);
            mulhilo(philox_m1, ctr[2], hi1, lo1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

    random_stream::random_stream(std::uint64_t seed, stream_id id) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          ctr_{0u, id.batch, id.point, id.purpose}
    {
    }

    void random_stream::refill() noexcept
    {
        block_ = philox4x32_10(ctr_, key_);
        ++ctr_[0];
        used_ = 0;
    }

    random_stream::result_type random_stream::operator()() noexcept
    {
        if (used_ == 4)
            refill();
        return block_[used_++];
    }

    double random_stream::uniform() noexcept
    {
        const std::uint64_t hi = (*this)() >> 5; // 27 bits
        const std::uint64_t lo = (*this)() >> 6; // 26 bits
        const std::uint64_t bits = (hi << 26) | lo;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    std::uint32_t random_stream::uniform_index(std::uint32_t n) noexcept
    {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>((*this)()) * n) >> 32);
    }

    cplx random_stream::complex_normal(double variance) noexcept
    {
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-variance * std::log(u1));
        const double angle = two_pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    double random_stream::normal() noexcept
    {
        return std::sqrt(2.0) * complex_normal(1.0).real();
    }

    double random_stream::exponential(double mean) noexcept
    {
        return -mean * std::log(uniform());
    }
}
