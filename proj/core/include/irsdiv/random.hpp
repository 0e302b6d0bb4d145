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

#ifndef IRSDIV_RANDOM_HPP
#define IRSDIV_RANDOM_HPP

#include "irsdiv/types.hpp"

#include <array>
#include <cstdint>
#include <limits>

namespace irsdiv
{
    // Philox4x32-10 counter-based generator (Salmon et al., SC'11). One call maps a 128-bit counter
    // and a 64-bit key to 128 random bits; there is no hidden state besides the counter.
    using philox_counter = std::array<std::uint32_t, 4>;
    using philox_key = std::array<std::uint32_t, 2>;

    philox_counter philox4x32_10(philox_counter ctr, philox_key key) noexcept;

    // Identifies an independent random stream below a master seed. Streams with different ids never
    // share a counter value, so their outputs are independent.
    struct stream_id
    {
        std::uint32_t purpose = 0; // what the stream is used for (scheme, experiment, test)
        std::uint32_t point = 0;   // sweep point index
        std::uint32_t batch = 0;   // trial batch index within a point
    };

    // Sequential view over one Philox stream. Satisfies UniformRandomBitGenerator, and adds the
    // distributions the simulator needs with a fixed, platform-independent transformation.
    class random_stream
    {
    public:
        using result_type = std::uint32_t;

        random_stream(std::uint64_t seed, stream_id id) noexcept;

        static constexpr result_type min() noexcept { return 0; }
        static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
        result_type operator()() noexcept;

        // Uniform on the open interval (0, 1) with 53 random bits.
        double uniform() noexcept;

        // Uniform integer in [0, n). Multiply-shift on one 32-bit draw; bias is below n * 2^-32.
        std::uint32_t uniform_index(std::uint32_t n) noexcept;

        // Circularly symmetric complex Gaussian CN(0, variance) via Box-Muller.
        cplx complex_normal(double variance) noexcept;

        // Standard real normal (uses one Box-Muller pair, discards the quadrature component).
        double normal() noexcept;

        // Exponential with the given mean.
        double exponential(double mean) noexcept;

    private:
        void refill() noexcept;

        philox_key key_{};
        philox_counter ctr_{};
        philox_counter block_{};
        unsigned used_ = 4;
    };
}

#endif
