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

#include "irsdiv/channel.hpp"

#include <doctest.h>

#include <cmath>

using namespace irsdiv;

// Reference values from tests/oracles/oracles.py.
TEST_SUITE("channel")
{
    TEST_CASE("element distance and gains at the centre element")
    {
        const scenario s = default_scenario(5);
        const auto &g = s.geometry;
        CHECK(element_distance(g, {0, 0}) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(element_distance(g, {1, 2}) == doctest::Approx(0.5 * std::sqrt(1 + 5 * 0.0025)).epsilon(1e-15));
        const double centre = g.element_area / (4.0 * pi * 0.25);
        for (auto m : {channel_model::element_wise, channel_model::free_space, channel_model::far_field})
            CHECK(ap_element_gain(g, {0, 0}, m) == doctest::Approx(centre).epsilon(1e-14));
        // Away from boresight: element-wise < free-space < far-field.
        const double ew = ap_element_gain(g, {2, 2});
        const double fs = ap_element_gain(g, {2, 2}, channel_model::free_space);
        const double ff = ap_element_gain(g, {2, 2}, channel_model::far_field);
        CHECK(ew < fs);
        CHECK(fs < ff);
        CHECK(ew == doctest::Approx(centre / std::pow(1 + 8 * 0.0025, 1.5)).epsilon(1e-14));
        CHECK_THROWS_AS(ap_element_gain(g, {0.5, 0}), std::out_of_range);
        CHECK(user2_element_distance(g, s.params, {0, 0}) == doctest::Approx(50.0));
    }

    TEST_CASE("average reflected gain by summation matches the reference")
    {
        const scenario s5 = default_scenario(5);
        CHECK(avg_reflected_gain_numeric(s5.geometry, s5.params) == doctest::Approx(1.914150290098536e-11).epsilon(1e-12));
        const scenario s = default_scenario(105);
        CHECK(avg_reflected_gain_numeric(s.geometry, s.params) == doctest::Approx(1.320343824987225e-09).epsilon(1e-12));
        CHECK(avg_reflected_gain_numeric(s.geometry, s.params, channel_model::free_space) ==
              doctest::Approx(2.209247495196951e-09).epsilon(1e-12));
        CHECK(avg_reflected_gain_numeric(s.geometry, s.params, channel_model::far_field) ==
              doctest::Approx(8.567789294863999e-09).epsilon(1e-12));
    }

    TEST_CASE("subsurfaces partition the array")
    {
        for (int n : {4, 5, 105})
        {
            const scenario s = default_scenario(n);
            const auto halves = half_surface_reflected_gains(s.geometry, s.params);
            CHECK(halves.first + halves.second ==
                  doctest::Approx(avg_reflected_gain_numeric(s.geometry, s.params)).epsilon(1e-12));
            std::size_t first = 0;
            for (std::size_t k = 0; k < s.geometry.size(); ++k)
                first += in_first_half(s.geometry, k);
            const std::size_t total = s.geometry.size();
            CHECK(first == total / 2);
            // Point symmetry of the array: the halves carry equal gain up to the centre element.
            const double centre = n % 2 ? s.params.reflected_element_variance() * ap_element_gain(s.geometry, {0, 0}) : 0.0;
            CHECK(std::abs(halves.second - halves.first - centre) < 1e-12 * halves.first);
        }
    }

    TEST_CASE("LoS vectors have the element gains as squared moduli")
    {
        const scenario s = default_scenario(7);
        const cvec g0 = los_vector_g0(s.geometry, s.params);
        const cvec g2 = los_vector_g2(s.geometry, s.params);
        REQUIRE(g0.size() == 49u);
        for (std::size_t n = 0; n < g0.size(); ++n)
        {
            const auto idx = offset_of(s.geometry, n);
            CHECK(std::norm(g0[n]) == doctest::Approx(ap_element_gain(s.geometry, idx)).epsilon(1e-13));
            CHECK(std::norm(g2[n]) == doctest::Approx(2.0 * user2_element_gain(s.geometry, s.params, idx)).epsilon(1e-13));
            const double cycles = element_distance(s.geometry, idx) / s.params.wavelength;
            const double expected = -two_pi * (cycles - std::floor(cycles));
            CHECK(std::abs(std::arg(g0[n] * std::polar(1.0, -expected))) < 1e-9);
        }
    }

    TEST_CASE("cascaded gain and sampled channels")
    {
        const scenario s = default_scenario(5);
        const cvec g0 = los_vector_g0(s.geometry, s.params);
        cvec theta(g0.size(), cplx{1.0, 0.0});
        random_stream rng(1, {50, 0, 0});
        double acc = 0.0;
        const int draws = 40'000;
        for (int k = 0; k < draws; ++k)
        {
            const channel_realization ch = sample_user1_channels(s.geometry, s.params, g0, theta, rng);
            CHECK(std::abs(ch.g_bar_1 - cascaded_gain(ch.g0, theta, ch.g1)) <= 1e-12 * std::abs(ch.g_bar_1) + 1e-300);
            acc += std::norm(ch.g_bar_1);
        }
        // E|g_bar_1|^2 = 2 beta / d^alpha * sum a, standard error mean / sqrt(draws).
        const double expected = avg_reflected_gain_numeric(s.geometry, s.params);
        CHECK(std::abs(acc / draws - expected) < 4.0 * expected / std::sqrt(draws));

        const cvec short_vec(3);
        CHECK_THROWS_AS(cascaded_gain(g0, short_vec, g0), std::invalid_argument);
    }

    TEST_CASE("channel model names")
    {
        CHECK(parse_channel_model("free-space") == channel_model::free_space);
        CHECK(parse_channel_model("far_field") == channel_model::far_field);
        CHECK(to_string(channel_model::element_wise) == "element_wise");
        CHECK_THROWS_AS(parse_channel_model("ray-tracing"), std::invalid_argument);
    }
}
