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

#include "irsdiv/estimation.hpp"
#include "irsdiv/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace irsdiv;

TEST_SUITE("estimation")
{
    TEST_CASE("default plan is orthogonal")
    {
        const training_plan plan = default_training_plan();
        REQUIRE(plan.length() == 2u);
        const auto g = training_gram(plan);
        CHECK(g[0][0].real() == doctest::Approx(2.0));
        CHECK(g[1][1].real() == doctest::Approx(2.0));
        CHECK(std::abs(g[0][1]) < 1e-15);
        const auto var = ls_error_variance(plan, 10.0, 0.5);
        CHECK(var[0] == doctest::Approx(0.5 / 20.0));
        CHECK(var[1] == doctest::Approx(0.5 / 20.0));
    }

    TEST_CASE("noiseless LS recovery is exact")
    {
        random_stream rng(1, {70, 0, 0});
        for (const training_plan &plan : {default_training_plan(), training_plan{{0.0, 2.0, 4.0}}, training_plan{{0.0, pi / 2, pi, 3 * pi / 2}}})
            for (int k = 0; k < 1000; ++k)
            {
                const cplx h = rng.complex_normal(1.0), g = rng.complex_normal(2.0);
                const cvec noise(plan.length());
                const auto est = ls_estimate(plan, receive_pilots(plan, h, g, 3.0, noise), 3.0);
                REQUIRE(std::abs(est.h1 - h) < 1e-12);
                REQUIRE(std::abs(est.g_bar_1 - g) < 1e-12);
            }
    }

    TEST_CASE("singular designs are rejected")
    {
        CHECK_THROWS_AS(ls_estimate(training_plan{{0.0}}, cvec{1.0}, 1.0), singular_design_error);
        const training_plan same{{0.7, 0.7}};
        CHECK_THROWS_AS(ls_estimate(same, cvec{1.0, 1.0}, 1.0), singular_design_error);
        CHECK_THROWS_AS(ls_error_variance(same, 1.0, 1.0), singular_design_error);
    }

    TEST_CASE("noisy MSE matches the LS error variance")
    {
        const training_plan plan = default_training_plan();
        const double p1 = 4.0, noise = 0.2;
        random_stream rng(2, {70, 1, 0});
        double mse_h = 0.0, mse_g = 0.0;
        const int trials = 100'000;
        for (int k = 0; k < trials; ++k)
        {
            const cplx h = rng.complex_normal(1.0), g = rng.complex_normal(1.0);
            const cvec w{rng.complex_normal(noise), rng.complex_normal(noise)};
            const auto est = ls_estimate(plan, receive_pilots(plan, h, g, p1, w), p1);
            mse_h += std::norm(est.h1 - h);
            mse_g += std::norm(est.g_bar_1 - g);
        }
        const double expected = noise / (2.0 * p1);
        CHECK(mse_h / trials == doctest::Approx(expected).epsilon(0.02));
        CHECK(mse_g / trials == doctest::Approx(expected).epsilon(0.02));
    }
}
