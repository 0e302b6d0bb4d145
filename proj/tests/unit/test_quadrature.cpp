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

#include "irsdiv/quadrature.hpp"
#include "irsdiv/types.hpp"

#include <doctest.h>

#include <cmath>

using namespace irsdiv;

TEST_SUITE("quadrature")
{
    TEST_CASE("nodes and weights")
    {
        const auto r = gauss_legendre(5);
        REQUIRE(r.size() == 5u);
        double wsum = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i)
        {
            wsum += r.weights[i];
            CHECK(std::abs(r.nodes[i] + r.nodes[r.size() - 1 - i]) < 1e-15);
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
        // Known 5-point abscissa and weight.
        CHECK(std::abs(r.nodes[2]) < 1e-16);
        CHECK(r.weights[2] == doctest::Approx(128.0 / 225.0).epsilon(1e-15));
        CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
    }

    TEST_CASE("exact for polynomials up to degree 2n - 1")
    {
        for (int n : {1, 2, 7, 20, 64})
        {
            const auto r = gauss_legendre(n);
            const int deg = 2 * n - 1;
            const double got = r.integrate([deg](double x) { return std::pow(x, deg) + std::pow(x, deg - 1); }, 0.0, 2.0);
            const double want = std::pow(2.0, deg + 1) / (deg + 1) + std::pow(2.0, deg) / deg;
            CHECK(got == doctest::Approx(want).epsilon(1e-12));
        }
    }

    TEST_CASE("smooth integrand converges")
    {
        const auto r = gauss_legendre(32);
        CHECK(r.integrate([](double x) { return std::exp(x); }, -1.0, 3.0) == doctest::Approx(std::exp(3.0) - std::exp(-1.0)).epsilon(1e-14));
        CHECK(r.integrate([](double x) { return std::sin(x) * std::sin(x); }, 0.0, pi) == doctest::Approx(pi / 2).epsilon(1e-14));
    }

    TEST_CASE("cached rules are identical")
    {
        const auto &a = gauss_legendre_cached(128);
        const auto &b = gauss_legendre_cached(128);
        CHECK(&a == &b);
        CHECK(a.nodes == gauss_legendre(128).nodes);
    }
}
