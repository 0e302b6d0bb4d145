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

#ifndef IRSDIV_QUADRATURE_HPP
#define IRSDIV_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace irsdiv
{
    // Gauss-Legendre nodes and weights on [-1, 1].
    struct quadrature_rule
    {
        std::vector<double> nodes;
        std::vector<double> weights;

        std::size_t size() const noexcept { return nodes.size(); }

        // Integral of f over [a, b].
        template <typename F>
        double integrate(F &&f, double a, double b) const
        {
            const double half = 0.5 * (b - a);
            const double mid = 0.5 * (b + a);
            double acc = 0.0;
            for (std::size_t i = 0; i < nodes.size(); ++i)
                acc += weights[i] * f(mid + half * nodes[i]);
            return half * acc;
        }
    };

    // n-point rule from Newton iteration on P_n with the asymptotic initial guess. Accurate to a few
    // ulps for n up to several thousand.
    quadrature_rule gauss_legendre(int n);

    // Cached rule for n; computed once per n and shared between threads.
    const quadrature_rule &gauss_legendre_cached(int n);
}

#endif
