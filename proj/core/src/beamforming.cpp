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

#include "irsdiv/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irsdiv
{
    cvec reflection_vector::full() const
    {
        const cplx common = std::polar(1.0, common_phase);
        cvec theta(per_element.size());
        std::transform(per_element.begin(), per_element.end(), theta.begin(), [&](cplx t) { return common * t; });
        return theta;
    }

    double reflection_vector::max_modulus_error() const noexcept
    {
        double worst = 0.0;
        for (cplx t : per_element)
            worst = std::max(worst, std::abs(std::abs(t) - 1.0));
        return worst;
    }

    cvec cascaded_vector(std::span<const cplx> g0, std::span<const cplx> g2)
    {
        if (g0.size() != g2.size())
            throw std::invalid_argument("cascaded_vector: g0 and g2 lengths differ");
        cvec out(g0.size());
        for (std::size_t n = 0; n < out.size(); ++n)
            out[n] = std::conj(g0[n] * g2[n]);
        return out;
    }

    cplx effective_gain(std::span<const cplx> g_bar_2, std::span<const cplx> theta)
    {
        if (g_bar_2.size() != theta.size())
            throw std::invalid_argument("effective_gain: length mismatch");
        cplx acc{};
        for (std::size_t n = 0; n < theta.size(); ++n)
            acc += std::conj(g_bar_2[n]) * theta[n];
        return acc;
    }

    reflection_vector optimal_theta(std::span<const cplx> g_bar_2, double common_phase)
    {
        if (std::all_of(g_bar_2.begin(), g_bar_2.end(), [](cplx g) { return g == cplx{}; }))
            throw std::domain_error("optimal_theta: phase of an all-zero channel is undefined");
        reflection_vector r;
        r.common_phase = common_phase;
        r.per_element.resize(g_bar_2.size());
        for (std::size_t n = 0; n < g_bar_2.size(); ++n)
            r.per_element[n] = g_bar_2[n] == cplx{} ? cplx{1.0, 0.0} : g_bar_2[n] / std::abs(g_bar_2[n]);
        return r;
    }

    double beamforming_gain(std::span<const cplx> g_bar_2, const reflection_vector &refl)
    {
        return std::norm(effective_gain(g_bar_2, refl.full()));
    }

    double user2_received_snr(cplx h2, cplx g2_star, double common_phase, double p2, double noise_power)
    {
        return p2 * std::norm(h2 * std::polar(1.0, -common_phase) + g2_star) / noise_power;
    }

    std::size_t group_count(const irs_geometry &geom, int group)
    {
        if (group < 1)
            throw std::invalid_argument("group size must be >= 1");
        const auto tiles = [group](int n) { return static_cast<std::size_t>((n + group - 1) / group); };
        return tiles(geom.n_y) * tiles(geom.n_z);
    }

    reflection_vector grouped_theta(const irs_geometry &geom, std::span<const cplx> g_bar_2, int group)
    {
        if (group < 1)
            throw std::invalid_argument("group size must be >= 1");
        if (g_bar_2.size() != geom.size())
            throw std::invalid_argument("grouped_theta: channel length must equal n_y * n_z");
        const reflection_vector best = optimal_theta(g_bar_2);

        reflection_vector r;
        r.per_element.resize(geom.size());
        for (int ty = 0; ty < geom.n_y; ty += group)
        {
            const int ry = std::min(ty + group / 2, geom.n_y - 1);
            for (int tz = 0; tz < geom.n_z; tz += group)
            {
                const int rz = std::min(tz + group / 2, geom.n_z - 1);
                const cplx phase = best.per_element[static_cast<std::size_t>(ry) * geom.n_z + rz];
                for (int iy = ty; iy < std::min(ty + group, geom.n_y); ++iy)
                    for (int iz = tz; iz < std::min(tz + group, geom.n_z); ++iz)
                        r.per_element[static_cast<std::size_t>(iy) * geom.n_z + iz] = phase;
            }
        }
        return r;
    }
}
