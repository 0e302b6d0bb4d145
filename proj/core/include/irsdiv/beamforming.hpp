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

#ifndef IRSDIV_BEAMFORMING_HPP
#define IRSDIV_BEAMFORMING_HPP

#include "irsdiv/scenario.hpp"
#include "irsdiv/types.hpp"

#include <span>

namespace irsdiv
{
    // IRS reflection theta = e^{j common_phase} * per_element, with |per_element[n]| = 1.
    struct reflection_vector
    {
        double common_phase = 0.0;
        cvec per_element;

        cvec full() const;
        // Largest deviation of |per_element[n]| from 1.
        double max_modulus_error() const noexcept;
    };

    // Cascaded AP -> IRS -> user 2 channel g_bar_2, defined through g_bar_2^H = g0^T diag(g2).
    cvec cascaded_vector(std::span<const cplx> g0, std::span<const cplx> g2);

    // g_bar_2^H theta
    cplx effective_gain(std::span<const cplx> g_bar_2, std::span<const cplx> theta);

    // theta_bar* = e^{j arg(g_bar_2)}. Zero entries get phase 0; an all-zero vector is rejected with
    // std::domain_error since no phase is defined.
    reflection_vector optimal_theta(std::span<const cplx> g_bar_2, double common_phase = 0.0);

    // |g_bar_2^H e^{j phi} theta_bar|^2, which does not depend on phi.
    double beamforming_gain(std::span<const cplx> g_bar_2, const reflection_vector &refl);

    // gamma~ = P2 |h2 e^{-j phi} + g2_star|^2 / sigma^2
    double user2_received_snr(cplx h2, cplx g2_star, double common_phase, double p2, double noise_power);

    // Subsurface-constant design: elements are grouped into group x group tiles (edge tiles may be
    // smaller) and every element in a tile takes the optimal phase of the tile's reference element,
    // the one at local index (group / 2, group / 2) clipped to the tile.
    reflection_vector grouped_theta(const irs_geometry &geom, std::span<const cplx> g_bar_2, int group);

    // Number of tiles grouped_theta produces.
    std::size_t group_count(const irs_geometry &geom, int group);
}

#endif
