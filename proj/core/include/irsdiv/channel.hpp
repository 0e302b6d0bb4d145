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

#ifndef IRSDIV_CHANNEL_HPP
#define IRSDIV_CHANNEL_HPP

#include "irsdiv/random.hpp"
#include "irsdiv/scenario.hpp"
#include "irsdiv/types.hpp"

#include <span>
#include <string_view>

namespace irsdiv
{
    // Per-element power-gain model.
    //  element_wise: per-element distance and projected aperture, a = A r / (4 pi r_n^3)
    //  free_space:   per-element distance only,                   a = A / (4 pi r_n^2)
    //  far_field:    uniform plane wave,                          a = A / (4 pi r^2)
    enum class channel_model
    {
        element_wise,
        free_space,
        far_field
    };

    std::string_view to_string(channel_model m) noexcept;
    channel_model parse_channel_model(std::string_view name);

    // Distance from the AP to the centre of element idx.
    double element_distance(const irs_geometry &geom, element_offset idx);

    // Distance from user 2 (on the x-axis at params.user2_distance) to the centre of element idx.
    double user2_element_distance(const irs_geometry &geom, const system_params &params, element_offset idx);

    // AP -> element power gain.
    double ap_element_gain(const irs_geometry &geom, element_offset idx,
                           channel_model model = channel_model::element_wise);

    // User 2 -> element power gain (without the half-space reflection factor).
    double user2_element_gain(const irs_geometry &geom, const system_params &params, element_offset idx,
                              channel_model model = channel_model::element_wise);

    // Deterministic LoS AP -> IRS channel: sqrt(a) exp(-j 2 pi r_n / lambda).
    cvec los_vector_g0(const irs_geometry &geom, const system_params &params);

    // Deterministic LoS IRS -> user 2 channel: sqrt(2 b) exp(-j 2 pi r~_n / lambda).
    cvec los_vector_g2(const irs_geometry &geom, const system_params &params);

    // One coherence-block draw of user 1's channels.
    struct channel_realization
    {
        cplx h1{};      // direct AP -> user 1
        cvec g0;        // AP -> IRS (LoS)
        cvec g1;        // IRS -> user 1 (Rayleigh)
        cplx g_bar_1{}; // g0^T diag(theta_bar) g1
    };

    // g0^T diag(theta) g1. All three spans must have equal length.
    cplx cascaded_gain(std::span<const cplx> g0, std::span<const cplx> theta, std::span<const cplx> g1);

    // Draws h1 ~ CN(0, beta / d_h1^alpha) and g1 ~ CN(0, 2 beta / d_g1^alpha I) and forms g_bar_1 with
    // the supplied beamforming vector. g0 and theta_bar must have geom.size() entries.
    channel_realization sample_user1_channels(const irs_geometry &geom, const system_params &params,
                                              std::span<const cplx> g0, std::span<const cplx> theta_bar,
                                              random_stream &rng);

    // Same as above with g0 from los_vector_g0 and an all-ones beamforming vector.
    channel_realization sample_user1_channels(const irs_geometry &geom, const system_params &params,
                                              random_stream &rng);

    // Sum over elements of ap_element_gain.
    double sum_ap_gain(const irs_geometry &geom, channel_model model = channel_model::element_wise);

    // Mean gain of g_bar_1 by exact summation over the array.
    double avg_reflected_gain_numeric(const irs_geometry &geom, const system_params &params,
                                      channel_model model = channel_model::element_wise);

    // The array split into two subsurfaces along the y-axis. Elements with y < 0 form the first half;
    // for an odd n_y the centre column's z < 0 part joins the first half and the rest the second.
    bool in_first_half(const irs_geometry &geom, std::size_t flat);

    struct half_surface_gains
    {
        double first = 0.0;
        double second = 0.0;
    };

    // Mean reflected gains of the two subsurfaces (they add up to avg_reflected_gain_numeric).
    half_surface_gains half_surface_reflected_gains(const irs_geometry &geom, const system_params &params);
}

#endif
