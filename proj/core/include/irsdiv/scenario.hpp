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

#ifndef IRSDIV_SCENARIO_HPP
#define IRSDIV_SCENARIO_HPP

#include "irsdiv/types.hpp"

#include <cstddef>

namespace irsdiv
{
    // Uniform planar array on the y-z plane, centred at the origin. The AP sits on the x-axis at
    // distance ap_distance (boresight). Elements are stored y-major: flat = iy * n_z + iz.
    struct irs_geometry
    {
        int n_y = 1;
        int n_z = 1;
        double spacing = 0.025;        // element pitch [m]
        double element_area = 6.25e-4; // physical element area [m^2]
        double ap_distance = 0.5;      // AP to array centre [m]

        std::size_t size() const noexcept { return static_cast<std::size_t>(n_y) * static_cast<std::size_t>(n_z); }
        double epsilon() const noexcept { return spacing / ap_distance; }
        double occupation_ratio() const noexcept { return element_area / (spacing * spacing); }

        void validate() const;

        static irs_geometry square(int n_bar, double spacing, double element_area, double ap_distance);
    };

    // Centred element coordinates in units of the pitch. For an odd count the offsets are
    // integers in [-(N-1)/2, (N-1)/2]; for an even count they are half-integers.
    struct element_offset
    {
        double y = 0.0;
        double z = 0.0;

        double radius_squared() const noexcept { return y * y + z * z; }
    };

    element_offset offset_of(const irs_geometry &geom, std::size_t flat);

    // Throws std::out_of_range if the offset is not a grid point of geom.
    void check_on_grid(const irs_geometry &geom, element_offset idx);

    struct system_params
    {
        double wavelength = 0.05;            // [m]
        double tx_power_user1 = 100.0;       // [mW]
        double tx_power_user2 = 100.0;       // [mW]
        double noise_power = 3.16227766e-9;  // [mW]
        double ref_path_gain = 1e-3;         // beta, linear gain at 1 m
        double path_loss_exp = 3.0;          // alpha
        double d_h1 = 80.0;                  // AP -> user 1 [m]
        double d_g1 = 80.0;                  // IRS -> user 1 [m]
        double user2_distance = 50.0;        // user 2 on the x-axis [m]
        double user2_antenna_area = 6.25e-4; // effective aperture of user 2's antenna [m^2]
        int psk_order = 8;

        double tx_snr_user1() const noexcept { return tx_power_user1 / noise_power; }
        double tx_snr_user2() const noexcept { return tx_power_user2 / noise_power; }

        // Mean power gain of the direct Rayleigh link h1.
        double direct_mean_gain() const noexcept;
        // Per-element variance of the IRS -> user 1 Rayleigh channel g1 (half-space factor included).
        double reflected_element_variance() const noexcept;

        void validate() const;
    };

    struct scenario
    {
        irs_geometry geometry;
        system_params params;

        // rho = r / r_tilde
        double distance_ratio() const noexcept { return geometry.ap_distance / params.user2_distance; }

        void validate() const;
    };

    // lambda = 0.05 m, pitch lambda/2, full occupation, r = 0.5 m, d = 80 m, beta = -30 dB,
    // alpha = 3, noise -85 dBm, 8-PSK, P1 = P2 = 20 dBm, user 2 at 50 m, A' = A.
    scenario default_scenario(int n_bar = 105);

    bool is_power_of_two(int m) noexcept;
}

#endif
