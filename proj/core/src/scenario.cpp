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

#include "irsdiv/scenario.hpp"

#include "irsdiv/units.hpp"

#include <cmath>
#include <stdexcept>

namespace irsdiv
{
    namespace
    {
        void require(bool ok, const std::string &what)
        {
            if (!ok)
                throw invariant_error(what);
        }

        bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

        bool on_axis_grid(double offset, int count)
        {
            const double half = 0.5 * (count - 1);
            if (std::abs(offset) > half + 1e-9)
                return false;
            const double shifted = offset + half;
            return std::abs(shifted - std::round(shifted)) < 1e-9;
        }
    }

    void irs_geometry::validate() const
    {
        require(n_y >= 1, "n_y must be >= 1");
        require(n_z >= 1, "n_z must be >= 1");
        require(positive_finite(spacing), "spacing must be > 0");
        require(positive_finite(element_area), "element_area must be > 0");
        require(positive_finite(ap_distance), "ap_distance must be > 0");
        // Tolerate round-off when A is entered as spacing^2 in decimal.
        require(element_area <= spacing * spacing * (1.0 + 1e-12), "element_area must not exceed spacing^2 (occupation ratio <= 1)");
        require(positive_finite(epsilon()), "spacing / ap_distance must be finite and positive");
    }

    irs_geometry irs_geometry::square(int n_bar, double spacing, double element_area, double ap_distance)
    {
        irs_geometry g{n_bar, n_bar, spacing, element_area, ap_distance};
        g.validate();
        return g;
    }

    element_offset offset_of(const irs_geometry &geom, std::size_t flat)
    {
        if (flat >= geom.size())
            throw std::out_of_range("element index " + std::to_string(flat) + " outside array of " + std::to_string(geom.size()));
        const auto iy = static_cast<int>(flat / static_cast<std::size_t>(geom.n_z));
        const auto iz = static_cast<int>(flat % static_cast<std::size_t>(geom.n_z));
        return {iy - 0.5 * (geom.n_y - 1), iz - 0.5 * (geom.n_z - 1)};
    }

    void check_on_grid(const irs_geometry &geom, element_offset idx)
    {
        if (!on_axis_grid(idx.y, geom.n_y) || !on_axis_grid(idx.z, geom.n_z))
            throw std::out_of_range("offset (" + std::to_string(idx.y) + ", " + std::to_string(idx.z) + ") is not on the " +
                                    std::to_string(geom.n_y) + "x" + std::to_string(geom.n_z) + " grid");
    }

    double system_params::direct_mean_gain() const noexcept
    {
        return ref_path_gain / std::pow(d_h1, path_loss_exp);
    }

    double system_params::reflected_element_variance() const noexcept
    {
        return 2.0 * ref_path_gain / std::pow(d_g1, path_loss_exp);
    }

    void system_params::validate() const
    {
        require(positive_finite(wavelength), "wavelength must be > 0");
        require(positive_finite(tx_power_user1), "tx_power_user1 must be > 0");
        require(positive_finite(tx_power_user2), "tx_power_user2 must be > 0");
        require(positive_finite(noise_power), "noise_power must be > 0");
        require(positive_finite(ref_path_gain), "ref_path_gain must be > 0");
        require(positive_finite(path_loss_exp), "path_loss_exp must be > 0");
        require(positive_finite(d_h1), "d_h1 must be > 0");
        require(positive_finite(d_g1), "d_g1 must be > 0");
        require(positive_finite(user2_distance), "user2_distance must be > 0");
        require(positive_finite(user2_antenna_area), "user2_antenna_area must be > 0");
        require(psk_order >= 2 && is_power_of_two(psk_order), "psk_order must be a power of two >= 2");
    }

    void scenario::validate() const
    {
        geometry.validate();
        params.validate();
        const double rho = distance_ratio();
        require(rho > 0.0 && rho < 1.0, "distance ratio ap_distance / user2_distance must lie in (0, 1)");
    }

    scenario default_scenario(int n_bar)
    {
        scenario s;
        const double spacing = 0.025;
        s.geometry = irs_geometry::square(n_bar, spacing, spacing * spacing, 0.5);
        s.params.wavelength = 0.05;
        s.params.tx_power_user1 = units::dbm_to_mw(20.0);
        s.params.tx_power_user2 = units::dbm_to_mw(20.0);
        s.params.noise_power = units::dbm_to_mw(-85.0);
        s.params.ref_path_gain = units::db_to_linear(-30.0);
        s.params.path_loss_exp = 3.0;
        s.params.d_h1 = 80.0;
        s.params.d_g1 = 80.0;
        s.params.user2_distance = 50.0;
        s.params.user2_antenna_area = spacing * spacing;
        s.params.psk_order = 8;
        s.validate();
        return s;
    }

    bool is_power_of_two(int m) noexcept
    {
        return m > 0 && (m & (m - 1)) == 0;
    }
}
