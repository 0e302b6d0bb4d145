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

#include <cmath>
#include <stdexcept>
#include <string>

namespace irsdiv
{
    namespace
    {
        // A / (4 pi d^2 (1 + q e^2)^p), evaluated without pow() for the common exponents.
        double aperture_gain(double area, double distance, double q_eps2, channel_model model)
        {
            const double base = area / (4.0 * pi * distance * distance);
            const double s = 1.0 + q_eps2;
            switch (model)
            {
            case channel_model::element_wise:
                return base / (s * std::sqrt(s));
            case channel_model::free_space:
                return base / s;
            case channel_model::far_field:
                return base;
            }
            return base;
        }

        // exp(-j 2 pi d / lambda), reducing d / lambda modulo 1 first to keep the phase accurate.
        cplx propagation_phasor(double distance, double wavelength)
        {
            const double cycles = std::fmod(distance / wavelength, 1.0);
            return std::polar(1.0, -two_pi * cycles);
        }
    }

    std::string_view to_string(channel_model m) noexcept
    {
        switch (m)
        {
        case channel_model::element_wise:
            return "element_wise";
        case channel_model::free_space:
            return "free_space";
        case channel_model::far_field:
            return "far_field";
        }
        return "unknown";
    }

    channel_model parse_channel_model(std::string_view name)
    {
        if (name == "element_wise" || name == "element-wise")
            return channel_model::element_wise;
        if (name == "free_space" || name == "free-space")
            return channel_model::free_space;
        if (name == "far_field" || name == "far-field")
            return channel_model::far_field;
        throw std::invalid_argument("unknown channel model '" + std::string(name) + "'");
    }

    double element_distance(const irs_geometry &geom, element_offset idx)
    {
        check_on_grid(geom, idx);
        const double eps = geom.epsilon();
        return geom.ap_distance * std::sqrt(1.0 + idx.radius_squared() * eps * eps);
    }

    double user2_element_distance(const irs_geometry &geom, const system_params &params, element_offset idx)
    {
        check_on_grid(geom, idx);
        const double eps = geom.spacing / params.user2_distance;
        return params.user2_distance * std::sqrt(1.0 + idx.radius_squared() * eps * eps);
    }

    double ap_element_gain(const irs_geometry &geom, element_offset idx, channel_model model)
    {
        check_on_grid(geom, idx);
        const double eps = geom.epsilon();
        return aperture_gain(geom.element_area, geom.ap_distance, idx.radius_squared() * eps * eps, model);
    }

    double user2_element_gain(const irs_geometry &geom, const system_params &params, element_offset idx,
                              channel_model model)
    {
        check_on_grid(geom, idx);
        const double eps = geom.spacing / params.user2_distance;
        return aperture_gain(geom.element_area, params.user2_distance, idx.radius_squared() * eps * eps, model);
    }

    cvec los_vector_g0(const irs_geometry &geom, const system_params &params)
    {
        geom.validate();
        cvec g0(geom.size());
        for (std::size_t n = 0; n < g0.size(); ++n)
        {
            const auto idx = offset_of(geom, n);
            g0[n] = std::sqrt(ap_element_gain(geom, idx)) * propagation_phasor(element_distance(geom, idx), params.wavelength);
        }
        return g0;
    }

    cvec los_vector_g2(const irs_geometry &geom, const system_params &params)
    {
        geom.validate();
        cvec g2(geom.size());
        for (std::size_t n = 0; n < g2.size(); ++n)
        {
            const auto idx = offset_of(geom, n);
            g2[n] = std::sqrt(2.0 * user2_element_gain(geom, params, idx)) *
                    propagation_phasor(user2_element_distance(geom, params, idx), params.wavelength);
        }
        return g2;
    }

    cplx cascaded_gain(std::span<const cplx> g0, std::span<const cplx> theta, std::span<const cplx> g1)
    {
        if (g0.size() != theta.size() || g0.size() != g1.size())
            throw std::invalid_argument("cascaded_gain: vector lengths differ");
        cplx acc{};
        for (std::size_t n = 0; n < g0.size(); ++n)
            acc += g0[n] * theta[n] * g1[n];
        return acc;
    }

    channel_realization sample_user1_channels(const irs_geometry &geom, const system_params &params,
                                              std::span<const cplx> g0, std::span<const cplx> theta_bar,
                                              random_stream &rng)
    {
        if (g0.size() != geom.size() || theta_bar.size() != geom.size())
            throw std::invalid_argument("sample_user1_channels: g0 / theta_bar length must equal n_y * n_z");

        channel_realization ch;
        ch.h1 = rng.complex_normal(params.direct_mean_gain());
        ch.g0.assign(g0.begin(), g0.end());
        ch.g1.resize(geom.size());
        const double var = params.reflected_element_variance();
        for (auto &g : ch.g1)
            g = rng.complex_normal(var);
        ch.g_bar_1 = cascaded_gain(ch.g0, theta_bar, ch.g1);
        return ch;
    }

    channel_realization sample_user1_channels(const irs_geometry &geom, const system_params &params,
                                              random_stream &rng)
    {
        const cvec g0 = los_vector_g0(geom, params);
        const cvec ones(geom.size(), cplx{1.0, 0.0});
        return sample_user1_channels(geom, params, g0, ones, rng);
    }

    double sum_ap_gain(const irs_geometry &geom, channel_model model)
    {
        geom.validate();
        const double eps2 = geom.epsilon() * geom.epsilon();
        const double hy = 0.5 * (geom.n_y - 1);
        const double hz = 0.5 * (geom.n_z - 1);
        double total = 0.0;
        for (int iy = 0; iy < geom.n_y; ++iy)
        {
            const double y = iy - hy;
            double row = 0.0;
            for (int iz = 0; iz < geom.n_z; ++iz)
            {
                const double z = iz - hz;
                row += aperture_gain(geom.element_area, geom.ap_distance, (y * y + z * z) * eps2, model);
            }
            total += row;
        }
        return total;
    }

    double avg_reflected_gain_numeric(const irs_geometry &geom, const system_params &params, channel_model model)
    {
        return sum_ap_gain(geom, model) * params.reflected_element_variance();
    }

    bool in_first_half(const irs_geometry &geom, std::size_t flat)
    {
        const auto idx = offset_of(geom, flat);
        if (idx.y != 0.0)
            return idx.y < 0.0;
        return idx.z < 0.0;
    }

    half_surface_gains half_surface_reflected_gains(const irs_geometry &geom, const system_params &params)
    {
        geom.validate();
        const double var = params.reflected_element_variance();
        half_surface_gains out;
        for (std::size_t n = 0; n < geom.size(); ++n)
        {
            const double a = ap_element_gain(geom, offset_of(geom, n)) * var;
            (in_first_half(geom, n) ? out.first : out.second) += a;
        }
        return out;
    }
}
