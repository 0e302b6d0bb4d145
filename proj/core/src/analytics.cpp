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

#include "irsdiv/analytics.hpp"

#include "irsdiv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace irsdiv
{
    void link_budget::validate() const
    {
        if (!(rho2_h1 > 0.0) || !(rho2_g1 > 0.0) || !(tx_snr > 0.0))
            throw invariant_error("link budget entries must be strictly positive");
    }

    link_budget make_link_budget(const scenario &s)
    {
        link_budget b{s.params.direct_mean_gain(), avg_gain_closed_form(s.geometry, s.params), s.params.tx_snr_user1()};
        b.validate();
        return b;
    }

    double avg_gain_closed_form(const irs_geometry &geom, const system_params &params)
    {
        const double ny = geom.n_y;
        const double nz = geom.n_z;
        const double e2 = geom.epsilon() * geom.epsilon();
        const double arg = ny * nz * e2 / (2.0 * std::sqrt(4.0 + (ny * ny + nz * nz) * e2));
        const double scale = 2.0 * geom.occupation_ratio() * params.ref_path_gain / (pi * std::pow(params.d_g1, params.path_loss_exp));
        return scale * std::atan(arg);
    }

    double avg_gain_limit(const system_params &params, double xi)
    {
        return xi * params.ref_path_gain / std::pow(params.d_g1, params.path_loss_exp);
    }

    double avg_snr(const link_budget &b)
    {
        return b.tx_snr * (b.rho2_h1 + b.rho2_g1);
    }

    double mgf(const link_budget &b, double x)
    {
        if (x > 0.0)
            throw std::domain_error("mgf: evaluated only for x <= 0 (pole on the positive axis)");
        return 1.0 / ((1.0 - x * b.tx_snr * b.rho2_h1) * (1.0 - x * b.tx_snr * b.rho2_g1));
    }

    double ser_mpsk_fixed(const link_budget &b, int order, int nodes)
    {
        if (order < 2)
            throw std::invalid_argument("ser_mpsk: order must be >= 2");
        const double s2 = std::pow(std::sin(pi / order), 2);
        const double ah = s2 * b.tx_snr * b.rho2_h1;
        const double ag = s2 * b.tx_snr * b.rho2_g1;
        // mgf(-s2 / sin^2 phi) rewritten as sin^4 / ((sin^2 + ah)(sin^2 + ag)) to avoid 1/0 at phi = 0.
        const auto integrand = [ah, ag](double phi) {
            const double s = std::sin(phi);
            const double q = s * s;
            return q * q / ((q + ah) * (q + ag));
        };
        const double upper = (order - 1) * pi / order;
        const auto &rule = gauss_legendre_cached(nodes);
        // The integrand rises from 0 to ~1 over phi ~ sqrt(min(ah, ag)); at low SNR that edge is far
        // narrower than the interval, so geometric panels resolve it.
        double edge = std::sqrt(std::min(ah, ag));
        double lo = 0.0, acc = 0.0;
        while (edge < upper / 8.0)
        {
            acc += rule.integrate(integrand, lo, edge);
            lo = edge;
            edge *= 8.0;
        }
        acc += rule.integrate(integrand, lo, upper);
        return acc / pi;
    }

    double ser_mpsk(const link_budget &b, int order, const ser_options &opt)
    {
        b.validate();
        int n = opt.nodes;
        double prev = ser_mpsk_fixed(b, order, n);
        while (2 * n <= opt.max_nodes)
        {
            n *= 2;
            const double next = ser_mpsk_fixed(b, order, n);
            if (std::abs(next - prev) <= opt.rel_tol * std::abs(next))
                return next;
            prev = next;
        }
        std::ostringstream msg;
        msg.precision(17);
        msg << "ser_mpsk: quadrature did not converge to " << opt.rel_tol << " relative by " << n
            << " nodes (last value " << prev << ", budget rho2_h1=" << b.rho2_h1 << " rho2_g1=" << b.rho2_g1
            << " tx_snr=" << b.tx_snr << ", M=" << order << ")";
        throw numerical_error(msg.str());
    }

    double sin4_integral(int order)
    {
        const double m = order;
        return 3.0 * (m - 1.0) * pi / (8.0 * m) - std::sin(2.0 * (m - 1.0) * pi / m) / 4.0 +
               std::sin(4.0 * (m - 1.0) * pi / m) / 32.0;
    }

    double ser_upper_bound(const link_budget &b, int order)
    {
        b.validate();
        if (order < 2)
            throw std::invalid_argument("ser_upper_bound: order must be >= 2");
        const double s4 = std::pow(std::sin(pi / order), 4);
        return sin4_integral(order) / (pi * s4 * b.rho2_h1 * b.rho2_g1 * b.tx_snr * b.tx_snr);
    }

    double bound_kernel(double radius, double rho)
    {
        const double k = std::sqrt(1.0 / (rho * rho) - 1.0);
        return 1.0 / std::sqrt(1.0 + k * std::cos(std::atan(radius))) - 1.0 / std::sqrt(1.0 + k);
    }

    double disk_integral(double radius, double rho)
    {
        return 4.0 * pi * bound_kernel(radius, rho) / (std::sqrt(rho) * std::sqrt(1.0 - rho * rho));
    }

    gain_bounds pbf_bounds(const irs_geometry &geom, const system_params &params)
    {
        geom.validate();
        const double eps = geom.epsilon();
        const double rho = geom.ap_distance / params.user2_distance;
        if (eps > 0.05 || !(rho > 0.0) || rho > 0.05)
            throw std::domain_error("pbf_bounds: requires spacing/r <= 0.05 and r/r~ <= 0.05");
        const double xi = geom.occupation_ratio();
        const double scale = 2.0 * rho / (1.0 - rho * rho) * xi * xi;
        const double r_lower = 0.5 * eps * std::min(geom.n_y, geom.n_z);
        const double r_upper = 0.5 * eps * std::hypot(double(geom.n_y), double(geom.n_z));
        const double gl = bound_kernel(r_lower, rho);
        const double gu = bound_kernel(r_upper, rho);
        return {scale * gl * gl, scale * gu * gu};
    }

    double pbf_exact(const irs_geometry &geom, const system_params &params, channel_model model)
    {
        geom.validate();
        const double r = geom.ap_distance;
        const double rt = params.user2_distance;
        const double e2 = geom.epsilon() * geom.epsilon();
        const double et2 = (geom.spacing / rt) * (geom.spacing / rt);
        const double a0 = geom.element_area / (4.0 * pi * r * r);
        const double b0 = geom.element_area / (4.0 * pi * rt * rt);
        const double hy = 0.5 * (geom.n_y - 1);
        const double hz = 0.5 * (geom.n_z - 1);

        // sqrt(2 a b) = sqrt(2 a0 b0) / ((1 + q e^2)(1 + q et^2))^{p/2}, p = 3/2 (element-wise) or 1.
        double total = 0.0;
        for (int iy = 0; iy < geom.n_y; ++iy)
        {
            const double y = iy - hy;
            double row = 0.0;
            for (int iz = 0; iz < geom.n_z; ++iz)
            {
                const double z = iz - hz;
                const double q = y * y + z * z;
                const double s = (1.0 + q * e2) * (1.0 + q * et2);
                switch (model)
                {
                case channel_model::element_wise:
                {
                    const double root = std::sqrt(s);
                    row += 1.0 / (root * std::sqrt(root));
                    break;
                }
                case channel_model::free_space:
                    row += 1.0 / std::sqrt(s);
                    break;
                case channel_model::far_field:
                    row += 1.0;
                    break;
                }
            }
            total += row;
        }
        const double amp = std::sqrt(2.0 * a0 * b0) * total;
        return amp * amp;
    }

    double pbf_asymptotic(double rho, double xi)
    {
        if (!(rho > 0.0 && rho < 1.0))
            throw std::domain_error("pbf_asymptotic: rho must lie in (0, 1)");
        const double g = 1.0 - 1.0 / std::sqrt(1.0 + std::sqrt(1.0 / (rho * rho) - 1.0));
        return 2.0 * rho / (1.0 - rho * rho) * xi * xi * g * g;
    }

    double pbf_asymptotic_approx(double rho, double xi)
    {
        return 2.0 * rho * xi * xi;
    }

    direct_gain direct_los_gain(const system_params &params, double ap_distance)
    {
        const double rt = params.user2_distance;
        if (!(rt > ap_distance))
            throw invariant_error("direct_los_gain: user 2 must be farther than the AP-IRS distance");
        const double a = params.user2_antenna_area / (4.0 * pi);
        return {a / ((rt - ap_distance) * (rt - ap_distance)), a / (rt * rt)};
    }
}
