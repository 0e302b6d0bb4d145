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

#ifndef IRSDIV_ANALYTICS_HPP
#define IRSDIV_ANALYTICS_HPP

#include "irsdiv/channel.hpp"
#include "irsdiv/scenario.hpp"

namespace irsdiv
{
    // Average gains of user 1's two branches and the transmit SNR P1 / sigma^2, all linear.
    struct link_budget
    {
        double rho2_h1 = 0.0;
        double rho2_g1 = 0.0;
        double tx_snr = 0.0;

        void validate() const;
    };

    // Budget for a scenario, with the reflected gain from the closed form.
    link_budget make_link_budget(const scenario &s);

    // ---- Transmit diversity ------------------------------------------------------------------

    // Closed-form average reflected gain (small-angle regime, spacing << AP distance):
    //   (2 xi beta / (pi d^alpha)) atan(Ny Nz e^2 / (2 sqrt(4 + (Ny^2 + Nz^2) e^2)))
    double avg_gain_closed_form(const irs_geometry &geom, const system_params &params);

    // Infinite-array limit xi beta / d^alpha.
    double avg_gain_limit(const system_params &params, double xi);

    // gamma_bar = P1_bar (rho2_h1 + rho2_g1)
    double avg_snr(const link_budget &b);

    // Moment generating function of the post-combining SNR, defined here for x <= 0.
    // Throws std::domain_error for x > 0.
    double mgf(const link_budget &b, double x);

    struct ser_options
    {
        int nodes = 256;         // initial Gauss-Legendre order
        int max_nodes = 16384;   // give up beyond this order
        double rel_tol = 1e-10;  // agreement required between n and 2n nodes
    };

    // Average M-PSK symbol error rate from the MGF integral. The rule is doubled until two successive
    // orders agree to rel_tol; numerical_error if max_nodes is reached first.
    double ser_mpsk(const link_budget &b, int order, const ser_options &opt = {});

    // Same integral with a fixed node count per panel, without the convergence check.
    double ser_mpsk_fixed(const link_budget &b, int order, int nodes);

    // C = integral of sin^4 over [0, (M-1) pi / M].
    double sin4_integral(int order);

    // C / (pi sin^4(pi/M) rho2_h1 rho2_g1 P1_bar^2)
    double ser_upper_bound(const link_budget &b, int order);

    // ---- Passive beamforming ----------------------------------------------------------------

    struct gain_bounds
    {
        double lower = 0.0;
        double upper = 0.0;
    };

    // G(R) for distance ratio rho.
    double bound_kernel(double radius, double rho);

    // F(R) = 4 pi G(R) / (sqrt(rho) sqrt(1 - rho^2)), the radial integral before normalisation.
    double disk_integral(double radius, double rho);

    // Inscribed / circumscribed disk bounds on the maximum beamforming gain. Requires the
    // small-angle regime epsilon <= 0.05 and rho <= 0.05, else std::domain_error.
    gain_bounds pbf_bounds(const irs_geometry &geom, const system_params &params);

    // (sum over elements of sqrt(2 a b))^2, by exact summation.
    double pbf_exact(const irs_geometry &geom, const system_params &params,
                     channel_model model = channel_model::element_wise);

    // Infinite-array limit (2 rho / (1 - rho^2)) xi^2 (1 - 1 / sqrt(1 + sqrt(1/rho^2 - 1)))^2.
    double pbf_asymptotic(double rho, double xi);

    // Far-user approximation of the limit: 2 rho xi^2.
    double pbf_asymptotic_approx(double rho, double xi);

    struct direct_gain
    {
        double exact = 0.0;  // A' / (4 pi (r~ - r)^2)
        double approx = 0.0; // A' / (4 pi r~^2)
    };

    // LoS gain of the AP -> user 2 link. Throws invariant_error unless r~ > r.
    direct_gain direct_los_gain(const system_params &params, double ap_distance);
}

#endif
