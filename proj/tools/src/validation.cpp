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

#include "irsdiv/cli/validation.hpp"

#include "irsdiv/analytics.hpp"
#include "irsdiv/beamforming.hpp"
#include "irsdiv/channel.hpp"
#include "irsdiv/estimation.hpp"
#include "irsdiv/random.hpp"
#include "irsdiv/stc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace irsdiv::cli
{
    namespace
    {
        std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0)
        {
            char buf[160];
            std::snprintf(buf, sizeof buf, f, a, b, c);
            return buf;
        }

        check_result guarded(std::string name, const std::function<check_result()> &body)
        {
            try
            {
                check_result r = body();
                r.name = std::move(name);
                return r;
            }
            catch (const std::exception &e)
            {
                return {std::move(name), false, std::string("threw: ") + e.what()};
            }
        }

        double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
    }

    check_result sandwich_check(const scenario &base, int n_bar, double rho)
    {
        char name[64];
        std::snprintf(name, sizeof name, "pbf_sandwich[n_bar=%d,rho=%g]", n_bar, rho);
        try
        {
            scenario s = base;
            s.geometry.n_y = s.geometry.n_z = n_bar;
            s.params.user2_distance = s.geometry.ap_distance / rho;
            s.validate();
            const gain_bounds b = pbf_bounds(s.geometry, s.params);
            const double exact = pbf_exact(s.geometry, s.params);
            const bool ok = b.lower <= exact && exact <= b.upper;
            return {name, ok, fmt("lower=%.6e exact=%.6e upper=%.6e", b.lower, exact, b.upper)};
        }
        catch (const std::exception &e)
        {
            return {name, false, e.what()};
        }
    }

    std::vector<check_result> run_validation(const scenario &base, std::uint64_t seed)
    {
        base.validate();
        std::vector<check_result> out;

        out.push_back(guarded("philox_known_answers", [] {
            const philox_counter a = philox4x32_10({0, 0, 0, 0}, {0, 0});
            const philox_counter b = philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0});
            const bool ok = a == philox_counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8} &&
                            b == philox_counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1};
            return check_result{{}, ok, ok ? "2 vectors" : "mismatch"};
        }));

        for (int n_bar : {5, 15, 55, 105})
        {
            out.push_back(guarded("avg_gain_closed_form[n_bar=" + std::to_string(n_bar) + "]", [&] {
                scenario s = base;
                s.geometry.n_y = s.geometry.n_z = n_bar;
                const double sum = avg_reflected_gain_numeric(s.geometry, s.params);
                const double closed = avg_gain_closed_form(s.geometry, s.params);
                const double e = rel(closed, sum);
                return check_result{{}, e < 1e-3, fmt("sum=%.9e closed=%.9e rel=%.2e", sum, closed, e)};
            }));
        }

        if (base.geometry.epsilon() <= 0.05)
            for (int n_bar : {25, 50, 100, 200})
                for (double rho : {0.005, 0.01, 0.02})
                    out.push_back(sandwich_check(base, n_bar, rho));

        out.push_back(guarded("code_orthogonality", [&] {
            random_stream rng(seed, {0x200, 0, 0});
            double worst = 0.0;
            for (int k = 0; k < 10'000; ++k)
            {
                const cplx h = rng.complex_normal(1.0), g = rng.complex_normal(1.0);
                const matrix2 m = gram(code_matrix(h, g));
                const double d = std::norm(h) + std::norm(g);
                worst = std::max({worst, std::abs(m[0][0] - d) / d, std::abs(m[1][1] - d) / d, std::abs(m[0][1]) / d,
                                  std::abs(m[1][0]) / d});
            }
            return check_result{{}, worst <= 1e-15, fmt("max relative deviation %.3e", worst)};
        }));

        out.push_back(guarded("noiseless_exhaustive_decode", [&] {
            random_stream rng(seed, {0x201, 0, 0});
            int failures = 0, total = 0;
            for (int order : {2, 4, 8, 16})
            {
                const cplx h = rng.complex_normal(1.0), g = rng.complex_normal(1.0);
                for (int a = 0; a < order; ++a)
                    for (int b = 0; b < order; ++b)
                    {
                        const stc_codeword cw = encode_pair(psk_modulate(a, order), psk_modulate(b, order));
                        const received_pair y = transmit_over_channel(cw, h, g, 1.0, {});
                        const detection d = combine_and_detect(y, h, g, 1.0, 1.0, order);
                        failures += d.indices[0] != a || d.indices[1] != b;
                        ++total;
                    }
            }
            return check_result{{}, failures == 0, fmt("%.0f of %.0f pairs wrong", failures, total)};
        }));

        out.push_back(guarded("ls_noiseless_recovery", [&] {
            random_stream rng(seed, {0x202, 0, 0});
            const training_plan plan = default_training_plan();
            double worst = 0.0;
            for (int k = 0; k < 1000; ++k)
            {
                const cplx h = rng.complex_normal(1.0), g = rng.complex_normal(1.0);
                const cplx zero[2]{};
                const channel_estimate e = ls_estimate(plan, receive_pilots(plan, h, g, 1.0, zero), 1.0);
                worst = std::max({worst, std::abs(e.h1 - h), std::abs(e.g_bar_1 - g)});
            }
            return check_result{{}, worst <= 1e-12, fmt("max abs error %.3e", worst)};
        }));

        out.push_back(guarded("ser_quadrature_convergence", [&] {
            const link_budget b = make_link_budget(base);
            const int order = base.params.psk_order;
            const double adaptive = ser_mpsk(b, order);
            const double reference = ser_mpsk_fixed(b, order, 8192);
            const double e = rel(adaptive, reference);
            return check_result{{}, e < 1e-9, fmt("ser=%.12e rel=%.2e", adaptive, e)};
        }));

        out.push_back(guarded("ser_bound_dominates", [&] {
            const int order = base.params.psk_order;
            bool ok = true;
            double worst = 1e300;
            for (double dbm = 0.0; dbm <= 40.0; dbm += 5.0)
            {
                scenario s = base;
                s.params.tx_power_user1 = std::pow(10.0, dbm / 10.0);
                const link_budget b = make_link_budget(s);
                const double ser = ser_mpsk(b, order);
                const double bound = ser_upper_bound(b, order);
                ok = ok && bound >= ser;
                worst = std::min(worst, bound / ser);
            }
            return check_result{{}, ok, fmt("min bound/ser %.6f", worst)};
        }));

        out.push_back(guarded("beamforming_phase_invariance", [&] {
            scenario s = base;
            s.geometry.n_y = s.geometry.n_z = std::min(base.geometry.n_y, 31);
            const cvec gbar = cascaded_vector(los_vector_g0(s.geometry, s.params), los_vector_g2(s.geometry, s.params));
            const double ref = beamforming_gain(gbar, optimal_theta(gbar, 0.0));
            random_stream rng(seed, {0x203, 0, 0});
            double worst = 0.0;
            for (int k = 0; k < 100; ++k)
                worst = std::max(worst, rel(beamforming_gain(gbar, optimal_theta(gbar, two_pi * rng.uniform())), ref));
            return check_result{{}, worst <= 1e-12, fmt("max relative change %.3e", worst)};
        }));

        out.push_back(guarded("invariant_rejects_zero_spacing", [&] {
            scenario s = base;
            s.geometry.spacing = 0.0;
            try
            {
                s.validate();
            }
            catch (const invariant_error &)
            {
                return check_result{{}, true, "rejected"};
            }
            return check_result{{}, false, "accepted spacing = 0"};
        }));

        return out;
    }

    bool all_passed(const std::vector<check_result> &results) noexcept
    {
        return std::all_of(results.begin(), results.end(), [](const check_result &r) { return r.passed; });
    }
}
