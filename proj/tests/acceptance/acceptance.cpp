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

// Acceptance suite. Each criterion prints one PASS/FAIL line; `--criterion N` runs a single one.

#include "irsdiv/analytics.hpp"
#include "irsdiv/beamforming.hpp"
#include "irsdiv/channel.hpp"
#include "irsdiv/estimation.hpp"
#include "irsdiv/simkit.hpp"
#include "irsdiv/stc.hpp"
#include "irsdiv/units.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

using namespace irsdiv;

namespace
{
    struct outcome
    {
        bool passed;
        std::string detail;
    };

    std::string fmt(const char *f, ...) __attribute__((format(printf, 1, 2)));
    std::string fmt(const char *f, ...)
    {
        char buf[1024];
        va_list args;
        va_start(args, f);
        std::vsnprintf(buf, sizeof buf, f, args);
        va_end(args);
        return buf;
    }

    double seconds_since(std::chrono::steady_clock::time_point t0)
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    // Least-squares slope of y against x.
    double ls_slope(const std::vector<double> &x, const std::vector<double> &y)
    {
        const double n = static_cast<double>(x.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            sx += x[i];
            sy += y[i];
            sxx += x[i] * x[i];
            sxy += x[i] * y[i];
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }

    scenario at_power(scenario s, double dbm)
    {
        s.params.tx_power_user1 = s.params.tx_power_user2 = units::dbm_to_mw(dbm);
        return s;
    }

    // ---- 1 ---------------------------------------------------------------------------------
    outcome closed_form_vs_sum()
    {
        constexpr double tol = 1e-3, budget_s = 1.0;
        const auto t0 = std::chrono::steady_clock::now();
        double worst = 0.0;
        std::string per;
        for (int n : {5, 15, 55, 105, 205, 305})
        {
            const scenario s = default_scenario(n);
            const double sum = avg_reflected_gain_numeric(s.geometry, s.params);
            const double e = std::abs(avg_gain_closed_form(s.geometry, s.params) - sum) / sum;
            worst = std::max(worst, e);
            per += fmt(" %d:%.1e", n, e);
        }
        const double t = seconds_since(t0);
        return {worst < tol && t < budget_s, fmt("max rel err %.2e (<%.0e),%s; %.3f s (<%.0f s)", worst, tol, per.c_str(), t, budget_s)};
    }

    // ---- 2 ---------------------------------------------------------------------------------
    outcome closed_form_limit()
    {
        constexpr double tol = 1e-3, budget_s = 1.0, expected_limit = 1.9531e-9;
        const auto t0 = std::chrono::steady_clock::now();
        const scenario s = default_scenario(5000);
        const double closed = avg_gain_closed_form(s.geometry, s.params);
        const double limit = avg_gain_limit(s.params, s.geometry.occupation_ratio());
        const double t = seconds_since(t0);
        const double gap = std::abs(closed - limit) / limit;
        const bool limit_ok = std::abs(limit - expected_limit) / expected_limit < 1e-4;
        return {gap < tol && limit_ok && t < budget_s,
                fmt("closed(5000)=%.6e limit=%.6e rel gap %.3e (<%.0e); %.3f s", closed, limit, gap, tol, t)};
    }

    // ---- 3 ---------------------------------------------------------------------------------
    outcome snr_gaps()
    {
        constexpr double want_direct = 3.94, want_reflected = 2.24, tol_db = 0.1;
        const link_budget b = make_link_budget(default_scenario(105));
        const double g1 = units::linear_to_db(1.0 + b.rho2_h1 / b.rho2_g1);
        const double g2 = units::linear_to_db(1.0 + b.rho2_g1 / b.rho2_h1);
        return {std::abs(g1 - want_direct) <= tol_db && std::abs(g2 - want_reflected) <= tol_db,
                fmt("gaps %.4f dB (want %.2f) and %.4f dB (want %.2f), tol %.1f dB", g1, want_direct, g2, want_reflected, tol_db)};
    }

    // ---- 4 ---------------------------------------------------------------------------------
    outcome ser_agreement()
    {
        constexpr double sigmas = 3.0;
        sim::sim_options opt;
        opt.target_errors = 200;
        opt.max_pairs = 20'000'000;
        bool ok = true;
        std::string d;
        std::uint32_t point = 0;
        for (double dbm : {20.0, 25.0, 30.0})
        {
            const scenario s = at_power(default_scenario(105), dbm);
            const sim::link_statistics st = sim::make_link_statistics(s);
            const auto est = sim::simulate_ser(st, scheme::proposed, opt, 1, point++);
            const double p = ser_mpsk({st.rho2_h1, st.rho2_g1, s.params.tx_snr_user1()}, 8);
            const double sd = std::sqrt(p * (1 - p) / static_cast<double>(est.symbols));
            const double z = (est.ser() - p) / sd;
            const bool enough = est.errors >= 200 || est.pairs >= opt.max_pairs;
            ok = ok && enough && std::abs(z) <= sigmas;
            d += fmt(" %gdBm: mc=%.4e (%llu err / %llu sym) eq=%.4e z=%+.2f;", dbm, est.ser(),
                     static_cast<unsigned long long>(est.errors), static_cast<unsigned long long>(est.symbols), p, z);
        }
        return {ok, fmt("|z| <= %.0f binomial sd:%s", sigmas, d.c_str())};
    }

    // ---- 5 ---------------------------------------------------------------------------------
    outcome diversity_order()
    {
        constexpr double tol = 0.15;
        sim::sim_options opt;
        opt.target_errors = 2000;
        opt.max_pairs = 20'000'000;
        const std::vector<double> powers{20.0, 22.5, 25.0, 27.5, 30.0};
        const struct
        {
            scheme kind;
            double want;
        } cases[] = {{scheme::proposed, -2.0}, {scheme::siso, -1.0}, {scheme::dumb_irs, -1.0}};
        bool ok = true;
        std::string d;
        for (const auto &c : cases)
        {
            std::vector<double> x, y;
            std::uint32_t point = 0;
            for (double dbm : powers)
            {
                const auto st = sim::make_link_statistics(at_power(default_scenario(105), dbm));
                const auto est = sim::simulate_ser(st, c.kind, opt, 2, point++);
                if (est.errors == 0)
                    return {false, fmt("%s: no errors at %g dBm", std::string(to_string(c.kind)).c_str(), dbm)};
                x.push_back(dbm / 10.0);
                y.push_back(std::log10(est.ser()));
            }
            const double slope = ls_slope(x, y);
            ok = ok && std::abs(slope - c.want) <= tol;
            d += fmt(" %s %.3f (want %.0f);", std::string(to_string(c.kind)).c_str(), slope, c.want);
        }
        return {ok, fmt("slopes over 20..30 dBm, tol %.2f:%s", tol, d.c_str())};
    }

    // ---- 6 ---------------------------------------------------------------------------------
    outcome bound_tightness()
    {
        constexpr double tol_db = 1.0, at_dbm = 30.0;
        const auto budget = [](double dbm) { return make_link_budget(at_power(default_scenario(105), dbm)); };
        const double target = ser_upper_bound(budget(at_dbm), 8);
        // Power at which the exact SER equals the bound at 30 dBm; SER decreases with power.
        double lo = at_dbm - 10.0, hi = at_dbm;
        for (int i = 0; i < 100; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            (ser_mpsk(budget(mid), 8) > target ? lo : hi) = mid;
        }
        const double offset = at_dbm - 0.5 * (lo + hi);
        return {offset >= 0.0 && offset <= tol_db,
                fmt("bound %.4e vs SER %.4e at %g dBm: equivalent power offset %.4f dB (<= %.0f dB)", target,
                    ser_mpsk(budget(at_dbm), 8), at_dbm, offset, tol_db)};
    }

    // ---- 7 ---------------------------------------------------------------------------------
    outcome sandwich()
    {
        constexpr double tol = 1e-3, want_lower = 7.79e-5, want_upper = 1.575e-4;
        bool ok = true;
        int cells = 0;
        for (int n : {25, 50, 100, 200, 400})
            for (double rho : {0.005, 0.01, 0.02})
            {
                scenario s = default_scenario(n);
                s.params.user2_distance = s.geometry.ap_distance / rho;
                const gain_bounds b = pbf_bounds(s.geometry, s.params);
                const double e = pbf_exact(s.geometry, s.params);
                ok = ok && b.lower <= e && e <= b.upper;
                ++cells;
            }
        const scenario s = default_scenario(100);
        const gain_bounds b = pbf_bounds(s.geometry, s.params);
        const double el = std::abs(b.lower - want_lower) / want_lower;
        const double eu = std::abs(b.upper - want_upper) / want_upper;
        return {ok && el < tol && eu < tol, fmt("%d grid cells %s; at (100, 0.01) lower=%.6e (rel %.1e) upper=%.6e (rel %.1e), tol %.0e",
                                               cells, ok ? "inside" : "VIOLATED", b.lower, el, b.upper, eu, tol)};
    }

    // ---- 8 ---------------------------------------------------------------------------------
    outcome asymptote()
    {
        constexpr double tol_conv = 0.05, want_ratio = 1.2331, tol_ratio = 1e-3;
        const scenario s = default_scenario(4000);
        const double rho = s.distance_ratio();
        const double xi = s.geometry.occupation_ratio();
        const double exact = pbf_exact(s.geometry, s.params);
        const double limit = pbf_asymptotic(rho, xi);
        const double gap = std::abs(exact - limit) / limit;
        const double ratio = pbf_asymptotic_approx(0.01, xi) / pbf_asymptotic(0.01, xi);
        return {gap <= tol_conv && std::abs(ratio - want_ratio) <= tol_ratio,
                fmt("exact(4000)=%.6e limit=%.6e rel gap %.4f (<= %.2f); approx/limit at rho=0.01 = %.6f (want %.4f +- %.0e)",
                    exact, limit, gap, tol_conv, ratio, want_ratio, tol_ratio)};
    }

    // ---- 9 ---------------------------------------------------------------------------------
    outcome decay_orders()
    {
        constexpr double tol = 0.05;
        const scenario base = default_scenario(100);
        const double r = base.geometry.ap_distance, xi = base.geometry.occupation_ratio();
        std::vector<double> x;
        std::vector<double> y34, y35, y36, yex;
        for (int i = 0; i < 13; ++i)
        {
            const double rt = 100.0 * std::pow(4.0, i / 12.0);
            scenario s = base;
            s.params.user2_distance = rt;
            x.push_back(std::log10(rt));
            y34.push_back(std::log10(pbf_asymptotic(r / rt, xi)));
            y35.push_back(std::log10(pbf_asymptotic_approx(r / rt, xi)));
            y36.push_back(std::log10(direct_los_gain(s.params, r).exact));
            yex.push_back(std::log10(pbf_exact(s.geometry, s.params)));
        }
        const double s34 = ls_slope(x, y34), s35 = ls_slope(x, y35), s36 = ls_slope(x, y36), sex = ls_slope(x, yex);
        const bool ok = std::abs(s34 + 1) <= tol && std::abs(s35 + 1) <= tol && std::abs(s36 + 2) <= tol && std::abs(sex + 2) <= tol;
        return {ok, fmt("log-log slopes over 100..400 m, tol %.2f: asymptote %.4f (want -1), approx %.4f (want -1), "
                        "direct %.4f (want -2), exact N=100 %.4f (want -2)",
                        tol, s34, s35, s36, sex)};
    }

    // ---- 10 --------------------------------------------------------------------------------
    outcome estimation()
    {
        constexpr double exact_tol = 1e-12, mse_tol = 0.05;
        constexpr int trials = 100'000;
        const scenario s = default_scenario(105);
        const double p1 = s.params.tx_power_user1, noise = s.params.noise_power;
        const double rh = s.params.direct_mean_gain(), rg = avg_reflected_gain_numeric(s.geometry, s.params);
        const training_plan plan = default_training_plan();
        random_stream rng(1, {0x300, 0, 0});

        double worst = 0.0;
        for (int k = 0; k < 10'000; ++k)
        {
            const cplx h = rng.complex_normal(rh), g = rng.complex_normal(rg);
            const cvec zero(plan.length());
            const auto e = ls_estimate(plan, receive_pilots(plan, h, g, p1, zero), p1);
            worst = std::max({worst, std::abs(e.h1 - h) / std::abs(h), std::abs(e.g_bar_1 - g) / std::abs(g)});
        }
        double mh = 0.0, mg = 0.0;
        for (int k = 0; k < trials; ++k)
        {
            const cplx h = rng.complex_normal(rh), g = rng.complex_normal(rg);
            const cvec w{rng.complex_normal(noise), rng.complex_normal(noise)};
            const auto e = ls_estimate(plan, receive_pilots(plan, h, g, p1, w), p1);
            mh += std::norm(e.h1 - h);
            mg += std::norm(e.g_bar_1 - g);
        }
        const double want = noise / (static_cast<double>(plan.length()) * p1);
        const double eh = std::abs(mh / trials - want) / want, eg = std::abs(mg / trials - want) / want;
        return {worst <= exact_tol && eh <= mse_tol && eg <= mse_tol,
                fmt("noiseless max rel err %.2e (<= %.0e); MSE h1 %.4e g1 %.4e vs %.4e: rel %.4f, %.4f (<= %.2f)", worst,
                    exact_tol, mh / trials, mg / trials, want, eh, eg, mse_tol)};
    }

    // ---- 11 --------------------------------------------------------------------------------
    outcome rate_vs_coherence()
    {
        constexpr double zero_until = 102, crossover_after = 200;
        const scenario s = at_power(default_scenario(100), 15.0);
        const sim::ergodic_rates r = sim::compute_ergodic_rates(s, 10, 200'000, 1);
        const auto bf = [&](double tc) { return sim::effective_rate({tc, r.beamforming_overhead}, r.passive_beamforming); };
        const auto prop = [&](double tc) { return sim::effective_rate({tc, r.diversity_overhead}, r.proposed); };
        const auto ala = [&](double tc) { return sim::effective_rate({tc, r.diversity_overhead}, r.classic_alamouti); };

        bool zero_ok = true;
        for (int tc = 1; tc <= zero_until; ++tc)
            zero_ok = zero_ok && bf(tc) == 0.0;
        bool div_ok = true;
        for (int tc = 3; tc <= 100'000; ++tc)
            div_ok = div_ok && prop(tc) > ala(tc);
        int cross_prop = 0, cross_ala = 0;
        for (int tc = 1; tc <= 100'000 && (!cross_prop || !cross_ala); ++tc)
        {
            if (!cross_prop && bf(tc) > prop(tc))
                cross_prop = tc;
            if (!cross_ala && bf(tc) > ala(tc))
                cross_ala = tc;
        }
        const bool cross_ok = cross_prop > crossover_after && cross_ala > crossover_after;
        return {zero_ok && div_ok && cross_ok,
                fmt("beamforming rate zero for T_c <= %.0f: %s; proposed > Alamouti for T_c > 2: %s; crossover vs proposed at "
                    "T_c = %d, vs Alamouti at T_c = %d (> %.0f); rates %.4f / %.4f / %.4f bit/s/Hz",
                    zero_until, zero_ok ? "yes" : "no", div_ok ? "yes" : "no", cross_prop, cross_ala, crossover_after,
                    r.proposed, r.classic_alamouti, r.passive_beamforming)};
    }

    // ---- 12 --------------------------------------------------------------------------------
    outcome invariance_and_orthogonality()
    {
        constexpr double phase_tol = 1e-12;
        constexpr int cases = 10'000;
        random_stream rng(1, {0x301, 0, 0});
        const scenario s = default_scenario(100);
        const cvec gbar = cascaded_vector(los_vector_g0(s.geometry, s.params), los_vector_g2(s.geometry, s.params));
        const double ref = beamforming_gain(gbar, optimal_theta(gbar, 0.0));
        double worst_phase = 0.0;
        for (int k = 0; k < cases; ++k)
        {
            cvec g(32);
            for (auto &v : g)
                v = rng.complex_normal(1.0);
            const double a = beamforming_gain(g, optimal_theta(g, 0.0));
            worst_phase = std::max(worst_phase, std::abs(beamforming_gain(g, optimal_theta(g, two_pi * rng.uniform())) - a) / a);
            if (k % 100 == 0)
                worst_phase = std::max(worst_phase, std::abs(beamforming_gain(gbar, optimal_theta(gbar, two_pi * rng.uniform())) - ref) / ref);
        }

        int gram_fail = 0;
        for (int k = 0; k < cases; ++k)
        {
            const cplx h = rng.complex_normal(1.0), g = rng.complex_normal(1.0);
            const matrix2 m = gram(code_matrix(h, g));
            const double e = std::norm(h) + std::norm(g);
            gram_fail += !(m[0][1] == cplx{} && m[1][0] == cplx{} && m[0][0] == cplx{e, 0.0} && m[1][1] == cplx{e, 0.0});
        }

        int decode_fail = 0, pairs = 0;
        for (int order : {2, 4, 8, 16})
        {
            const cplx h = rng.complex_normal(1.0), g = rng.complex_normal(1.0);
            for (int a = 0; a < order; ++a)
                for (int b = 0; b < order; ++b)
                {
                    const auto y = transmit_over_channel(encode_pair(psk_modulate(a, order), psk_modulate(b, order)), h, g, 1.0, {});
                    const auto d = combine_and_detect(y, h, g, 1.0, 1.0, order);
                    decode_fail += d.indices[0] != a || d.indices[1] != b;
                    ++pairs;
                }
        }
        return {worst_phase <= phase_tol && gram_fail == 0 && decode_fail == 0,
                fmt("phase invariance max rel change %.2e (<= %.0e) over %d cases; H^H H != (|h|^2+|g|^2) I in %d of %d; "
                    "exhaustive decode failures %d of %d pairs",
                    worst_phase, phase_tol, cases, gram_fail, cases, decode_fail, pairs)};
    }

    struct criterion
    {
        const char *title;
        std::function<outcome()> run;
    };

    const std::vector<criterion> &criteria()
    {
        static const std::vector<criterion> all{
            {"closed-form reflected gain vs element sum", closed_form_vs_sum},
            {"closed-form reflected gain limit at N=5000", closed_form_limit},
            {"branch SNR gaps", snr_gaps},
            {"Monte Carlo SER vs quadrature", ser_agreement},
            {"diversity order", diversity_order},
            {"SER upper bound tightness", bound_tightness},
            {"beamforming gain bounds", sandwich},
            {"beamforming asymptote and approximation ratio", asymptote},
            {"decay orders against user distance", decay_orders},
            {"LS channel estimation", estimation},
            {"effective rate against coherence interval", rate_vs_coherence},
            {"phase invariance, code orthogonality, exhaustive decoding", invariance_and_orthogonality},
        };
        return all;
    }
}

int main(int argc, char **argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i)
    {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else
        {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    const auto &all = criteria();
    if (only < 0 || only > static_cast<int>(all.size()))
    {
        std::fprintf(stderr, "criterion must be in 1..%zu\n", all.size());
        return 2;
    }

    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
    {
        if (only && static_cast<int>(i) + 1 != only)
            continue;
        outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            o = all[i].run();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::printf("%s criterion %zu (%s): %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", i + 1, all[i].title, o.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
        failed += !o.passed;
    }
    return failed ? 1 : 0;
}
