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

#include "irsdiv/simkit.hpp"

#include "irsdiv/analytics.hpp"
#include "irsdiv/beamforming.hpp"
#include "irsdiv/estimation.hpp"
#include "irsdiv/units.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace irsdiv::sim
{
    namespace
    {
        unsigned resolve_threads(unsigned requested)
        {
            if (requested > 0)
                return requested;
            return std::max(1u, std::thread::hardware_concurrency());
        }

        // Calls f(i) for every i in [0, count) on up to `threads` worker threads.
        template <typename F>
        void parallel_for(std::size_t count, unsigned threads, F &&f)
        {
            const std::size_t workers = std::min<std::size_t>(threads, count);
            if (workers <= 1)
            {
                for (std::size_t i = 0; i < count; ++i)
                    f(i);
                return;
            }
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < count; i += workers)
                        f(i);
                });
        }

        constexpr std::uint32_t rate_purpose = 0x100;
        constexpr std::uint32_t rate_chunks = 64;

        std::uint32_t ser_purpose(scheme kind, csi_mode csi)
        {
            return 1u + static_cast<std::uint32_t>(kind) + (csi == csi_mode::estimated ? 16u : 0u);
        }

        cvec constellation(int order)
        {
            cvec c(order);
            for (int k = 0; k < order; ++k)
                c[k] = psk_modulate(k, order);
            return c;
        }

        int to_element_count(double value)
        {
            if (!(value >= 1.0) || value != std::floor(value) || value > 1e6)
                throw std::invalid_argument("element count sweep values must be positive integers");
            return static_cast<int>(value);
        }

        scenario with_n_bar(const scenario &base, int n_bar)
        {
            scenario s = base;
            s.geometry.n_y = n_bar;
            s.geometry.n_z = n_bar;
            s.validate();
            return s;
        }

        void require_sweep(const experiment_config &cfg)
        {
            if (cfg.sweep.empty())
                throw std::invalid_argument("experiment needs at least one sweep value");
        }

        void require_trials(const experiment_config &cfg)
        {
            if (cfg.sim.max_pairs == 0 || cfg.sim.batch_pairs == 0)
                throw std::invalid_argument("SER experiments need max_pairs > 0 and batch_pairs > 0");
        }

        void add_ser_points(experiment_result &out, double sweep, std::uint32_t point, const scenario &s,
                            const experiment_config &cfg)
        {
            const link_statistics stats = make_link_statistics(s);
            const auto schemes = cfg.schemes.empty() ? all_schemes() : cfg.schemes;
            for (scheme kind : schemes)
            {
                const ser_estimate est = simulate_ser(stats, kind, cfg.sim, cfg.seed, point);
                out.records.push_back({sweep, std::string(to_string(kind)), "ser", est.ser(), est.symbols, est.errors, est.std_error()});
            }
            if (cfg.overlays)
            {
                const link_budget budget = make_link_budget(s);
                const int order = s.params.psk_order;
                out.records.push_back({sweep, "proposed", "ser_analytic", ser_mpsk(budget, order)});
                out.records.push_back({sweep, "proposed", "ser_bound", ser_upper_bound(budget, order)});
            }
        }
    }

    std::string_view to_string(csi_mode m) noexcept
    {
        return m == csi_mode::perfect ? "perfect" : "estimated";
    }

    csi_mode parse_csi_mode(std::string_view name)
    {
        if (name == "perfect" || name == "true")
            return csi_mode::perfect;
        if (name == "estimated")
            return csi_mode::estimated;
        throw std::invalid_argument("unknown csi mode '" + std::string(name) + "' (expected perfect or estimated)");
    }

    double ser_estimate::ser() const noexcept
    {
        return symbols == 0 ? 0.0 : static_cast<double>(errors) / static_cast<double>(symbols);
    }

    double ser_estimate::std_error() const noexcept
    {
        if (symbols == 0)
            return 0.0;
        const double p = ser();
        return std::sqrt(p * (1.0 - p) / static_cast<double>(symbols));
    }

    link_statistics make_link_statistics(const scenario &s)
    {
        s.validate();
        link_statistics st;
        st.rho2_h1 = s.params.direct_mean_gain();
        st.rho2_g1 = avg_reflected_gain_numeric(s.geometry, s.params);
        st.halves = half_surface_reflected_gains(s.geometry, s.params);
        st.p1 = s.params.tx_power_user1;
        st.noise_power = s.params.noise_power;
        st.order = s.params.psk_order;
        return st;
    }

    ser_estimate simulate_batch(const link_statistics &st, scheme kind, csi_mode csi, random_stream &rng,
                                std::uint64_t pairs)
    {
        const cvec points = constellation(st.order);
        const auto m = static_cast<std::uint32_t>(st.order);
        const training_plan plan = default_training_plan();

        ser_estimate out;
        for (std::uint64_t k = 0; k < pairs; ++k)
        {
            const std::uint32_t i1 = rng.uniform_index(m);
            const std::uint32_t i2 = rng.uniform_index(m);
            const cplx s1 = points[i1];
            const cplx s2 = points[i2];

            detection det;
            switch (kind)
            {
            case scheme::proposed:
            {
                const cplx h1 = rng.complex_normal(st.rho2_h1);
                const cplx g1 = rng.complex_normal(st.rho2_g1);
                cplx h_rx = h1, g_rx = g1;
                if (csi == csi_mode::estimated)
                {
                    const std::array<cplx, 2> w{rng.complex_normal(st.noise_power), rng.complex_normal(st.noise_power)};
                    const cvec z = receive_pilots(plan, h1, g1, st.p1, w);
                    const channel_estimate est = ls_estimate(plan, z, st.p1);
                    h_rx = est.h1;
                    g_rx = est.g_bar_1;
                }
                const stc_codeword cw = encode_pair(s1, s2);
                const std::array<cplx, 2> n{rng.complex_normal(st.noise_power), rng.complex_normal(st.noise_power)};
                const received_pair y = transmit_over_channel(cw, h1, g1, st.p1, n);
                det = combine_and_detect(y, h_rx, g_rx, st.p1, st.noise_power, st.order);
                break;
            }
            case scheme::siso:
            case scheme::dumb_irs:
            case scheme::classic_alamouti:
            case scheme::irs_alamouti:
            {
                branch_gains gains;
                double phase = 0.0;
                if (kind == scheme::siso)
                    gains = {rng.complex_normal(st.rho2_h1), {}};
                else if (kind == scheme::dumb_irs)
                {
                    gains = {rng.complex_normal(st.rho2_h1), rng.complex_normal(st.rho2_g1)};
                    phase = two_pi * rng.uniform();
                }
                else if (kind == scheme::classic_alamouti)
                    gains = {rng.complex_normal(st.rho2_h1), rng.complex_normal(st.rho2_h1)};
                else
                    gains = {rng.complex_normal(st.halves.first), rng.complex_normal(st.halves.second)};

                const benchmark_codeword cw = encode_benchmark(kind, s1, s2, phase);
                const std::array<cplx, 2> n{rng.complex_normal(st.noise_power), rng.complex_normal(st.noise_power)};
                const received_pair y = transmit_benchmark(cw, gains, st.p1, n);
                det = detect_benchmark(kind, y, gains, st.p1, st.noise_power, st.order, phase);
                break;
            }
            }
            out.errors += (det.indices[0] != static_cast<int>(i1)) + (det.indices[1] != static_cast<int>(i2));
        }
        out.pairs = pairs;
        out.symbols = 2 * pairs;
        return out;
    }

    ser_estimate simulate_ser(const link_statistics &stats, scheme kind, const sim_options &opt, std::uint64_t seed,
                              std::uint32_t point)
    {
        if (opt.max_pairs == 0 || opt.batch_pairs == 0)
            throw std::invalid_argument("simulate_ser: max_pairs and batch_pairs must be positive");
        const unsigned threads = resolve_threads(opt.threads);
        const std::uint64_t batch = opt.batch_pairs;
        const std::uint64_t batches = (opt.max_pairs + batch - 1) / batch;
        const std::uint32_t purpose = ser_purpose(kind, opt.csi);

        ser_estimate total;
        for (std::uint64_t wave = 0; wave < batches; wave += threads)
        {
            const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(threads, batches - wave));
            std::vector<ser_estimate> part(count);
            parallel_for(count, threads, [&](std::size_t i) {
                const std::uint64_t b = wave + i;
                random_stream rng(seed, {purpose, point, static_cast<std::uint32_t>(b)});
                const std::uint64_t pairs = std::min(batch, opt.max_pairs - b * batch);
                part[i] = simulate_batch(stats, kind, opt.csi, rng, pairs);
            });
            // In-order reduction keeps the stopping point independent of the thread count.
            for (const auto &p : part)
            {
                total.pairs += p.pairs;
                total.symbols += p.symbols;
                total.errors += p.errors;
                if (total.errors >= opt.target_errors)
                    return total;
            }
        }
        return total;
    }

    void coherence_model::validate() const
    {
        if (!(coherence_interval >= 1.0))
            throw invariant_error("coherence interval must be >= 1 symbol period");
        if (!(training_overhead >= 0.0))
            throw invariant_error("training overhead must be >= 0");
    }

    double effective_rate(const coherence_model &m, double ergodic_rate)
    {
        m.validate();
        if (m.coherence_interval <= m.training_overhead)
            return 0.0;
        return (m.coherence_interval - m.training_overhead) / m.coherence_interval * ergodic_rate;
    }

    ergodic_rates compute_ergodic_rates(const scenario &s, int group_size, std::uint64_t samples, std::uint64_t seed,
                                        unsigned threads)
    {
        s.validate();
        if (samples == 0)
            throw std::invalid_argument("compute_ergodic_rates: need at least one sample");
        ergodic_rates out;
        out.samples = samples;

        // User 1: Monte Carlo over Rayleigh draws, split into a fixed number of chunks.
        const double rho_h = s.params.direct_mean_gain();
        const double rho_g = avg_reflected_gain_numeric(s.geometry, s.params);
        const double snr = s.params.tx_snr_user1();
        struct moments
        {
            double prop = 0.0, prop2 = 0.0, ala = 0.0, ala2 = 0.0;
        };
        std::vector<moments> chunk(rate_chunks);
        parallel_for(rate_chunks, resolve_threads(threads), [&](std::size_t c) {
            const std::uint64_t begin = samples * c / rate_chunks;
            const std::uint64_t end = samples * (c + 1) / rate_chunks;
            random_stream rng(seed, {rate_purpose, 0, static_cast<std::uint32_t>(c)});
            moments acc;
            for (std::uint64_t k = begin; k < end; ++k)
            {
                const double h = std::norm(rng.complex_normal(rho_h));
                const double g = std::norm(rng.complex_normal(rho_g));
                const double h2 = std::norm(rng.complex_normal(rho_h));
                const double rp = std::log2(1.0 + snr * (h + g));
                const double ra = std::log2(1.0 + 0.5 * snr * (h + h2));
                acc.prop += rp;
                acc.prop2 += rp * rp;
                acc.ala += ra;
                acc.ala2 += ra * ra;
            }
            chunk[c] = acc;
        });
        moments sum;
        for (const auto &m : chunk)
        {
            sum.prop += m.prop;
            sum.prop2 += m.prop2;
            sum.ala += m.ala;
            sum.ala2 += m.ala2;
        }
        const double n = static_cast<double>(samples);
        out.proposed = sum.prop / n;
        out.classic_alamouti = sum.ala / n;
        out.proposed_std_error = std::sqrt(std::max(0.0, sum.prop2 / n - out.proposed * out.proposed) / n);
        out.classic_std_error = std::sqrt(std::max(0.0, sum.ala2 / n - out.classic_alamouti * out.classic_alamouti) / n);

        // User 2: grouped passive beamforming over deterministic LoS channels.
        const cvec g0 = los_vector_g0(s.geometry, s.params);
        const cvec g2 = los_vector_g2(s.geometry, s.params);
        const cvec gbar2 = cascaded_vector(g0, g2);
        const reflection_vector theta = grouped_theta(s.geometry, gbar2, group_size);
        const cplx g2_star = effective_gain(gbar2, theta.per_element);
        const direct_gain direct = direct_los_gain(s.params, s.geometry.ap_distance);
        const double direct_cycles = std::fmod((s.params.user2_distance - s.geometry.ap_distance) / s.params.wavelength, 1.0);
        const cplx h2 = std::sqrt(direct.exact) * std::polar(1.0, -two_pi * direct_cycles);
        const int order = s.params.psk_order;
        double bf = 0.0;
        for (int k = 0; k < order; ++k)
            bf += std::log2(1.0 + user2_received_snr(h2, g2_star, two_pi * k / order, s.params.tx_power_user2, s.params.noise_power));
        out.passive_beamforming = bf / order;
        out.beamforming_gain = std::norm(g2_star);
        out.beamforming_overhead = static_cast<double>(group_count(s.geometry, group_size)) + 2.0;
        return out;
    }

    const record &experiment_result::find(double sweep, std::string_view scheme_name, std::string_view metric) const
    {
        for (const auto &r : records)
            if (r.sweep == sweep && r.scheme == scheme_name && r.metric == metric)
                return r;
        throw std::out_of_range("no record for (" + std::to_string(sweep) + ", " + std::string(scheme_name) + ", " +
                                std::string(metric) + ")");
    }

    std::vector<const record *> experiment_result::select(std::string_view scheme_name, std::string_view metric) const
    {
        std::vector<const record *> out;
        for (const auto &r : records)
            if (r.scheme == scheme_name && r.metric == metric)
                out.push_back(&r);
        return out;
    }

    std::vector<scheme> all_schemes()
    {
        return {scheme::proposed, scheme::siso, scheme::dumb_irs, scheme::classic_alamouti, scheme::irs_alamouti};
    }

    experiment_result run_ser_vs_power(const experiment_config &cfg)
    {
        require_sweep(cfg);
        require_trials(cfg);
        experiment_result out{"ser-vs-power", "power_dbm", cfg.sweep, {}, cfg.seed, cfg.config_hash};
        for (std::size_t i = 0; i < cfg.sweep.size(); ++i)
        {
            scenario s = cfg.base;
            s.params.tx_power_user1 = units::dbm_to_mw(cfg.sweep[i]);
            s.params.tx_power_user2 = s.params.tx_power_user1;
            s.validate();
            add_ser_points(out, cfg.sweep[i], static_cast<std::uint32_t>(i), s, cfg);
        }
        return out;
    }

    experiment_result run_ser_vs_elements(const experiment_config &cfg)
    {
        require_sweep(cfg);
        require_trials(cfg);
        experiment_result out{"ser-vs-elements", "n_bar", cfg.sweep, {}, cfg.seed, cfg.config_hash};
        for (std::size_t i = 0; i < cfg.sweep.size(); ++i)
        {
            const scenario s = with_n_bar(cfg.base, to_element_count(cfg.sweep[i]));
            add_ser_points(out, cfg.sweep[i], static_cast<std::uint32_t>(i), s, cfg);
        }
        return out;
    }

    experiment_result run_gain_vs_elements(const experiment_config &cfg)
    {
        require_sweep(cfg);
        experiment_result out{"gain-vs-elements", "n_bar", cfg.sweep, {}, cfg.seed, cfg.config_hash};
        for (double v : cfg.sweep)
        {
            const scenario s = with_n_bar(cfg.base, to_element_count(v));
            const auto &g = s.geometry;
            const auto &p = s.params;
            for (channel_model m : cfg.models)
            {
                const std::string tag(to_string(m));
                out.records.push_back({v, "user1_reflected", "avg_gain_" + tag, avg_reflected_gain_numeric(g, p, m)});
                out.records.push_back({v, "user2_beamforming", "pbf_" + tag, pbf_exact(g, p, m)});
            }
            if (cfg.overlays)
            {
                const double xi = g.occupation_ratio();
                const double rho = s.distance_ratio();
                out.records.push_back({v, "user1_reflected", "avg_gain_closed_form", avg_gain_closed_form(g, p)});
                out.records.push_back({v, "user1_reflected", "avg_gain_limit", avg_gain_limit(p, xi)});
                if (g.epsilon() <= 0.05 && rho <= 0.05)
                {
                    const gain_bounds b = pbf_bounds(g, p);
                    out.records.push_back({v, "user2_beamforming", "pbf_lower", b.lower});
                    out.records.push_back({v, "user2_beamforming", "pbf_upper", b.upper});
                }
                out.records.push_back({v, "user2_beamforming", "pbf_asymptotic", pbf_asymptotic(rho, xi)});
                out.records.push_back({v, "user2_beamforming", "pbf_approx", pbf_asymptotic_approx(rho, xi)});
            }
        }
        return out;
    }

    experiment_result run_gain_vs_distance(const experiment_config &cfg)
    {
        require_sweep(cfg);
        experiment_result out{"gain-vs-distance", "user2_distance", cfg.sweep, {}, cfg.seed, cfg.config_hash};
        for (double v : cfg.sweep)
        {
            scenario s = cfg.base;
            s.params.user2_distance = v;
            s.validate();
            const auto &g = s.geometry;
            const double xi = g.occupation_ratio();
            const double rho = s.distance_ratio();
            out.records.push_back({v, "user2_beamforming", "pbf_element_wise", pbf_exact(g, s.params)});
            out.records.push_back({v, "user2_beamforming", "pbf_asymptotic", pbf_asymptotic(rho, xi)});
            out.records.push_back({v, "user2_beamforming", "pbf_approx", pbf_asymptotic_approx(rho, xi)});
            const direct_gain d = direct_los_gain(s.params, g.ap_distance);
            out.records.push_back({v, "user2_direct", "direct_exact", d.exact});
            out.records.push_back({v, "user2_direct", "direct_approx", d.approx});
        }
        return out;
    }

    experiment_result run_rate_vs_coherence(const experiment_config &cfg)
    {
        require_sweep(cfg);
        experiment_result out{"rate-vs-coherence", "coherence_interval", cfg.sweep, {}, cfg.seed, cfg.config_hash};
        const ergodic_rates rates = compute_ergodic_rates(cfg.base, cfg.group_size, cfg.rate_samples, cfg.seed, cfg.sim.threads);
        for (double tc : cfg.sweep)
        {
            const coherence_model div{tc, rates.diversity_overhead};
            const coherence_model bf{tc, rates.beamforming_overhead};
            const double fd = effective_rate(div, 1.0);
            const double fb = effective_rate(bf, 1.0);
            out.records.push_back({tc, "proposed", "rate", fd * rates.proposed, rates.samples, 0, fd * rates.proposed_std_error});
            out.records.push_back({tc, "classic_alamouti", "rate", fd * rates.classic_alamouti, rates.samples, 0, fd * rates.classic_std_error});
            out.records.push_back({tc, "passive_beamforming", "rate", fb * rates.passive_beamforming});
        }
        return out;
    }
}
