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

#ifndef IRSDIV_SIMKIT_HPP
#define IRSDIV_SIMKIT_HPP

#include "irsdiv/channel.hpp"
#include "irsdiv/scenario.hpp"
#include "irsdiv/stc.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace irsdiv::sim
{
    // Whether user 1 detects with the true {h1, g_bar_1} or with the LS estimates from an L = 2
    // pilot phase that precedes every symbol pair.
    enum class csi_mode
    {
        perfect,
        estimated
    };

    std::string_view to_string(csi_mode m) noexcept;
    csi_mode parse_csi_mode(std::string_view name);

    struct sim_options
    {
        std::uint64_t max_pairs = 20'000'000; // per point and scheme
        std::uint64_t target_errors = 200;    // stop once this many symbol errors are seen
        std::uint32_t batch_pairs = 1u << 14; // pairs per random stream
        unsigned threads = 0;                 // 0: std::thread::hardware_concurrency()
        csi_mode csi = csi_mode::perfect;
    };

    // Symbol-error counts for one (point, scheme). Trials are symbols, two per pair.
    struct ser_estimate
    {
        std::uint64_t pairs = 0;
        std::uint64_t symbols = 0;
        std::uint64_t errors = 0;

        double ser() const noexcept;
        // Binomial standard error sqrt(p (1 - p) / symbols).
        double std_error() const noexcept;
    };

    // Branch statistics one SER point needs, fixed for the whole run.
    struct link_statistics
    {
        double rho2_h1 = 0.0;     // direct link mean gain
        double rho2_g1 = 0.0;     // reflected link mean gain, exact array sum
        half_surface_gains halves; // subsurface mean gains for irs_alamouti
        double p1 = 0.0;
        double noise_power = 0.0;
        int order = 8;
    };

    link_statistics make_link_statistics(const scenario &s);

    // Simulates independent coherence blocks (a fresh channel per symbol pair). g_bar_1 is drawn
    // directly from its exact distribution CN(0, rho2_g1), which is what the element-level sum
    // g0^T diag(theta_bar) g1 produces for Gaussian g1. Batches are keyed (seed, scheme, point, batch)
    // and reduced in batch order, so the result does not depend on the thread count.
    ser_estimate simulate_ser(const link_statistics &stats, scheme kind, const sim_options &opt, std::uint64_t seed,
                              std::uint32_t point);

    // One batch, exposed for tests and benchmarks.
    ser_estimate simulate_batch(const link_statistics &stats, scheme kind, csi_mode csi, random_stream &rng,
                                std::uint64_t pairs);

    // ---- Effective rate --------------------------------------------------------------------

    struct coherence_model
    {
        double coherence_interval = 1.0; // T_c, symbol periods
        double training_overhead = 0.0;  // T_0, symbol periods

        void validate() const;
    };

    // 0 for T_c <= T_0, else (T_c - T_0) / T_c * ergodic_rate.
    double effective_rate(const coherence_model &m, double ergodic_rate);

    struct ergodic_rates
    {
        double proposed = 0.0;            // E log2(1 + P1_bar (|h1|^2 + |g_bar_1|^2))
        double classic_alamouti = 0.0;    // E log2(1 + P1_bar / 2 (|h_a|^2 + |h_b|^2))
        double passive_beamforming = 0.0; // mean over the common phase of log2(1 + gamma~)
        double proposed_std_error = 0.0;
        double classic_std_error = 0.0;
        std::uint64_t samples = 0;
        double beamforming_overhead = 0.0; // tiles + 2 pilots
        double diversity_overhead = 2.0;
        double beamforming_gain = 0.0;     // |g_bar_2^H theta_bar|^2 of the grouped design
    };

    // Ergodic rates of the diversity and grouped-beamforming schemes. The diversity schemes share their h draws
    // (common random numbers). The beamforming scheme is deterministic: user 2's channels are LoS
    // and the common phase is averaged over its M equally likely values.
    ergodic_rates compute_ergodic_rates(const scenario &s, int group_size, std::uint64_t samples, std::uint64_t seed,
                                        unsigned threads = 0);

    // ---- Experiments -----------------------------------------------------------------------

    struct record
    {
        double sweep = 0.0;
        std::string scheme;
        std::string metric;
        double value = 0.0;
        std::uint64_t trials = 0;
        std::uint64_t errors = 0;
        double std_error = 0.0;
    };

    struct experiment_result
    {
        std::string name;
        std::string sweep_variable;
        std::vector<double> sweep_values;
        std::vector<record> records;
        std::uint64_t seed = 0;
        std::string config_hash;

        // First record matching (sweep, scheme, metric); throws std::out_of_range if absent.
        const record &find(double sweep, std::string_view scheme, std::string_view metric) const;
        std::vector<const record *> select(std::string_view scheme, std::string_view metric) const;
    };

    struct experiment_config
    {
        scenario base = default_scenario();
        std::vector<scheme> schemes;     // SER experiments; empty means all five
        std::vector<double> sweep;       // values of the experiment's sweep variable
        sim_options sim;
        std::uint64_t seed = 1;
        bool overlays = true;            // analytic curves next to Monte Carlo points
        std::vector<channel_model> models{channel_model::element_wise, channel_model::free_space, channel_model::far_field};
        int group_size = 10;             // beamforming tile edge for the rate experiment
        std::uint64_t rate_samples = 200'000;
        std::string config_hash;
    };

    // Sweep: transmit power P1 = P2 in dBm.
    experiment_result run_ser_vs_power(const experiment_config &cfg);
    // Sweep: elements per dimension N_bar (n_y = n_z).
    experiment_result run_ser_vs_elements(const experiment_config &cfg);
    // Sweep: N_bar. Average reflected gain and beamforming gain under each channel model, closed
    // forms, bounds and limits.
    experiment_result run_gain_vs_elements(const experiment_config &cfg);
    // Sweep: user 2 distance in m.
    experiment_result run_gain_vs_distance(const experiment_config &cfg);
    // Sweep: coherence interval T_c in symbol periods.
    experiment_result run_rate_vs_coherence(const experiment_config &cfg);

    std::vector<scheme> all_schemes();
}

#endif
