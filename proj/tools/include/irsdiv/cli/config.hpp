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

#ifndef IRSDIV_CLI_CONFIG_HPP
#define IRSDIV_CLI_CONFIG_HPP

#include "irsdiv/simkit.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace irsdiv::cli
{
    // Malformed input: unknown key, bad number, bad section, unreadable file.
    struct config_error : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct sweep_spec
    {
        std::string variable; // power_dbm, n_bar, user2_distance or coherence
        std::vector<double> values;
    };

    // Everything a run needs. The raw overrides are kept in the order they were given; resolve()
    // folds them over the preset (and the subcommand's own defaults) into `scn` and the sim fields.
    struct run_config
    {
        std::string preset = "baseline";
        std::vector<std::pair<std::string, std::string>> overrides;
        std::filesystem::path output_dir = "irsdiv-out";
        std::uint64_t seed = 1;
        std::vector<scheme> schemes;
        std::optional<sweep_spec> sweep;

        // Filled by resolve().
        scenario scn;
        sim::sim_options sim;
        int group_size = 10;
        std::uint64_t rate_samples = 200'000;
        bool overlays = true;
    };

    // Plain-text format:
    //
    //   # comment
    //   [scenario]
    //   n_bar = 105
    //   [params]
    //   noise_power = -85dBm
    //   [run]
    //   seed = 7
    //   sweep = power_dbm=0:30:2
    //
    // Every key belongs to exactly one section. Values with a dBm suffix are converted to mW,
    // a dB suffix to a linear ratio; bare numbers are taken as linear.
    run_config load_config(const std::filesystem::path &path);
    run_config parse_config(std::string_view text, std::string_view origin = "<string>");

    // Applies one key=value. The key may be bare ("psk_order") or qualified ("params.psk_order").
    void set_option(run_config &cfg, std::string_view key, std::string_view value);
    // "key=value" form used by --set.
    void set_option(run_config &cfg, std::string_view assignment);

    sweep_spec parse_sweep(std::string_view text);
    std::vector<scheme> parse_scheme_list(std::string_view text);

    // Builds the scenario and simulation settings and checks every invariant. Subcommand-specific
    // defaults (for example n_bar = 100 for the distance sweep) sit between the preset and the
    // user's overrides. Throws config_error for bad values and invariant_error for violations.
    void resolve(run_config &cfg, std::string_view subcommand = {});

    // Resolved configuration as sorted key=value lines; output_dir and threads are left out
    // because they do not change results.
    std::string canonical_text(const run_config &cfg, std::string_view subcommand);
    // 64-bit FNV-1a of canonical_text, as 16 hex digits.
    std::string config_hash(const run_config &cfg, std::string_view subcommand);

    // Default sweep of a subcommand, or the configured one if it names the right variable.
    sweep_spec sweep_for(const run_config &cfg, std::string_view subcommand);
    std::string_view sweep_variable(std::string_view subcommand);

    sim::experiment_config make_experiment(const run_config &cfg, std::string_view subcommand);
}

#endif
