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

#include "irsdiv/cli/app.hpp"

#include "irsdiv/cli/report.hpp"
#include "irsdiv/cli/validation.hpp"

#include <CLI11.hpp>

#include <array>
#include <ostream>

#ifndef IRSDIV_VERSION
#define IRSDIV_VERSION "0.0.0"
#endif

namespace irsdiv::cli
{
    namespace
    {
        constexpr std::array<std::string_view, 5> experiments{"ser-vs-power", "ser-vs-elements", "gain-vs-elements",
                                                              "gain-vs-distance", "rate-vs-coherence"};

        sim::experiment_result dispatch(std::string_view sub, const sim::experiment_config &e)
        {
            if (sub == "ser-vs-power")
                return sim::run_ser_vs_power(e);
            if (sub == "ser-vs-elements")
                return sim::run_ser_vs_elements(e);
            if (sub == "gain-vs-elements")
                return sim::run_gain_vs_elements(e);
            if (sub == "gain-vs-distance")
                return sim::run_gain_vs_distance(e);
            return sim::run_rate_vs_coherence(e);
        }

        struct flags
        {
            std::string config_path;
            std::string preset;
            std::optional<std::uint64_t> seed;
            std::string out_dir;
            std::vector<std::string> sets;
            std::string schemes;
            std::string sweep;
        };

        void add_flags(CLI::App &cmd, flags &f)
        {
            cmd.add_option("--config", f.config_path, "Config file with [scenario]/[params]/[sim]/[run] sections");
            cmd.add_option("--preset", f.preset, "Built-in scenario preset")->check(CLI::IsMember({"baseline"}));
            cmd.add_option("--seed", f.seed, "Master RNG seed");
            cmd.add_option("--out", f.out_dir, "Output directory");
            cmd.add_option("--set", f.sets, "Parameter override key=value (repeatable)")->allow_extra_args(false);
            cmd.add_option("--schemes", f.schemes, "Comma separated scheme list for SER runs");
            cmd.add_option("--sweep", f.sweep, "var=start:stop:step or var=v1,v2,...");
        }

        run_config build_config(const flags &f)
        {
            run_config cfg = f.config_path.empty() ? run_config{} : load_config(f.config_path);
            if (!f.preset.empty())
                cfg.preset = f.preset;
            if (f.seed)
                cfg.seed = *f.seed;
            if (!f.out_dir.empty())
                cfg.output_dir = f.out_dir;
            if (!f.schemes.empty())
                cfg.schemes = parse_scheme_list(f.schemes);
            if (!f.sweep.empty())
                cfg.sweep = parse_sweep(f.sweep);
            for (const auto &s : f.sets)
                set_option(cfg, s);
            return cfg;
        }
    }

    std::string_view tool_version() noexcept { return IRSDIV_VERSION; }

    int run(std::string_view subcommand, run_config cfg, std::ostream &out, std::ostream &err)
    {
        try
        {
            resolve(cfg, subcommand);
        }
        catch (const config_error &e)
        {
            err << "config error: " << e.what() << '\n';
            return exit_config;
        }
        catch (const std::invalid_argument &e)
        {
            err << "config error: " << e.what() << '\n';
            return exit_config;
        }

        try
        {
            if (subcommand == "validate")
            {
                const auto results = run_validation(cfg.scn, cfg.seed);
                for (const auto &r : results)
                    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
                const bool ok = all_passed(results);
                out << (ok ? "all checks passed\n" : "validation failed\n");
                return ok ? exit_ok : exit_validation;
            }
            if (std::find(experiments.begin(), experiments.end(), subcommand) == experiments.end())
            {
                err << "unknown subcommand '" << subcommand << "'\n";
                return exit_config;
            }

            sim::experiment_config e;
            try
            {
                e = make_experiment(cfg, subcommand);
            }
            catch (const config_error &ex)
            {
                err << "config error: " << ex.what() << '\n';
                return exit_config;
            }
            const sim::experiment_result result = dispatch(subcommand, e);

            const std::string stem(subcommand);
            const auto csv_path = cfg.output_dir / (stem + ".csv");
            const auto manifest_path = cfg.output_dir / (stem + ".manifest.json");
            write_file(csv_path, to_csv(result));
            manifest m{std::string(tool_version()), stem, cfg.seed, e.config_hash, canonical_text(cfg, subcommand),
                       {csv_path.filename().string()}};
            write_file(manifest_path, to_json(m));
            out << stem << ": " << result.records.size() << " rows -> " << csv_path.string() << '\n';
            return exit_ok;
        }
        catch (const invariant_error &e)
        {
            err << "config error: " << e.what() << '\n';
            return exit_config;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_runtime;
        }
    }

    int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"IRS-integrated access point: diversity and beamforming experiments", "irsdiv"};
        app.set_version_flag("--version", std::string(tool_version()));
        app.require_subcommand(1);

        flags f;
        std::string chosen;
        const auto add = [&](std::string_view name, const char *help) {
            CLI::App *cmd = app.add_subcommand(std::string(name), help);
            add_flags(*cmd, f);
            cmd->callback([&chosen, name] { chosen = name; });
        };
        add("ser-vs-power", "SER against transmit power for each scheme");
        add("ser-vs-elements", "SER against the number of elements per dimension");
        add("gain-vs-elements", "Average reflected gain and beamforming gain against array size");
        add("gain-vs-distance", "Beamforming and direct gains against user 2 distance");
        add("rate-vs-coherence", "Effective rate against coherence interval");
        add("validate", "Invariant and oracle checks");
        CLI::App *plot = app.add_subcommand("plot-script", "Print a matplotlib script for the CSV outputs");
        plot->callback([&chosen] { chosen = "plot-script"; });

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::Success &e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError &e)
        {
            app.exit(e, out, err);
            return exit_config;
        }

        if (chosen == "plot-script")
        {
            out << plot_script();
            return exit_ok;
        }
        run_config cfg;
        try
        {
            cfg = build_config(f);
        }
        catch (const config_error &e)
        {
            err << "config error: " << e.what() << '\n';
            return exit_config;
        }
        return run(chosen, std::move(cfg), out, err);
    }
}
