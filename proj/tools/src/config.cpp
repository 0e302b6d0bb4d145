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

#include "irsdiv/cli/config.hpp"

#include "irsdiv/units.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace irsdiv::cli
{
    namespace
    {
        struct key_info
        {
            std::string_view section;
            std::string_view name;
        };

        constexpr std::array<key_info, 30> known_keys{{
            {"scenario", "n_bar"},
            {"scenario", "n_y"},
            {"scenario", "n_z"},
            {"scenario", "spacing"},
            {"scenario", "element_area"},
            {"scenario", "occupation_ratio"},
            {"scenario", "ap_distance"},
            {"params", "wavelength"},
            {"params", "power"},
            {"params", "tx_power_user1"},
            {"params", "tx_power_user2"},
            {"params", "noise_power"},
            {"params", "ref_path_gain"},
            {"params", "path_loss_exp"},
            {"params", "d_h1"},
            {"params", "d_g1"},
            {"params", "user2_distance"},
            {"params", "user2_antenna_area"},
            {"params", "psk_order"},
            {"sim", "max_pairs"},
            {"sim", "target_errors"},
            {"sim", "batch_pairs"},
            {"sim", "threads"},
            {"sim", "csi"},
            {"sim", "group_size"},
            {"sim", "rate_samples"},
            {"sim", "overlays"},
            {"run", "preset"},
            {"run", "seed"},
            {"run", "out"},
        }};

        constexpr std::array<std::string_view, 2> extra_run_keys{"schemes", "sweep"};

        std::string_view trim(std::string_view s)
        {
            const auto ws = " \t\r\n";
            const auto b = s.find_first_not_of(ws);
            if (b == std::string_view::npos)
                return {};
            return s.substr(b, s.find_last_not_of(ws) - b + 1);
        }

        std::string_view section_of(std::string_view key)
        {
            for (const auto &k : known_keys)
                if (k.name == key)
                    return k.section;
            for (auto k : extra_run_keys)
                if (k == key)
                    return "run";
            return {};
        }

        bool ends_with_ci(std::string_view s, std::string_view suffix)
        {
            if (s.size() < suffix.size())
                return false;
            return std::equal(suffix.begin(), suffix.end(), s.end() - static_cast<std::ptrdiff_t>(suffix.size()),
                              [](char a, char b) { return std::tolower(static_cast<unsigned char>(a)) ==
                                                          std::tolower(static_cast<unsigned char>(b)); });
        }

        double parse_plain(std::string_view key, std::string_view text)
        {
            text = trim(text);
            if (!text.empty() && text.front() == '+')
                text.remove_prefix(1);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
                throw config_error(std::string(key) + ": cannot parse '" + std::string(text) + "' as a number");
            return v;
        }

        double parse_real(std::string_view key, std::string_view text)
        {
            text = trim(text);
            if (ends_with_ci(text, "dbm"))
                return units::dbm_to_mw(parse_plain(key, text.substr(0, text.size() - 3)));
            if (ends_with_ci(text, "db"))
                return units::db_to_linear(parse_plain(key, text.substr(0, text.size() - 2)));
            return parse_plain(key, text);
        }

        std::uint64_t parse_unsigned(std::string_view key, std::string_view text)
        {
            text = trim(text);
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
                throw config_error(std::string(key) + ": expected a non-negative integer, got '" + std::string(text) + "'");
            return v;
        }

        int parse_int(std::string_view key, std::string_view text)
        {
            const std::uint64_t v = parse_unsigned(key, text);
            if (v > 1'000'000'000u)
                throw config_error(std::string(key) + ": value out of range");
            return static_cast<int>(v);
        }

        bool parse_bool(std::string_view key, std::string_view text)
        {
            text = trim(text);
            if (text == "true" || text == "1" || text == "yes" || text == "on")
                return true;
            if (text == "false" || text == "0" || text == "no" || text == "off")
                return false;
            throw config_error(std::string(key) + ": expected true or false, got '" + std::string(text) + "'");
        }

        std::vector<std::pair<std::string, std::string>> subcommand_defaults(std::string_view sub)
        {
            if (sub == "ser-vs-elements")
                return {{"power", "20dBm"}};
            if (sub == "gain-vs-distance")
                return {{"n_bar", "100"}};
            if (sub == "rate-vs-coherence")
                return {{"n_bar", "100"}, {"power", "15dBm"}};
            return {};
        }

        std::vector<double> range(double start, double stop, double step)
        {
            if (!(step != 0.0) || (stop - start) / step < 0.0)
                throw config_error("sweep: step must be nonzero and point from start towards stop");
            const double span = (stop - start) / step;
            if (span > 1e6)
                throw config_error("sweep: too many points");
            std::vector<double> out;
            const auto n = static_cast<long>(std::floor(span + 1e-9));
            for (long k = 0; k <= n; ++k)
                out.push_back(start + static_cast<double>(k) * step);
            return out;
        }

        std::string format_double(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }
    }

    std::string_view sweep_variable(std::string_view subcommand)
    {
        if (subcommand == "ser-vs-power")
            return "power_dbm";
        if (subcommand == "ser-vs-elements" || subcommand == "gain-vs-elements")
            return "n_bar";
        if (subcommand == "gain-vs-distance")
            return "user2_distance";
        if (subcommand == "rate-vs-coherence")
            return "coherence";
        return {};
    }

    sweep_spec parse_sweep(std::string_view text)
    {
        text = trim(text);
        const auto eq = text.find('=');
        if (eq == std::string_view::npos)
            throw config_error("sweep: expected var=start:stop:step or var=v1,v2,...");
        sweep_spec out{std::string(trim(text.substr(0, eq))), {}};
        static constexpr std::array<std::string_view, 4> vars{"power_dbm", "n_bar", "user2_distance", "coherence"};
        if (std::find(vars.begin(), vars.end(), out.variable) == vars.end())
            throw config_error("sweep: unknown variable '" + out.variable +
                               "' (expected power_dbm, n_bar, user2_distance or coherence)");
        const std::string_view body = trim(text.substr(eq + 1));
        if (body.find(':') != std::string_view::npos)
        {
            std::vector<double> parts;
            std::size_t pos = 0;
            while (true)
            {
                const auto next = body.find(':', pos);
                parts.push_back(parse_plain("sweep", body.substr(pos, next - pos)));
                if (next == std::string_view::npos)
                    break;
                pos = next + 1;
            }
            if (parts.size() != 3)
                throw config_error("sweep: range form is start:stop:step");
            out.values = range(parts[0], parts[1], parts[2]);
        }
        else
        {
            std::size_t pos = 0;
            while (true)
            {
                const auto next = body.find(',', pos);
                out.values.push_back(parse_plain("sweep", body.substr(pos, next - pos)));
                if (next == std::string_view::npos)
                    break;
                pos = next + 1;
            }
        }
        return out;
    }

    std::vector<scheme> parse_scheme_list(std::string_view text)
    {
        std::vector<scheme> out;
        std::size_t pos = 0;
        while (true)
        {
            const auto next = text.find(',', pos);
            const auto item = trim(text.substr(pos, next - pos));
            try
            {
                const scheme s = parse_scheme(item);
                if (std::find(out.begin(), out.end(), s) == out.end())
                    out.push_back(s);
            }
            catch (const std::invalid_argument &e)
            {
                throw config_error(std::string("schemes: ") + e.what());
            }
            if (next == std::string_view::npos)
                break;
            pos = next + 1;
        }
        return out;
    }

    void set_option(run_config &cfg, std::string_view key, std::string_view value)
    {
        key = trim(key);
        value = trim(value);
        std::string_view wanted_section;
        if (const auto dot = key.find('.'); dot != std::string_view::npos)
        {
            wanted_section = key.substr(0, dot);
            key = key.substr(dot + 1);
        }
        const std::string_view section = section_of(key);
        if (section.empty())
            throw config_error("unknown key '" + std::string(key) + "'");
        if (!wanted_section.empty() && wanted_section != section)
            throw config_error("key '" + std::string(key) + "' belongs to [" + std::string(section) + "], not [" +
                               std::string(wanted_section) + "]");

        if (key == "preset")
            cfg.preset = std::string(value);
        else if (key == "seed")
            cfg.seed = parse_unsigned(key, value);
        else if (key == "out")
            cfg.output_dir = std::string(value);
        else if (key == "schemes")
            cfg.schemes = parse_scheme_list(value);
        else if (key == "sweep")
            cfg.sweep = parse_sweep(value);
        else
            cfg.overrides.emplace_back(std::string(key), std::string(value));
    }

    void set_option(run_config &cfg, std::string_view assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string_view::npos)
            throw config_error("expected key=value, got '" + std::string(assignment) + "'");
        set_option(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
    }

    run_config parse_config(std::string_view text, std::string_view origin)
    {
        run_config cfg;
        std::string section;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            const auto nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            const auto where = [&] { return std::string(origin) + ":" + std::to_string(line_no) + ": "; };

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            if (line.front() == '[')
            {
                if (line.back() != ']')
                    throw config_error(where() + "unterminated section header");
                section = std::string(trim(line.substr(1, line.size() - 2)));
                if (section != "scenario" && section != "params" && section != "sim" && section != "run")
                    throw config_error(where() + "unknown section [" + section + "]");
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw config_error(where() + "expected key = value");
            if (section.empty())
                throw config_error(where() + "key outside of any section");
            try
            {
                set_option(cfg, section + "." + std::string(trim(line.substr(0, eq))), line.substr(eq + 1));
            }
            catch (const config_error &e)
            {
                throw config_error(where() + e.what());
            }
        }
        return cfg;
    }

    run_config load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw config_error("cannot read config file '" + path.string() + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str(), path.string());
    }

    void resolve(run_config &cfg, std::string_view subcommand)
    {
        if (cfg.preset != "baseline")
            throw config_error("unknown preset '" + cfg.preset + "' (available: baseline)");

        std::map<std::string, std::string, std::less<>> kv;
        for (auto &[k, v] : subcommand_defaults(subcommand))
            kv[k] = v;
        for (const auto &[k, v] : cfg.overrides)
            kv[k] = v;
        const auto get = [&](std::string_view k) -> const std::string * {
            const auto it = kv.find(k);
            return it == kv.end() ? nullptr : &it->second;
        };

        scenario s = default_scenario();
        auto &g = s.geometry;
        auto &p = s.params;
        sim::sim_options sim;
        int group_size = 10;
        std::uint64_t rate_samples = 200'000;
        bool overlays = true;

        if (auto v = get("n_bar"))
            g.n_y = g.n_z = parse_int("n_bar", *v);
        if (auto v = get("n_y"))
            g.n_y = parse_int("n_y", *v);
        if (auto v = get("n_z"))
            g.n_z = parse_int("n_z", *v);
        if (auto v = get("spacing"))
            g.spacing = parse_real("spacing", *v);
        if (auto v = get("ap_distance"))
            g.ap_distance = parse_real("ap_distance", *v);
        // Element area follows the pitch unless given explicitly.
        const double xi = get("occupation_ratio") ? parse_real("occupation_ratio", *get("occupation_ratio")) : 1.0;
        if (get("element_area") && get("occupation_ratio"))
            throw config_error("element_area and occupation_ratio are mutually exclusive");
        g.element_area = get("element_area") ? parse_real("element_area", *get("element_area")) : xi * g.spacing * g.spacing;

        if (auto v = get("wavelength"))
            p.wavelength = parse_real("wavelength", *v);
        if (auto v = get("power"))
            p.tx_power_user1 = p.tx_power_user2 = parse_real("power", *v);
        if (auto v = get("tx_power_user1"))
            p.tx_power_user1 = parse_real("tx_power_user1", *v);
        if (auto v = get("tx_power_user2"))
            p.tx_power_user2 = parse_real("tx_power_user2", *v);
        if (auto v = get("noise_power"))
            p.noise_power = parse_real("noise_power", *v);
        if (auto v = get("ref_path_gain"))
            p.ref_path_gain = parse_real("ref_path_gain", *v);
        if (auto v = get("path_loss_exp"))
            p.path_loss_exp = parse_real("path_loss_exp", *v);
        if (auto v = get("d_h1"))
            p.d_h1 = parse_real("d_h1", *v);
        if (auto v = get("d_g1"))
            p.d_g1 = parse_real("d_g1", *v);
        if (auto v = get("user2_distance"))
            p.user2_distance = parse_real("user2_distance", *v);
        p.user2_antenna_area = get("user2_antenna_area") ? parse_real("user2_antenna_area", *get("user2_antenna_area"))
                                                         : g.element_area;
        if (auto v = get("psk_order"))
            p.psk_order = parse_int("psk_order", *v);

        if (auto v = get("max_pairs"))
            sim.max_pairs = parse_unsigned("max_pairs", *v);
        if (auto v = get("target_errors"))
            sim.target_errors = parse_unsigned("target_errors", *v);
        if (auto v = get("batch_pairs"))
        {
            const std::uint64_t b = parse_unsigned("batch_pairs", *v);
            if (b == 0 || b > (1u << 30))
                throw config_error("batch_pairs: must be in [1, 2^30]");
            sim.batch_pairs = static_cast<std::uint32_t>(b);
        }
        if (auto v = get("threads"))
            sim.threads = static_cast<unsigned>(parse_int("threads", *v));
        if (auto v = get("csi"))
        {
            try
            {
                sim.csi = sim::parse_csi_mode(trim(*v));
            }
            catch (const std::invalid_argument &e)
            {
                throw config_error(std::string("csi: ") + e.what());
            }
        }
        if (auto v = get("group_size"))
            group_size = parse_int("group_size", *v);
        if (auto v = get("rate_samples"))
            rate_samples = parse_unsigned("rate_samples", *v);
        if (auto v = get("overlays"))
            overlays = parse_bool("overlays", *v);

        if (sim.max_pairs == 0)
            throw invariant_error("max_pairs must be > 0");
        if (sim.max_pairs / sim.batch_pairs >= 0xFFFFFFFFull)
            throw invariant_error("max_pairs / batch_pairs must fit in 32 bits");
        if (group_size < 1)
            throw invariant_error("group_size must be >= 1");
        if (rate_samples == 0)
            throw invariant_error("rate_samples must be > 0");
        s.validate();

        cfg.scn = s;
        cfg.sim = sim;
        cfg.group_size = group_size;
        cfg.rate_samples = rate_samples;
        cfg.overlays = overlays;
    }

    sweep_spec sweep_for(const run_config &cfg, std::string_view subcommand)
    {
        const std::string_view var = sweep_variable(subcommand);
        if (var.empty())
            throw config_error("subcommand '" + std::string(subcommand) + "' has no sweep");
        if (cfg.sweep)
        {
            if (cfg.sweep->variable != var)
                throw config_error("sweep: " + std::string(subcommand) + " sweeps " + std::string(var) + ", not " +
                                   cfg.sweep->variable);
            if (cfg.sweep->values.empty())
                throw config_error("sweep: no values");
            return *cfg.sweep;
        }
        if (subcommand == "ser-vs-power")
            return {std::string(var), range(0.0, 30.0, 2.0)};
        if (subcommand == "ser-vs-elements")
            return {std::string(var), range(5.0, 205.0, 20.0)};
        if (subcommand == "gain-vs-elements")
            return {std::string(var), {5, 15, 25, 55, 105, 205, 305, 505, 1005, 2005}};
        if (subcommand == "gain-vs-distance")
            return {std::string(var), {10, 20, 50, 100, 150, 200, 300, 400, 600, 800, 1000}};
        return {std::string(var), {1, 2, 5, 10, 20, 50, 100, 102, 103, 150, 200, 250, 300, 400, 500, 700, 1000}};
    }

    std::string canonical_text(const run_config &cfg, std::string_view subcommand)
    {
        const auto &g = cfg.scn.geometry;
        const auto &p = cfg.scn.params;
        std::map<std::string, std::string> out;
        const auto put = [&](const std::string &k, double v) { out[k] = format_double(v); };
        out["run.subcommand"] = std::string(subcommand);
        out["run.preset"] = cfg.preset;
        out["run.seed"] = std::to_string(cfg.seed);
        std::string schemes;
        for (scheme s : cfg.schemes.empty() ? sim::all_schemes() : cfg.schemes)
            schemes += (schemes.empty() ? "" : ",") + std::string(to_string(s));
        out["run.schemes"] = schemes;
        if (!sweep_variable(subcommand).empty())
        {
            const sweep_spec sw = sweep_for(cfg, subcommand);
            std::string vals;
            for (double v : sw.values)
                vals += (vals.empty() ? "" : ",") + format_double(v);
            out["run.sweep"] = sw.variable + "=" + vals;
        }
        put("scenario.n_y", g.n_y);
        put("scenario.n_z", g.n_z);
        put("scenario.spacing", g.spacing);
        put("scenario.element_area", g.element_area);
        put("scenario.ap_distance", g.ap_distance);
        put("params.wavelength", p.wavelength);
        put("params.tx_power_user1", p.tx_power_user1);
        put("params.tx_power_user2", p.tx_power_user2);
        put("params.noise_power", p.noise_power);
        put("params.ref_path_gain", p.ref_path_gain);
        put("params.path_loss_exp", p.path_loss_exp);
        put("params.d_h1", p.d_h1);
        put("params.d_g1", p.d_g1);
        put("params.user2_distance", p.user2_distance);
        put("params.user2_antenna_area", p.user2_antenna_area);
        put("params.psk_order", p.psk_order);
        out["sim.max_pairs"] = std::to_string(cfg.sim.max_pairs);
        out["sim.target_errors"] = std::to_string(cfg.sim.target_errors);
        out["sim.batch_pairs"] = std::to_string(cfg.sim.batch_pairs);
        out["sim.csi"] = std::string(sim::to_string(cfg.sim.csi));
        out["sim.group_size"] = std::to_string(cfg.group_size);
        out["sim.rate_samples"] = std::to_string(cfg.rate_samples);
        out["sim.overlays"] = cfg.overlays ? "true" : "false";

        std::string text;
        for (const auto &[k, v] : out)
            text += k + "=" + v + "\n";
        return text;
    }

    std::string config_hash(const run_config &cfg, std::string_view subcommand)
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : canonical_text(cfg, subcommand))
        {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    sim::experiment_config make_experiment(const run_config &cfg, std::string_view subcommand)
    {
        sim::experiment_config e;
        e.base = cfg.scn;
        e.schemes = cfg.schemes;
        e.sweep = sweep_for(cfg, subcommand).values;
        e.sim = cfg.sim;
        e.seed = cfg.seed;
        e.overlays = cfg.overlays;
        e.group_size = cfg.group_size;
        e.rate_samples = cfg.rate_samples;
        e.config_hash = config_hash(cfg, subcommand);
        return e;
    }
}
