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

#include "irsdiv/cli/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace irsdiv::cli
{
    namespace
    {
        void append_double(std::string &out, double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
        }
    }

    std::string to_csv(const sim::experiment_result &result)
    {
        std::string out(csv_header);
        out += '\n';
        for (const auto &r : result.records)
        {
            append_double(out, r.sweep);
            out += ',' + r.scheme + ',' + r.metric + ',';
            append_double(out, r.value);
            out += ',' + std::to_string(r.trials) + ',' + std::to_string(r.errors) + ',';
            append_double(out, r.std_error);
            out += '\n';
        }
        return out;
    }

    std::string to_json(const manifest &m)
    {
        nlohmann::ordered_json j;
        j["tool"] = "irsdiv";
        j["version"] = m.tool_version;
        j["subcommand"] = m.subcommand;
        j["seed"] = m.seed;
        j["config_hash"] = m.config_hash;
        nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
        std::size_t pos = 0;
        while (pos < m.canonical_config.size())
        {
            auto nl = m.canonical_config.find('\n', pos);
            if (nl == std::string::npos)
                nl = m.canonical_config.size();
            const std::string line = m.canonical_config.substr(pos, nl - pos);
            if (const auto eq = line.find('='); eq != std::string::npos)
                cfg[line.substr(0, eq)] = line.substr(eq + 1);
            pos = nl + 1;
        }
        j["config"] = cfg;
        j["outputs"] = m.outputs;
        j["csv_columns"] = csv_header;
        return j.dump(2) + "\n";
    }

    void write_file(const std::filesystem::path &path, std::string_view text)
    {
        if (path.has_parent_path())
        {
            std::error_code ec;
            std::filesystem::create_directories(path.parent_path(), ec);
            if (ec)
                throw std::runtime_error("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
        }
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open '" + path.string() + "' for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.close();
        if (!out)
            throw std::runtime_error("write to '" + path.string() + "' failed");
    }

    std::string plot_script()
    {
        return R"PY(#!/usr/bin/env python3
# Plots every irsdiv CSV in a directory: python3 plot.py <out-dir>
import csv
import sys
from collections import defaultdict
from pathlib import Path

import matplotlib.pyplot as plt

LOG_X = {"gain-vs-distance"}
LOG_Y = {"ser-vs-power", "ser-vs-elements", "gain-vs-elements", "gain-vs-distance"}


def main(out_dir):
    for path in sorted(Path(out_dir).glob("*.csv")):
        series = defaultdict(lambda: ([], []))
        with path.open() as f:
            for row in csv.DictReader(f):
                xs, ys = series[(row["scheme"], row["metric"])]
                xs.append(float(row["sweep"]))
                ys.append(float(row["value"]))
        fig, ax = plt.subplots()
        for (scheme, metric), (xs, ys) in sorted(series.items()):
            style = "o" if metric == "ser" else "-"
            ax.plot(xs, ys, style, label=f"{scheme} {metric}")
        if path.stem in LOG_X:
            ax.set_xscale("log")
        if path.stem in LOG_Y:
            ax.set_yscale("log")
        ax.set_title(path.stem)
        ax.legend(fontsize="small")
        ax.grid(True, which="both", alpha=0.3)
        fig.savefig(path.with_suffix(".png"), dpi=150)
        plt.close(fig)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
)PY";
    }
}
