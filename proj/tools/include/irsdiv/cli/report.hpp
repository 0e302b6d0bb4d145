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

#ifndef IRSDIV_CLI_REPORT_HPP
#define IRSDIV_CLI_REPORT_HPP

#include "irsdiv/simkit.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace irsdiv::cli
{
    inline constexpr std::string_view csv_header = "sweep,scheme,metric,value,trials,errors,stderr";

    // One line per record, in record order. Reals use 17 significant digits.
    std::string to_csv(const sim::experiment_result &result);

    struct manifest
    {
        std::string tool_version;
        std::string subcommand;
        std::uint64_t seed = 0;
        std::string config_hash;
        std::string canonical_config; // key=value lines
        std::vector<std::string> outputs;
    };

    std::string to_json(const manifest &m);

    // Writes text to path, creating parent directories. Throws std::runtime_error on failure.
    void write_file(const std::filesystem::path &path, std::string_view text);

    // Python/matplotlib script that plots the CSVs one run produces.
    std::string plot_script();
}

#endif
