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

#ifndef IRSDIV_CLI_APP_HPP
#define IRSDIV_CLI_APP_HPP

#include "irsdiv/cli/config.hpp"

#include <iosfwd>
#include <string_view>

namespace irsdiv::cli
{
    enum exit_code : int
    {
        exit_ok = 0,
        exit_runtime = 1,
        exit_validation = 2,
        exit_config = 3,
    };

    std::string_view tool_version() noexcept;

    // Runs one subcommand on a config that has not been resolved yet. Writes
    // <out>/<subcommand>.csv and <out>/<subcommand>.manifest.json for experiments.
    int run(std::string_view subcommand, run_config cfg, std::ostream &out, std::ostream &err);

    // Full command line entry point.
    int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
}

#endif
