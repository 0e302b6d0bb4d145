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

#ifndef IRSDIV_CLI_VALIDATION_HPP
#define IRSDIV_CLI_VALIDATION_HPP

#include "irsdiv/scenario.hpp"

#include <string>
#include <vector>

namespace irsdiv::cli
{
    struct check_result
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    // Beamforming gain of an n_bar x n_bar array at distance ratio rho lies inside its bounds.
    check_result sandwich_check(const scenario &base, int n_bar, double rho);

    // Invariant and oracle checks over the base scenario: Philox known answers, closed-form gain
    // against the element sum, bound sandwich grid, code orthogonality, exhaustive decoding, LS
    // recovery, quadrature convergence, SER bound ordering and phase invariance.
    std::vector<check_result> run_validation(const scenario &base, std::uint64_t seed);

    bool all_passed(const std::vector<check_result> &results) noexcept;
}

#endif
