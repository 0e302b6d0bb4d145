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

#ifndef IRSDIV_ESTIMATION_HPP
#define IRSDIV_ESTIMATION_HPP

#include "irsdiv/types.hpp"

#include <array>
#include <span>
#include <stdexcept>

namespace irsdiv
{
    // Thrown when the training reflection matrix does not have full column rank.
    class singular_design_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Training common phase-shifts, one per pilot period. The pilot symbol is always 1.
    // Row l of the training matrix is [1, e^{j phases[l]}].
    struct training_plan
    {
        std::vector<double> phases;

        std::size_t length() const noexcept { return phases.size(); }
    };

    // L = 2 with phases (0, -pi): rows [1, 1] and [1, -1].
    training_plan default_training_plan();

    // Training matrix rows as (1, e^{j phi_l}).
    std::vector<std::array<cplx, 2>> training_matrix(const training_plan &plan);

    // Phi^H Phi (Hermitian 2x2).
    std::array<std::array<cplx, 2>, 2> training_gram(const training_plan &plan);

    // z_l = sqrt(P1)(h1 + g_bar_1 e^{j phi_l}) + w_l. noise must hold plan.length() entries.
    cvec receive_pilots(const training_plan &plan, cplx h1, cplx g_bar_1, double p1, std::span<const cplx> noise);

    struct channel_estimate
    {
        cplx h1{};
        cplx g_bar_1{};
    };

    // Least-squares estimate Phi^+ z / sqrt(P1). Throws singular_design_error for rank-deficient plans
    // (including L < 2).
    channel_estimate ls_estimate(const training_plan &plan, std::span<const cplx> z, double p1);

    // Diagonal of the estimation error covariance (sigma^2 / P1)(Phi^H Phi)^{-1}: {var(h1), var(g_bar_1)}.
    std::array<double, 2> ls_error_variance(const training_plan &plan, double p1, double noise_power);
}

#endif
