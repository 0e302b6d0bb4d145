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

#include "irsdiv/estimation.hpp"

#include <cmath>
#include <string>

namespace irsdiv
{
    namespace
    {
        using mat2 = std::array<std::array<cplx, 2>, 2>;

        // Inverse of the Hermitian Gram matrix. Rank is judged relative to the trace so that the
        // threshold is independent of L.
        mat2 inverse_gram(const training_plan &plan)
        {
            if (plan.length() < 2)
                throw singular_design_error("training plan needs at least two pilots, got " + std::to_string(plan.length()));
            const mat2 g = training_gram(plan);
            const cplx det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
            const double trace = g[0][0].real() + g[1][1].real();
            if (std::abs(det) <= 1e-12 * trace * trace)
                throw singular_design_error("training matrix is rank deficient");
            return {{{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}}};
        }
    }

    training_plan default_training_plan()
    {
        return training_plan{{0.0, -pi}};
    }

    std::vector<std::array<cplx, 2>> training_matrix(const training_plan &plan)
    {
        std::vector<std::array<cplx, 2>> rows;
        rows.reserve(plan.length());
        for (double phi : plan.phases)
            rows.push_back({cplx{1.0, 0.0}, std::polar(1.0, phi)});
        return rows;
    }

    std::array<std::array<cplx, 2>, 2> training_gram(const training_plan &plan)
    {
        mat2 g{};
        for (const auto &row : training_matrix(plan))
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    g[i][j] += std::conj(row[i]) * row[j];
        return g;
    }

    cvec receive_pilots(const training_plan &plan, cplx h1, cplx g_bar_1, double p1, std::span<const cplx> noise)
    {
        if (noise.size() != plan.length())
            throw std::invalid_argument("receive_pilots: noise length must equal the number of pilots");
        const double amp = std::sqrt(p1);
        cvec z(plan.length());
        for (std::size_t l = 0; l < z.size(); ++l)
            z[l] = amp * (h1 + g_bar_1 * std::polar(1.0, plan.phases[l])) + noise[l];
        return z;
    }

    channel_estimate ls_estimate(const training_plan &plan, std::span<const cplx> z, double p1)
    {
        if (z.size() != plan.length())
            throw std::invalid_argument("ls_estimate: observation length must equal the number of pilots");
        const mat2 inv = inverse_gram(plan);

        // Phi^H z
        cplx b0{}, b1{};
        for (std::size_t l = 0; l < z.size(); ++l)
        {
            b0 += z[l];
            b1 += std::polar(1.0, -plan.phases[l]) * z[l];
        }
        const double scale = 1.0 / std::sqrt(p1);
        return {scale * (inv[0][0] * b0 + inv[0][1] * b1), scale * (inv[1][0] * b0 + inv[1][1] * b1)};
    }

    std::array<double, 2> ls_error_variance(const training_plan &plan, double p1, double noise_power)
    {
        const mat2 inv = inverse_gram(plan);
        const double s = noise_power / p1;
        return {s * inv[0][0].real(), s * inv[1][1].real()};
    }
}
