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

#include "irsdiv/stc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irsdiv
{
    namespace
    {
        constexpr double unit_modulus_tol = 1e-9;

        void require_unit(cplx s, const char *name)
        {
            if (std::abs(std::abs(s) - 1.0) > unit_modulus_tol)
                throw std::invalid_argument(std::string("encode: ") + name + " must have unit modulus");
        }

        detection alamouti_combine(const received_pair &y, cplx a, cplx b, double p1, double noise_power, int order)
        {
            const double energy = std::norm(a) + std::norm(b);
            if (!(energy > 0.0))
                throw std::domain_error("combine: zero channel, symbols cannot be detected");

            const matrix2 h = code_matrix(a, b);
            const matrix2 g = gram(h);
            if (std::abs(g[0][1]) > 1e-12 * energy || std::abs(g[1][0]) > 1e-12 * energy)
                throw numerical_error("combine: code matrix lost orthogonality");

            const cplx obs0 = y.y[0];
            const cplx obs1 = std::conj(y.y[1]);
            detection d;
            // H^H applied to [y1, y2^*]
            d.combined[0] = std::conj(h[0][0]) * obs0 + std::conj(h[1][0]) * obs1;
            d.combined[1] = std::conj(h[0][1]) * obs0 + std::conj(h[1][1]) * obs1;
            d.indices = {psk_detect(d.combined[0], order), psk_detect(d.combined[1], order)};
            d.snr = p1 * energy / noise_power;
            return d;
        }
    }

    cplx psk_modulate(int index, int order)
    {
        if (order < 2)
            throw std::out_of_range("psk order must be >= 2");
        if (index < 0 || index >= order)
            throw std::out_of_range("psk index " + std::to_string(index) + " outside [0, " + std::to_string(order) + ")");
        // Exact values on the axes keep noiseless tests bit-clean.
        const int quarter = 4 * index;
        if (quarter % order == 0)
        {
            switch ((quarter / order) % 4)
            {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            default:
                return {0.0, -1.0};
            }
        }
        return std::polar(1.0, two_pi * index / order);
    }

    int psk_detect(cplx y, int order) noexcept
    {
        const double t = wrap_phase(std::arg(y)) * order / two_pi; // in [0, order)
        int k = static_cast<int>(std::ceil(t - 0.5));
        if (k >= order)
            k -= order;
        // Halfway between order-1 and 0: prefer 0.
        if (k == order - 1 && t - (order - 1) == 0.5)
            k = 0;
        return k;
    }

    double wrap_phase(double phase) noexcept
    {
        double w = std::fmod(phase, two_pi);
        if (w < 0.0)
            w += two_pi;
        if (w >= two_pi)
            w = 0.0;
        return w;
    }

    stc_codeword encode_pair(cplx s1, cplx s2)
    {
        require_unit(s1, "s1");
        require_unit(s2, "s2");
        stc_codeword cw;
        cw.ap_symbols = {s1, -std::conj(s2)};
        const double phi1 = wrap_phase(std::arg(s2) - std::arg(s1));
        cw.irs_phases = {phi1, wrap_phase(phi1 + pi)};
        return cw;
    }

    received_pair transmit_over_channel(const stc_codeword &cw, cplx h1, cplx g_bar_1, double p1,
                                        std::array<cplx, 2> noise)
    {
        const double amp = std::sqrt(p1);
        received_pair r;
        for (int t = 0; t < 2; ++t)
        {
            const cplx effective = h1 + g_bar_1 * std::polar(1.0, cw.irs_phases[t]);
            r.y[t] = amp * effective * cw.ap_symbols[t] + noise[t];
        }
        return r;
    }

    received_pair transmit_over_channel(const stc_codeword &cw, const channel_realization &ch,
                                        std::span<const cplx> theta_bar, double p1, std::array<cplx, 2> noise)
    {
        if (theta_bar.size() != ch.g0.size())
            throw std::invalid_argument("transmit: theta_bar length must match the channel");
        const double amp = std::sqrt(p1);
        received_pair r;
        cvec theta(theta_bar.size());
        for (int t = 0; t < 2; ++t)
        {
            const cplx common = std::polar(1.0, cw.irs_phases[t]);
            for (std::size_t n = 0; n < theta.size(); ++n)
                theta[n] = common * theta_bar[n];
            const cplx effective = ch.h1 + cascaded_gain(ch.g0, theta, ch.g1);
            r.y[t] = amp * effective * cw.ap_symbols[t] + noise[t];
        }
        return r;
    }

    matrix2 code_matrix(cplx a, cplx b) noexcept
    {
        return {{{a, b}, {std::conj(b), -std::conj(a)}}};
    }

    matrix2 gram(const matrix2 &h) noexcept
    {
        matrix2 g{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                g[i][j] = std::conj(h[0][i]) * h[0][j] + std::conj(h[1][i]) * h[1][j];
        return g;
    }

    detection combine_and_detect(const received_pair &y, cplx h1, cplx g_bar_1, double p1, double noise_power,
                                 int order)
    {
        return alamouti_combine(y, h1, g_bar_1, p1, noise_power, order);
    }

    std::string_view to_string(scheme s) noexcept
    {
        switch (s)
        {
        case scheme::proposed:
            return "proposed";
        case scheme::siso:
            return "siso";
        case scheme::dumb_irs:
            return "dumb_irs";
        case scheme::classic_alamouti:
            return "classic_alamouti";
        case scheme::irs_alamouti:
            return "irs_alamouti";
        }
        return "unknown";
    }

    scheme parse_scheme(std::string_view name)
    {
        for (auto s : {scheme::proposed, scheme::siso, scheme::dumb_irs, scheme::classic_alamouti, scheme::irs_alamouti})
            if (name == to_string(s))
                return s;
        throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
    }

    bool uses_alamouti_combining(scheme s) noexcept
    {
        return s == scheme::proposed || s == scheme::classic_alamouti || s == scheme::irs_alamouti;
    }

    benchmark_codeword encode_benchmark(scheme kind, cplx s1, cplx s2, double fixed_phase)
    {
        require_unit(s1, "s1");
        require_unit(s2, "s2");
        benchmark_codeword cw;
        cw.kind = kind;
        switch (kind)
        {
        case scheme::proposed:
        {
            // The reflected branch carries the AP symbol rotated by the common phase.
            const stc_codeword stc = encode_pair(s1, s2);
            for (int t = 0; t < 2; ++t)
            {
                cw.branch_symbols[t] = {stc.ap_symbols[t], std::polar(1.0, stc.irs_phases[t]) * stc.ap_symbols[t]};
                cw.irs_phases[t] = {stc.irs_phases[t], stc.irs_phases[t]};
            }
            break;
        }
        case scheme::siso:
            cw.branch_symbols = {{{s1, 0.0}, {s2, 0.0}}};
            break;
        case scheme::dumb_irs:
        {
            const cplx rot = std::polar(1.0, fixed_phase);
            const double phi = wrap_phase(fixed_phase);
            cw.branch_symbols = {{{s1, rot * s1}, {s2, rot * s2}}};
            cw.irs_phases = {{{phi, phi}, {phi, phi}}};
            break;
        }
        case scheme::classic_alamouti:
            cw.branch_symbols = {{{s1, s2}, {-std::conj(s2), std::conj(s1)}}};
            cw.branch_amplitude = std::sqrt(0.5);
            break;
        case scheme::irs_alamouti:
            // Each subsurface rotates the unit carrier onto its Alamouti symbol.
            cw.branch_symbols = {{{s1, s2}, {-std::conj(s2), std::conj(s1)}}};
            for (int t = 0; t < 2; ++t)
                cw.irs_phases[t] = {wrap_phase(std::arg(cw.branch_symbols[t][0])), wrap_phase(std::arg(cw.branch_symbols[t][1]))};
            break;
        }
        return cw;
    }

    received_pair transmit_benchmark(const benchmark_codeword &cw, branch_gains gains, double p1,
                                     std::array<cplx, 2> noise) noexcept
    {
        const double amp = std::sqrt(p1) * cw.branch_amplitude;
        received_pair r;
        for (int t = 0; t < 2; ++t)
            r.y[t] = amp * (gains.first * cw.branch_symbols[t][0] + gains.second * cw.branch_symbols[t][1]) + noise[t];
        return r;
    }

    detection detect_benchmark(scheme kind, const received_pair &y, branch_gains gains, double p1,
                               double noise_power, int order, double fixed_phase)
    {
        if (uses_alamouti_combining(kind))
        {
            const double share = kind == scheme::classic_alamouti ? 0.5 : 1.0;
            // Power split is folded into the effective power so the branch gains stay physical.
            return alamouti_combine(y, gains.first, gains.second, p1 * share, noise_power, order);
        }

        const cplx effective = kind == scheme::siso ? gains.first : gains.first + gains.second * std::polar(1.0, fixed_phase);
        if (!(std::norm(effective) > 0.0))
            throw std::domain_error("detect: zero channel, symbols cannot be detected");
        detection d;
        for (int t = 0; t < 2; ++t)
        {
            d.combined[t] = std::conj(effective) * y.y[t];
            d.indices[t] = psk_detect(d.combined[t], order);
        }
        d.snr = p1 * std::norm(effective) / noise_power;
        return d;
    }
}
