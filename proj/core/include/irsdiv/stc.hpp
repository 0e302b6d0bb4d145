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

#ifndef IRSDIV_STC_HPP
#define IRSDIV_STC_HPP

#include "irsdiv/channel.hpp"
#include "irsdiv/types.hpp"

#include <array>
#include <span>
#include <string_view>

namespace irsdiv
{
    // e^{j 2 pi index / order}. Throws std::out_of_range unless 0 <= index < order.
    cplx psk_modulate(int index, int order);

    // Nearest M-PSK point to y by angle. Ties go to the lower index; y == 0 maps to index 0.
    int psk_detect(cplx y, int order) noexcept;

    // Wraps an angle into [0, 2 pi).
    double wrap_phase(double phase) noexcept;

    // One symbol pair encoded for the AP antenna and the IRS common phase.
    //  period 1: AP sends s1,    IRS common phase phi1 = arg s2 - arg s1
    //  period 2: AP sends -s2^*, IRS common phase phi2 = phi1 + pi
    struct stc_codeword
    {
        std::array<cplx, 2> ap_symbols{};
        std::array<double, 2> irs_phases{}; // wrapped into [0, 2 pi)
    };

    // Throws std::invalid_argument unless |s1| = |s2| = 1.
    stc_codeword encode_pair(cplx s1, cplx s2);

    struct received_pair
    {
        std::array<cplx, 2> y{};
    };

    // y1 = sqrt(P1)(h1 + g_bar_1 e^{j phi1}) s1 + n1 and y2 = sqrt(P1)(h1 + g_bar_1 e^{j phi2})(-s2^*) + n2.
    received_pair transmit_over_channel(const stc_codeword &cw, cplx h1, cplx g_bar_1, double p1,
                                        std::array<cplx, 2> noise);

    // Same received pair computed element by element through g0^T diag(e^{j phi_i} theta_bar) g1.
    received_pair transmit_over_channel(const stc_codeword &cw, const channel_realization &ch,
                                        std::span<const cplx> theta_bar, double p1, std::array<cplx, 2> noise);

    using matrix2 = std::array<std::array<cplx, 2>, 2>;

    // Equivalent channel matrix acting on [s1, s2] for the observation [y1, y2^*]:
    //   [ a    b   ]
    //   [ b^* -a^* ]
    matrix2 code_matrix(cplx a, cplx b) noexcept;

    // H^H H
    matrix2 gram(const matrix2 &h) noexcept;

    struct detection
    {
        std::array<int, 2> indices{};
        std::array<cplx, 2> combined{};
        double snr = 0.0; // post-combining SNR
    };

    // Orthogonal combining y_bar = H^H [y1, y2^*] followed by per-symbol nearest-PSK decisions.
    // Throws std::domain_error if |h1|^2 + |g_bar_1|^2 == 0.
    detection combine_and_detect(const received_pair &y, cplx h1, cplx g_bar_1, double p1, double noise_power,
                                 int order);

    // ---- Benchmark transmission schemes ------------------------------------------------------

    enum class scheme
    {
        proposed,         // AP antenna + IRS common-phase space-time code
        siso,             // AP antenna only, no IRS
        dumb_irs,         // AP antenna + IRS with a fixed common phase for the whole packet
        classic_alamouti, // two active AP antennas, power split equally
        irs_alamouti      // unmodulated carrier, two IRS subsurfaces emulate the two antennas
    };

    std::string_view to_string(scheme s) noexcept;
    scheme parse_scheme(std::string_view name);
    bool uses_alamouti_combining(scheme s) noexcept;

    // The two propagation branches a scheme transmits over. Meaning per scheme:
    //  proposed:         (h1, g_bar_1)
    //  siso:             (h1, unused)
    //  dumb_irs:         (h1, g_bar_1)
    //  classic_alamouti: (h_antenna1, h_antenna2)
    //  irs_alamouti:     (g_subsurface1, g_subsurface2)
    struct branch_gains
    {
        cplx first{};
        cplx second{};
    };

    // What each branch carries over the two symbol periods, plus the IRS phase settings.
    struct benchmark_codeword
    {
        scheme kind = scheme::proposed;
        std::array<std::array<cplx, 2>, 2> branch_symbols{}; // [period][branch]
        double branch_amplitude = 1.0;                       // sqrt of the per-branch power share
        std::array<std::array<double, 2>, 2> irs_phases{};   // [period][subsurface]
    };

    // fixed_phase is the packet-wide IRS common phase used by dumb_irs and ignored otherwise.
    benchmark_codeword encode_benchmark(scheme kind, cplx s1, cplx s2, double fixed_phase = 0.0);

    received_pair transmit_benchmark(const benchmark_codeword &cw, branch_gains gains, double p1,
                                     std::array<cplx, 2> noise) noexcept;

    // Coherent detection with known branch gains (and the fixed phase for dumb_irs).
    detection detect_benchmark(scheme kind, const received_pair &y, branch_gains gains, double p1,
                               double noise_power, int order, double fixed_phase = 0.0);
}

#endif
