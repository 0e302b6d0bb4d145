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

#include "irsdiv/analytics.hpp"
#include "irsdiv/beamforming.hpp"
#include "irsdiv/channel.hpp"
#include "irsdiv/quadrature.hpp"
#include "irsdiv/random.hpp"
#include "irsdiv/simkit.hpp"

#include <benchmark/benchmark.h>

using namespace irsdiv;

static void BM_philox_complex_normal(benchmark::State &state)
{
    random_stream rng(1, {1, 0, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(rng.complex_normal(1.0));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_philox_complex_normal);

static void BM_simulate_batch(benchmark::State &state)
{
    const auto kind = static_cast<scheme>(state.range(0));
    const sim::link_statistics st = sim::make_link_statistics(default_scenario());
    random_stream rng(1, {2, 0, 0});
    const std::uint64_t pairs = 4096;
    for (auto _ : state)
        benchmark::DoNotOptimize(sim::simulate_batch(st, kind, sim::csi_mode::perfect, rng, pairs));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pairs));
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_simulate_batch)->DenseRange(0, 4);

static void BM_ser_quadrature(benchmark::State &state)
{
    const link_budget b = make_link_budget(default_scenario());
    for (auto _ : state)
        benchmark::DoNotOptimize(ser_mpsk(b, 8));
}
BENCHMARK(BM_ser_quadrature);

static void BM_gauss_legendre(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(gauss_legendre(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_gauss_legendre)->Arg(256)->Arg(4096);

static void BM_avg_reflected_gain_sum(benchmark::State &state)
{
    const scenario s = default_scenario(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(avg_reflected_gain_numeric(s.geometry, s.params));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * s.geometry.size()));
}
BENCHMARK(BM_avg_reflected_gain_sum)->Arg(105)->Arg(1005);

static void BM_pbf_exact(benchmark::State &state)
{
    const scenario s = default_scenario(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pbf_exact(s.geometry, s.params));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * s.geometry.size()));
}
BENCHMARK(BM_pbf_exact)->Arg(100)->Arg(1000);

static void BM_grouped_beamforming(benchmark::State &state)
{
    const scenario s = default_scenario(100);
    const cvec gbar = cascaded_vector(los_vector_g0(s.geometry, s.params), los_vector_g2(s.geometry, s.params));
    for (auto _ : state)
        benchmark::DoNotOptimize(beamforming_gain(gbar, grouped_theta(s.geometry, gbar, 10)));
}
BENCHMARK(BM_grouped_beamforming);

BENCHMARK_MAIN();
