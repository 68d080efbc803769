// Copyright 2026 The mumeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "mumeb/family_io.hpp"
#include "mumeb/search.hpp"
#include "mumeb/verify.hpp"
#include "mumeb/weyl.hpp"

using namespace mumeb;

static void BM_make_ring(benchmark::State &state) {
    const auto d = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_ring(ring_spec_for(d, RingChoice::Fields)));
    }
}
BENCHMARK(BM_make_ring)->Arg(9)->Arg(27)->Arg(81)->Arg(125);

static void BM_build_family(benchmark::State &state) {
    const auto d = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_family(d, RingChoice::Fields));
    }
}
BENCHMARK(BM_build_family)->Arg(9)->Arg(15)->Arg(25)->Arg(27)->Unit(benchmark::kMillisecond);

static void BM_check_pair_unbiased(benchmark::State &state) {
    const auto d = static_cast<std::uint64_t>(state.range(0));
    Family fam = build_family(d, RingChoice::Fields);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_pair_unbiased(fam.bases[0], fam.bases[1]));
    }
    state.counters["inner_products"] = static_cast<double>(d * d * d * d);
}
BENCHMARK(BM_check_pair_unbiased)->Arg(9)->Arg(15)->Arg(25)->Arg(27)->Unit(benchmark::kMillisecond);

static void BM_exact_pairs(benchmark::State &state) {
    const auto d = static_cast<std::uint64_t>(state.range(0));
    Family fam = build_family(d, RingChoice::Fields);
    for (auto _ : state) {
        for (std::size_t i = 0; i < fam.set.size(); ++i) {
            for (std::size_t j = i + 1; j < fam.set.size(); ++j) {
                benchmark::DoNotOptimize(exact_pair_criterion(fam.ring, fam.set[i], fam.set[j]));
            }
        }
    }
}
BENCHMARK(BM_exact_pairs)->Arg(9)->Arg(27)->Arg(81)->Unit(benchmark::kMicrosecond);

static void BM_max_clique(benchmark::State &state) {
    const auto d = static_cast<std::uint64_t>(state.range(0));
    const auto choice = state.range(1) ? RingChoice::Zd : RingChoice::Fields;
    DifferenceGraph g = difference_graph(make_ring(ring_spec_for(d, choice)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_clique_indices(g));
    }
}
BENCHMARK(BM_max_clique)->Args({27, 0})->Args({27, 1})->Args({45, 0})->Args({63, 1})->Args({105, 0});

static void BM_serialize_round_trip(benchmark::State &state) {
    Family fam = build_family(static_cast<std::uint64_t>(state.range(0)), RingChoice::Fields);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_family(serialize_family(fam)));
    }
}
BENCHMARK(BM_serialize_round_trip)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
