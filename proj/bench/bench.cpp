/*
 * Copyright 2026 The rtgames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial vs OpenMP timings for the brute-force solver and for a corpus
// check driven by first_failure.

#include "rtg/membership.hpp"
#include "rtg/oracles.hpp"
#include "rtg/parallel.hpp"
#include "rtg/random.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace rtg;

ParityGame game_with_positions(std::int64_t n)
{
    for (std::uint64_t seed = 1;; ++seed) {
        auto g = random_parity_game(seed, static_cast<int>(n), 4);
        if (static_cast<std::int64_t>(g.size()) == n) return g;
    }
}

void BM_BruteforceSerial(benchmark::State& state)
{
    const auto g = game_with_positions(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_bruteforce(g));
}

void BM_BruteforceParallel(benchmark::State& state)
{
    const auto g = game_with_positions(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_bruteforce_parallel(g));
}

std::vector<RegularTree> corpus()
{
    std::vector<RegularTree> trees;
    for (std::uint64_t i = 0; i < 300; ++i) trees.push_back(random_spine_fixture(i, 1, 3, 5));
    return trees;
}

bool l1_case(const MullerTreeAutomaton& a, const RegularTree& t)
{
    return member_nondet(a, t) == oracle_L1(t);
}

void BM_CorpusSerial(benchmark::State& state)
{
    const auto a = build_L1_muller();
    const auto trees = corpus();
    const auto n = static_cast<std::int64_t>(trees.size());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            first_failure_serial(n, [&](std::int64_t i) { return l1_case(a, trees[static_cast<std::size_t>(i)]); }));
}

void BM_CorpusParallel(benchmark::State& state)
{
    const auto a = build_L1_muller();
    const auto trees = corpus();
    const auto n = static_cast<std::int64_t>(trees.size());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            first_failure_parallel(n, [&](std::int64_t i) { return l1_case(a, trees[static_cast<std::size_t>(i)]); }));
}

} // namespace

BENCHMARK(BM_BruteforceSerial)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteforceParallel)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
