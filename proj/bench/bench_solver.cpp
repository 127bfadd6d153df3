/*
Copyright 2026 The bdmbt Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Serial reference vs OpenMP kernels on the same inputs.

#include <random>

#include <benchmark/benchmark.h>

#include "bdmbt/gadgets.hpp"
#include "bdmbt/reduction.hpp"
#include "bdmbt/solver.hpp"

using namespace bdmbt;

namespace {

// Unsatisfiable 2-variable formula; deciding one round below the target forces a full search.
const Reduction &xor_reduction() {
    static const Reduction r = build_reduction(CnfFormula(2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}));
    return r;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<VertexId>(rng() % v), v); // spanning tree keeps it connected
        for (VertexId u = 0; u < v; ++u) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

SolveOptions with_threads(const benchmark::State &state) {
    SolveOptions o;
    o.threads = static_cast<int>(state.range(0));
    return o;
}

void BM_DecideSerial(benchmark::State &state) {
    const auto &r = xor_reduction();
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide_bdmbt_serial(r.graph, r.map.root(), 9));
    }
}

void BM_DecideParallel(benchmark::State &state) {
    const auto &r = xor_reduction();
    const auto options = with_threads(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide_bdmbt(r.graph, r.map.root(), 9, options));
    }
}

void BM_ExactSerial(benchmark::State &state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.15, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(broadcast_time_exact_serial(g, 0));
    }
}

void BM_ExactParallel(benchmark::State &state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.15, 7);
    SolveOptions o;
    o.threads = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(broadcast_time_exact(g, 0, o));
    }
}

void BM_GraphTimeSerial(benchmark::State &state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.2, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(broadcast_time_graph_serial(g));
    }
}

void BM_GraphTimeParallel(benchmark::State &state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.2, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(broadcast_time_graph(g));
    }
}

} // namespace

BENCHMARK(BM_DecideSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DecideParallel)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExactSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExactParallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GraphTimeSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GraphTimeParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
