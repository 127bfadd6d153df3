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

#include "bdmbt/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bdmbt/errors.hpp"
#include "search.hpp"

namespace bdmbt {

namespace {

void require_source(const Graph &g, VertexId source) {
    if (source >= g.vertex_count()) {
        throw InvalidInput("source " + std::to_string(source) + " is not a vertex");
    }
}

void require_connected(const Graph &g) {
    if (g.vertex_count() == 0 || !is_connected(g)) {
        throw InvalidInput("graph must be non-empty and connected");
    }
}

int thread_count(const SolveOptions &options) {
#ifdef _OPENMP
    return options.threads > 0 ? options.threads : omp_get_max_threads();
#else
    (void)options;
    return 1;
#endif
}

Schedule make_witness(VertexId source, int finish_round, std::vector<Call> calls) {
    return Schedule(source, finish_round, std::move(calls));
}

detail::SearchState root_state(const Graph &g, VertexId source) {
    detail::SearchState root{detail::VertexSet(g.vertex_count()), 0, {}};
    root.informed.set(source);
    return root;
}

// Cases settled without search: below the lower bound, or within reach of the
// greedy schedule. Empty when a real search is needed.
std::optional<Decision> settle_cheaply(const Graph &g, VertexId source, int k) {
    if (k < 0) {
        throw InvalidInput("k must be non-negative");
    }
    require_source(g, source);
    require_connected(g);
    if (k < lower_bound(g, source)) {
        return Decision{false, std::nullopt, 0};
    }
    Schedule greedy = greedy_schedule(g, source);
    if (greedy.horizon() <= k) {
        return Decision{true, std::move(greedy), 0};
    }
    return std::nullopt;
}

Decision search_serial(const Graph &g, VertexId source, int k, std::atomic<std::uint64_t> &nodes,
                       std::uint64_t budget) {
    detail::Searcher searcher(g, k, nodes, budget);
    if (searcher.run(root_state(g, source))) {
        return Decision{true, make_witness(source, searcher.finish_round(), searcher.witness()), 0};
    }
    return Decision{false, std::nullopt, 0};
}

Decision search_parallel(const Graph &g, VertexId source, int k, std::atomic<std::uint64_t> &nodes,
                         std::uint64_t budget, int threads) {
    if (threads <= 1) {
        return search_serial(g, source, k, nodes, budget);
    }
    const auto tasks = detail::split_frontier(g, root_state(g, source), k, static_cast<std::size_t>(threads) * 8,
                                              nodes, budget);
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> first_success{none};
    std::vector<std::optional<Decision>> found(tasks.size());
    // Lowest task index whose search threw; later indices may be cancelled.
    std::vector<std::exception_ptr> errors(tasks.size());

    const long task_count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long t = 0; t < task_count; ++t) {
        const auto idx = static_cast<std::size_t>(t);
        if (first_success.load() < idx) {
            continue;
        }
        try {
            detail::Searcher searcher(g, k, nodes, budget, [&first_success, idx] { return first_success.load() < idx; });
            if (searcher.run(tasks[idx])) {
                found[idx] = Decision{true, make_witness(source, searcher.finish_round(), searcher.witness()), 0};
                std::size_t current = first_success.load();
                while (idx < current && !first_success.compare_exchange_weak(current, idx)) {
                }
            }
        } catch (const detail::SearchCancelled &) {
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }

    // The verdict is settled only by tasks ordered before the first success.
    const std::size_t settled = std::min(first_success.load(), tasks.size());
    for (std::size_t i = 0; i < settled; ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
    }
    if (settled < tasks.size()) {
        return std::move(*found[settled]);
    }
    return Decision{false, std::nullopt, 0};
}

using SearchFn = Decision (*)(const Graph &, VertexId, int, std::atomic<std::uint64_t> &, std::uint64_t, int);

Decision serial_adapter(const Graph &g, VertexId source, int k, std::atomic<std::uint64_t> &nodes,
                        std::uint64_t budget, int) {
    return search_serial(g, source, k, nodes, budget);
}

Decision decide_with(SearchFn fn, const Graph &g, VertexId source, int k, const SolveOptions &options) {
    if (auto cheap = settle_cheaply(g, source, k)) {
        return std::move(*cheap);
    }
    std::atomic<std::uint64_t> nodes{0};
    Decision d = fn(g, source, k, nodes, options.node_budget, thread_count(options));
    d.nodes_explored = nodes.load();
    return d;
}

SolveResult exact_with(SearchFn fn, const Graph &g, VertexId source, const SolveOptions &options) {
    require_source(g, source);
    require_connected(g);
    const int lb = lower_bound(g, source);
    Schedule greedy = greedy_schedule(g, source);
    std::atomic<std::uint64_t> nodes{0};
    const int threads = thread_count(options);
    for (int k = lb; k < greedy.horizon(); ++k) {
        Decision d = fn(g, source, k, nodes, options.node_budget, threads);
        if (d.feasible) {
            return SolveResult{d.witness->horizon(), std::move(*d.witness), nodes.load()};
        }
    }
    const int best = greedy.horizon();
    return SolveResult{best, std::move(greedy), nodes.load()};
}

} // namespace

int lower_bound(const Graph &g, VertexId source) {
    require_source(g, source);
    require_connected(g);
    int log2_ceil = 0;
    while ((std::size_t{1} << log2_ceil) < g.vertex_count()) {
        ++log2_ceil;
    }
    return std::max(eccentricity(g, source), log2_ceil);
}

Decision decide_bdmbt(const Graph &g, VertexId source, int k, const SolveOptions &options) {
    return decide_with(&search_parallel, g, source, k, options);
}

Decision decide_bdmbt_serial(const Graph &g, VertexId source, int k, const SolveOptions &options) {
    return decide_with(&serial_adapter, g, source, k, options);
}

SolveResult broadcast_time_exact(const Graph &g, VertexId source, const SolveOptions &options) {
    return exact_with(&search_parallel, g, source, options);
}

SolveResult broadcast_time_exact_serial(const Graph &g, VertexId source, const SolveOptions &options) {
    return exact_with(&serial_adapter, g, source, options);
}

int broadcast_time_graph_serial(const Graph &g, const SolveOptions &options) {
    require_connected(g);
    int best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        best = std::max(best, broadcast_time_exact_serial(g, v, options).broadcast_time);
    }
    return best;
}

int broadcast_time_graph(const Graph &g, const SolveOptions &options) {
    require_connected(g);
    const long n = static_cast<long>(g.vertex_count());
    std::vector<int> per_source(g.vertex_count(), 0);
    std::vector<std::exception_ptr> errors(g.vertex_count());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(options))
    for (long v = 0; v < n; ++v) {
        try {
            per_source[static_cast<std::size_t>(v)] =
                broadcast_time_exact_serial(g, static_cast<VertexId>(v), options).broadcast_time;
        } catch (...) {
            errors[static_cast<std::size_t>(v)] = std::current_exception();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return *std::max_element(per_source.begin(), per_source.end());
}

std::optional<int> path_cycle_closed_form(const Graph &g) {
    const std::size_t n = g.vertex_count();
    if (n == 0 || max_degree(g) > 2 || !is_connected(g)) {
        return std::nullopt;
    }
    if (g.edge_count() + 1 == n) {
        return static_cast<int>(n - 1);
    }
    if (g.edge_count() == n) {
        return static_cast<int>((n + 1) / 2);
    }
    return std::nullopt;
}

} // namespace bdmbt
