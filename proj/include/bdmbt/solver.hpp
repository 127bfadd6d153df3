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

#pragma once

#include <cstdint>
#include <optional>

#include "bdmbt/graph.hpp"
#include "bdmbt/schedule.hpp"

namespace bdmbt {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SolveOptions {
    /// Search-node expansions allowed for one top-level call; exceeding it
    /// throws BudgetExceeded.
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// OpenMP threads for the parallel kernels; 0 keeps the runtime default.
    int threads = 0;
};

struct SolveResult {
    int broadcast_time = 0;
    Schedule witness;
    std::uint64_t nodes_explored = 0;
};

struct Decision {
    bool feasible = false;
    /// Present iff feasible; verifies with deadline k.
    std::optional<Schedule> witness;
    std::uint64_t nodes_explored = 0;
};

/// max(eccentricity(source), ceil(log2 |V|)). Throws InvalidInput on a disconnected graph.
int lower_bound(const Graph &g, VertexId source);

/// Is b(source) <= k? Search is split across OpenMP threads; the verdict and
/// the returned witness match decide_bdmbt_serial for the same inputs.
Decision decide_bdmbt(const Graph &g, VertexId source, int k, const SolveOptions &options = {});

/// Single-threaded reference for decide_bdmbt.
Decision decide_bdmbt_serial(const Graph &g, VertexId source, int k, const SolveOptions &options = {});

/// b(source) by iterative deepening from lower_bound up to the greedy upper bound.
SolveResult broadcast_time_exact(const Graph &g, VertexId source, const SolveOptions &options = {});
SolveResult broadcast_time_exact_serial(const Graph &g, VertexId source, const SolveOptions &options = {});

/// b(G) = max over sources; sources are solved in parallel.
int broadcast_time_graph(const Graph &g, const SolveOptions &options = {});
int broadcast_time_graph_serial(const Graph &g, const SolveOptions &options = {});

/// Polynomial rule for trees: a vertex whose child subtrees need b_1 >= b_2 >= ...
/// rounds finishes in max_i (i + b_i). Throws InvalidInput if g is not a tree.
int tree_broadcast_time(const Graph &g, VertexId source);

/// b(G) for paths (|G| - 1) and cycles (ceil(|G| / 2)); nullopt for anything else.
///
/// Odd cycles need ceil rather than floor: C_5 from any vertex takes 3 rounds.
std::optional<int> path_cycle_closed_form(const Graph &g);

/// Round-by-round greedy matching, most urgent boundary vertex first. Always
/// valid; never better than the optimum.
Schedule greedy_schedule(const Graph &g, VertexId source);

inline constexpr std::size_t kBruteForceMaxVertices = 20;

/// Reference oracle: breadth-first over informed sets, expanding every
/// matching in every round. No bounds, no pruning.
int brute_force_broadcast_time(const Graph &g, VertexId source);

} // namespace bdmbt
