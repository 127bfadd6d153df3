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

// Depth-first decision search shared by the serial and OpenMP drivers.

#include <atomic>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "bdmbt/graph.hpp"
#include "bdmbt/schedule.hpp"
#include "vertex_set.hpp"

namespace bdmbt::detail {

/// One round's calls: (caller, callee) pairs forming a matching between the
/// informed set and its uninformed neighbours.
using Move = std::vector<std::pair<VertexId, VertexId>>;

/// Enumerates every distinct maximum-size callee set of one round.
///
/// The callee sets that some matching can serve form a transversal matroid,
/// and informing a superset never slows the rest of the broadcast, so only
/// the bases need exploring. Bases come out in a fixed order: boundary
/// vertices with the deepest uninformed region behind them are tried first.
std::vector<Move> enumerate_moves(const Graph &g, const VertexSet &informed, const std::vector<int> &dist);

struct SearchState {
    VertexSet informed;
    int round = 0;
    std::vector<Call> calls;
};

/// Raised inside a worker when another worker has already settled the answer.
struct SearchCancelled {};

class Searcher {
  public:
    static constexpr std::size_t kMemoCap = std::size_t{1} << 22;

    /// `nodes` is shared between cooperating searchers; `cancelled` is polled
    /// once per node and may be empty.
    Searcher(const Graph &g, int deadline, std::atomic<std::uint64_t> &nodes, std::uint64_t budget,
             std::function<bool()> cancelled = {});

    /// True when `start` can finish by the deadline; the completing calls are
    /// then appended to start.calls and available through witness().
    bool run(const SearchState &start);

    const std::vector<Call> &witness() const { return calls_; }
    int finish_round() const { return finish_round_; }

    /// Cheap necessary conditions. Returns false when `informed` provably
    /// cannot finish within `remaining` rounds; on true, `dist` holds hop
    /// distances from the informed set.
    static bool feasible(const Graph &g, const VertexSet &informed, int remaining, std::vector<int> &dist);

  private:
    bool search(VertexSet &informed, int round);

    const Graph &g_;
    int deadline_;
    std::atomic<std::uint64_t> &nodes_;
    std::uint64_t budget_;
    std::function<bool()> cancelled_;
    std::unordered_map<VertexSet, int, VertexSetHash> memo_;
    std::vector<Call> calls_;
    int finish_round_ = 0;
};

/// Expands the search tree breadth-first from `root` until at least
/// `min_tasks` open states exist or the states run out. States that are
/// already complete are returned as well; infeasible ones are dropped.
std::vector<SearchState> split_frontier(const Graph &g, const SearchState &root, int deadline, std::size_t min_tasks,
                                        std::atomic<std::uint64_t> &nodes, std::uint64_t budget);

} // namespace bdmbt::detail
