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

#include <algorithm>

#include "bdmbt/errors.hpp"
#include "bdmbt/solver.hpp"

namespace bdmbt {

namespace {

// Longest shortest path from `start` inside the uninformed region.
int reach_into_uninformed(const Graph &g, VertexId start, const std::vector<bool> &informed,
                          std::vector<int> &dist, std::vector<VertexId> &queue) {
    queue.clear();
    queue.push_back(start);
    dist[start] = 0;
    int reach = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        for (VertexId w : g.neighbors(u)) {
            if (!informed[w] && dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                reach = std::max(reach, dist[w]);
                queue.push_back(w);
            }
        }
    }
    for (VertexId v : queue) {
        dist[v] = kUnreachable;
    }
    return reach;
}

} // namespace

Schedule greedy_schedule(const Graph &g, VertexId source) {
    const std::size_t n = g.vertex_count();
    if (source >= n) {
        throw InvalidInput("source " + std::to_string(source) + " is not a vertex");
    }
    if (!is_connected(g)) {
        throw InvalidInput("graph must be connected");
    }

    std::vector<bool> informed(n, false);
    informed[source] = true;
    std::size_t informed_count = 1;
    std::vector<Call> calls;
    std::vector<int> dist(n, kUnreachable);
    std::vector<VertexId> queue;
    int round = 0;

    while (informed_count < n) {
        ++round;
        std::vector<std::pair<int, VertexId>> boundary;
        for (VertexId v = 0; v < n; ++v) {
            if (informed[v]) {
                continue;
            }
            const auto nbrs = g.neighbors(v);
            if (std::any_of(nbrs.begin(), nbrs.end(), [&](VertexId w) { return informed[w]; })) {
                boundary.emplace_back(-reach_into_uninformed(g, v, informed, dist, queue), v);
            }
        }
        std::sort(boundary.begin(), boundary.end());

        // Callers with fewer uninformed options are used first so that
        // versatile callers stay free for later boundary vertices.
        std::vector<int> options(n, 0);
        for (const auto &[urgency, v] : boundary) {
            for (VertexId w : g.neighbors(v)) {
                if (informed[w]) {
                    ++options[w];
                }
            }
        }
        std::vector<bool> busy(n, false);
        std::vector<VertexId> reached;
        for (const auto &[urgency, v] : boundary) {
            std::optional<VertexId> pick;
            for (VertexId w : g.neighbors(v)) {
                if (!informed[w] || busy[w]) {
                    continue;
                }
                if (!pick || options[w] < options[*pick]) {
                    pick = w;
                }
            }
            for (VertexId w : g.neighbors(v)) {
                if (informed[w]) {
                    --options[w];
                }
            }
            if (pick) {
                busy[*pick] = true;
                calls.push_back(Call{round, *pick, v});
                reached.push_back(v);
            }
        }
        for (VertexId v : reached) {
            informed[v] = true;
        }
        informed_count += reached.size();
    }
    return Schedule(source, round, std::move(calls));
}

} // namespace bdmbt
