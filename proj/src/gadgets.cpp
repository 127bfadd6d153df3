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

#include "bdmbt/gadgets.hpp"

#include <string>
#include <unordered_set>

#include "bdmbt/errors.hpp"

namespace bdmbt {

namespace {

void require_positive(int n) {
    if (n < 1) {
        throw InvalidInput("gadget size must be at least 1, got " + std::to_string(n));
    }
}

int row_length(int n, int row) { return 2 * (n - row) + 1; }

} // namespace

std::size_t gadget_row_offset(int n, int row) {
    std::size_t offset = 0;
    for (int i = 1; i < row; ++i) {
        offset += static_cast<std::size_t>(row_length(n, i));
    }
    return offset;
}

VertexId GadgetGraph::vertex_at(int row, int col) const {
    return static_cast<VertexId>(gadget_row_offset(n, row) + static_cast<std::size_t>(col - 1));
}

std::vector<Edge> gadget_edges(int n, VertexId base) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        const auto row_start = static_cast<VertexId>(base + gadget_row_offset(n, i));
        const auto next_row_start = static_cast<VertexId>(base + gadget_row_offset(n, i + 1));
        edges.emplace_back(row_start, next_row_start);
        for (int j = 1; j < row_length(n, i); ++j) {
            edges.emplace_back(row_start + j - 1, row_start + j);
        }
    }
    return edges;
}

GadgetGraph build_a_tree(int n) {
    require_positive(n);
    GadgetGraph a;
    a.n = n;
    const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::map<VertexId, std::string> labels;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= row_length(n, i); ++j) {
            labels.emplace(static_cast<VertexId>(a.coords.size()),
                           "r:" + std::to_string(i) + ":" + std::to_string(j));
            a.coords.emplace_back(i, j);
        }
    }
    const auto edges = gadget_edges(n);
    a.graph = Graph(count, edges, std::move(labels));
    a.root = 0;
    for (int i = 1; i <= n; ++i) {
        a.leaves.push_back(a.vertex_at(i, row_length(n, i)));
    }
    return a;
}

std::vector<Call> canonical_a_calls(int m, VertexId base, int start) {
    require_positive(m);
    std::vector<Call> calls;
    for (int i = 1; i <= m; ++i) {
        const auto row_start = static_cast<VertexId>(base + gadget_row_offset(m, i));
        const int informed_at = start + 2 * (i - 1);
        const int len = row_length(m, i);
        // Along the row: (i,j) informs (i,j+1) one round after being informed.
        for (int j = 1; j < len; ++j) {
            calls.push_back(Call{informed_at + j, row_start + j - 1, row_start + j});
        }
        if (i < m) {
            const auto next_row_start = static_cast<VertexId>(base + gadget_row_offset(m, i + 1));
            calls.push_back(Call{informed_at + 2, row_start, next_row_start});
        }
    }
    return calls;
}

Schedule canonical_a_schedule(int n) {
    require_positive(n);
    return Schedule(0, 2 * n - 2, canonical_a_calls(n, 0, 0));
}

GadgetGraph build_a_tree_with_pendants(int n) {
    GadgetGraph a = build_a_tree(n);
    const auto base = static_cast<VertexId>(a.graph.vertex_count());
    auto edges = a.graph.edges();
    auto labels = a.graph.labels();
    for (int i = 1; i <= n; ++i) {
        const auto pendant = static_cast<VertexId>(base + i - 1);
        edges.emplace_back(a.leaves[static_cast<std::size_t>(i - 1)], pendant);
        labels.emplace(pendant, "p:" + std::to_string(i));
    }
    a.graph = Graph(base + static_cast<std::size_t>(n), edges, std::move(labels));
    return a;
}

bool check_lemma2(int n, int max_n) {
    require_positive(n);
    if (n > max_n) {
        throw InvalidInput("lemma 2 check is capped at n = " + std::to_string(max_n));
    }
    const GadgetGraph a = build_a_tree_with_pendants(n);
    const auto core = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    const int relay_round = 2 * n - 1;

    auto calls = canonical_a_schedule(n).calls();
    for (int i = 1; i <= n; ++i) {
        calls.push_back(Call{relay_round, a.leaves[static_cast<std::size_t>(i - 1)],
                             static_cast<VertexId>(core + static_cast<std::size_t>(i - 1))});
    }
    const auto report = verify_schedule(a.graph, Schedule(a.root, relay_round, std::move(calls)));
    if (!report.valid) {
        return false;
    }
    for (std::size_t v = 0; v < a.graph.vertex_count(); ++v) {
        const int t = *report.informed_time[v];
        if (v < core ? t > 2 * n - 2 : t != relay_round) {
            return false;
        }
    }
    return true;
}

namespace {

using Mask = std::uint64_t;

void all_matching_successors(const Graph &g, Mask informed, VertexId caller, Mask claimed,
                             std::unordered_set<Mask> &out) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    while (caller < n && !((informed >> caller) & 1U)) {
        ++caller;
    }
    if (caller == n) {
        out.insert(informed | claimed);
        return;
    }
    all_matching_successors(g, informed, caller + 1, claimed, out);
    for (VertexId w : g.neighbors(caller)) {
        const Mask bit = Mask{1} << w;
        if (!(informed & bit) && !(claimed & bit)) {
            all_matching_successors(g, informed, caller + 1, claimed | bit, out);
        }
    }
}

} // namespace

Lemma3Report check_lemma3_report(int n) {
    if (n < 2 || n > 3) {
        throw InvalidInput("lemma 3 check supports n in {2, 3} only (A_n needs n > 1)");
    }
    const GadgetGraph a = build_a_tree_with_pendants(n);
    const Graph &g = a.graph;
    const auto core = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    const Mask core_mask = (Mask{1} << core) - 1;
    const Mask pendant_mask = ((Mask{1} << g.vertex_count()) - 1) & ~core_mask;

    // Idle rounds are legal, so the sets reachable within t rounds only grow;
    // each round expands only the sets first seen in the previous one.
    std::unordered_set<Mask> reachable{Mask{1} << a.root};
    std::vector<Mask> fresh{Mask{1} << a.root};
    for (int round = 1; round <= 2 * n - 2; ++round) {
        std::unordered_set<Mask> successors;
        for (Mask s : fresh) {
            all_matching_successors(g, s, 0, 0, successors);
        }
        fresh.clear();
        for (Mask s : successors) {
            if (reachable.insert(s).second) {
                fresh.push_back(s);
            }
        }
    }

    Lemma3Report report;
    report.states_at_deadline = reachable.size();
    for (Mask s : reachable) {
        if ((s & pendant_mask) == 0) {
            continue;
        }
        ++report.early_exits;
        if ((s & core_mask) == core_mask) {
            ++report.counterexamples;
        }
    }
    report.holds = report.counterexamples == 0;
    return report;
}

bool check_lemma3(int n) { return check_lemma3_report(n).holds; }

} // namespace bdmbt
