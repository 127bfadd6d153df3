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

// Graph generators used by the property tests and the acceptance suite.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bdmbt/graph.hpp"
#include "bdmbt/reduction.hpp"

namespace bdmbt::testing {

/// Uniform random recursive tree plus each other pair with probability p.
inline Graph random_connected_graph(std::mt19937_64 &rng, std::size_t n, double p) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) {
        edges.emplace_back(std::uniform_int_distribution<VertexId>(0, v - 1)(rng), v);
    }
    std::bernoulli_distribution extra(p);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (extra(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

/// Random labelled tree: each vertex in a shuffled order hangs off an earlier one.
inline Graph random_tree(std::mt19937_64 &rng, std::size_t n) {
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) {
        order[v] = v;
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        const auto parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        edges.emplace_back(order[parent], order[i]);
    }
    return Graph(n, edges);
}

/// Calls `visit` on every connected labelled graph on n vertices.
inline void for_each_connected_graph(std::size_t n, const std::function<void(const Graph &)> &visit) {
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) {
                edges.push_back(pairs[i]);
            }
        }
        Graph g(n, edges);
        if (is_connected(g)) {
            visit(g);
        }
    }
}

/// Random formula with clause sizes 1..3 over n variables.
inline CnfFormula random_formula(std::mt19937_64 &rng, int n, int m) {
    std::vector<std::vector<Literal>> clauses;
    for (int j = 0; j < m; ++j) {
        const int size = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Literal> clause;
        for (int t = 0; t < size; ++t) {
            const int var = std::uniform_int_distribution<int>(1, n)(rng);
            clause.push_back(std::bernoulli_distribution(0.5)(rng) ? var : -var);
        }
        clauses.push_back(std::move(clause));
    }
    return CnfFormula(n, std::move(clauses));
}

/// Satisfiable fixtures with n <= 3, m <= 3 and clause sizes 1..3.
inline std::vector<CnfFormula> satisfiable_fixtures() {
    return {
        CnfFormula(1, {{1}}),
        CnfFormula(1, {{-1}}),
        CnfFormula(2, {{1, -2}}),
        CnfFormula(2, {{1, 2}, {-1}}),
        CnfFormula(3, {{1, 2, 3}, {-1, -2, -3}}),
        CnfFormula(3, {{1, -2}, {2, 3}, {-1, -3}}),
        CnfFormula(3, {{1, 2, 3}, {-1, 2}, {-3}}),
        CnfFormula(2, {{1, -1}, {2}}),
        CnfFormula(3, {{-1, -2, 3}, {1}, {2, -3, 1}}),
    };
}

} // namespace bdmbt::testing
