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

#include <set>

#include "bdmbt/errors.hpp"
#include "bdmbt/gadgets.hpp"
#include "bdmbt/solver.hpp"
#include "doctest.h"

using namespace bdmbt;

TEST_CASE("build_a_tree: examples") {
    SUBCASE("n=1 degenerates to one vertex") {
        const auto a = build_a_tree(1);
        CHECK(a.graph.vertex_count() == 1);
        CHECK(a.root == 0);
        CHECK(a.leaves == std::vector<VertexId>{0});
    }
    SUBCASE("n=2") {
        const auto a = build_a_tree(2);
        CHECK(a.coords == std::vector<GridCoord>{{1, 1}, {1, 2}, {1, 3}, {2, 1}});
        const auto id = [&](int i, int j) { return a.vertex_at(i, j); };
        CHECK(a.graph.edges() == std::vector<Edge>{{id(1, 1), id(1, 2)}, {id(1, 1), id(2, 1)}, {id(1, 2), id(1, 3)}});
        CHECK(a.leaves == std::vector<VertexId>{id(1, 3), id(2, 1)});
    }
    SUBCASE("n=3") {
        const auto a = build_a_tree(3);
        CHECK(a.graph.vertex_count() == 9);
        CHECK(max_degree(a.graph) == 3);
    }
    CHECK_THROWS_AS(build_a_tree(0), InvalidInput);
}

TEST_CASE("build_a_tree: structure for n = 1..12") {
    for (int n = 1; n <= 12; ++n) {
        const auto a = build_a_tree(n);
        const auto nn = static_cast<std::size_t>(n * n);
        CHECK(a.graph.vertex_count() == nn);
        CHECK(a.graph.edge_count() == nn - 1);
        CHECK(is_tree(a.graph));
        CHECK(max_degree(a.graph) <= 3);

        // Vertex set is exactly {(i,j) | 1 <= j <= 2(n-i)+1}.
        std::set<GridCoord> expected;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= 2 * (n - i) + 1; ++j) {
                expected.emplace(i, j);
            }
        }
        CHECK(std::set<GridCoord>(a.coords.begin(), a.coords.end()) == expected);

        // Edge set is exactly spine plus row paths.
        std::set<Edge> edges;
        for (int i = 1; i < n; ++i) {
            edges.insert(std::minmax(a.vertex_at(i, 1), a.vertex_at(i + 1, 1)));
            for (int j = 1; j <= 2 * (n - i); ++j) {
                edges.insert(std::minmax(a.vertex_at(i, j), a.vertex_at(i, j + 1)));
            }
        }
        const auto actual = a.graph.edges();
        CHECK(std::set<Edge>(actual.begin(), actual.end()) == edges);

        CHECK(a.coords[a.root] == GridCoord{1, 1});
        for (int i = 1; i <= n; ++i) {
            CHECK(a.coords[a.leaves[static_cast<std::size_t>(i - 1)]] == GridCoord{i, 2 * n - 2 * i + 1});
        }
        CHECK(a.graph.label(a.root) == std::optional<std::string>("r:1:1"));
    }
}

TEST_CASE("canonical_a_schedule") {
    CHECK(canonical_a_schedule(1).calls().empty());
    CHECK(simulate(build_a_tree(1).graph, canonical_a_schedule(1)).completion_time == 0);

    const auto a2 = build_a_tree(2);
    const auto id = [&](int i, int j) { return a2.vertex_at(i, j); };
    CHECK(canonical_a_schedule(2) ==
          Schedule(0, 2, {{1, id(1, 1), id(1, 2)}, {2, id(1, 1), id(2, 1)}, {2, id(1, 2), id(1, 3)}}));

    for (int n = 1; n <= 12; ++n) {
        const auto a = build_a_tree(n);
        const auto report = simulate(a.graph, canonical_a_schedule(n));
        REQUIRE(report.valid);
        CHECK(report.completion_time == 2 * n - 2);
        for (VertexId v = 0; v < a.graph.vertex_count(); ++v) {
            const auto [i, j] = a.coords[v];
            CHECK(report.informed_time[v] == 2 * (i - 1) + (j - 1));
        }
        for (VertexId leaf : a.leaves) {
            CHECK(report.informed_time[leaf] == 2 * n - 2);
        }
    }
    CHECK_THROWS_AS(canonical_a_schedule(0), InvalidInput);
}

TEST_CASE("A_n optimality at small n agrees across oracles") {
    for (int n = 1; n <= 3; ++n) {
        const auto a = build_a_tree(n);
        CHECK(brute_force_broadcast_time(a.graph, a.root) == 2 * n - 2);
    }
}

TEST_CASE("lemma 2") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(check_lemma2(n));
    }
    const auto plus = build_a_tree_with_pendants(3);
    CHECK(plus.graph.vertex_count() == 12);
    CHECK(plus.graph.label(9) == std::optional<std::string>("p:1"));
    CHECK(plus.graph.has_edge(plus.leaves[0], 9));
    CHECK_THROWS_AS(check_lemma2(7), InvalidInput);
    CHECK(check_lemma2(7, 7));
}

TEST_CASE("lemma 3") {
    const auto two = check_lemma3_report(2);
    CHECK(two.holds);
    CHECK(two.counterexamples == 0);
    CHECK(two.early_exits > 0);
    CHECK(two.states_at_deadline > two.early_exits);
    CHECK(check_lemma3(3));
    CHECK_THROWS_AS(check_lemma3(1), InvalidInput);
    CHECK_THROWS_AS(check_lemma3(4), InvalidInput);
}
