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

#include <random>
#include <sstream>

#include "bdmbt/errors.hpp"
#include "bdmbt/gadgets.hpp"
#include "bdmbt/reduction.hpp"
#include "bdmbt/solver.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bdmbt;

TEST_CASE("parse_dimacs: examples") {
    const auto one = parse_dimacs("p cnf 1 1\n1 0\n");
    CHECK(one.num_vars() == 1);
    CHECK(one.clauses() == std::vector<std::vector<Literal>>{{1}});

    const auto two = parse_dimacs("c two clauses\np cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
    CHECK(two.num_clauses() == 2);
    CHECK(two.clauses()[1] == std::vector<Literal>{-1, -2, -3});

    CHECK(parse_dimacs("p cnf 2 1\n1 1 2 0\n").clauses()[0] == std::vector<Literal>{1, 2});

    // Clauses may span lines; a SATLIB-style '%' ends the input.
    const auto spanning = parse_dimacs("p cnf 3 2\n1 -2\n3 0 -1\n0\n%\n0\n");
    CHECK(spanning.clauses() == std::vector<std::vector<Literal>>{{1, -2, 3}, {-1}});
}

TEST_CASE("parse_dimacs: errors") {
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p sat 1 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);
    CHECK_THROWS_AS(CnfFormula(0, {{1}}), InvalidInput);
    CHECK_THROWS_AS(CnfFormula(1, {}), InvalidInput);
}

TEST_CASE("sat_brute_force") {
    CHECK_FALSE(sat_brute_force(CnfFormula(1, {{1}, {-1}})).has_value());
    CHECK(sat_brute_force(CnfFormula(2, {{1, 2}})).has_value());
    const CnfFormula f(3, {{1, 2, 3}, {-1, -2, -3}});
    const auto a = sat_brute_force(f);
    REQUIRE(a.has_value());
    CHECK(satisfies(f, *a));
    CHECK_THROWS_AS(sat_brute_force(CnfFormula(25, {{1}})), InvalidInput);
}

TEST_CASE("build_reduction: examples") {
    SUBCASE("n=2, m=1, (x1 or not x2)") {
        const auto r = build_reduction(CnfFormula(2, {{1, -2}}));
        CHECK(r.graph.vertex_count() == 9);
        const VertexId c1 = r.map.clause_vertex(1);
        const auto nbrs = r.graph.neighbors(c1);
        CHECK(std::vector<VertexId>(nbrs.begin(), nbrs.end()) ==
              std::vector<VertexId>{r.map.vertex("t:1:1:1"), r.map.vertex("f:2:1:1")});
    }
    SUBCASE("n=1, m=2") {
        const auto r = build_reduction(CnfFormula(1, {{1}, {-1}}));
        CHECK(r.graph.vertex_count() == 11);
        CHECK(max_degree(r.graph) == 3);
    }
    SUBCASE("n=3, m=2") {
        const auto r = build_reduction(CnfFormula(3, {{1, 2, 3}, {-1, -2, -3}}));
        CHECK(r.graph.vertex_count() == 35);
        CHECK(max_degree(r.graph) == 3);
    }
}

TEST_CASE("build_reduction: wiring follows the construction") {
    const CnfFormula f(3, {{1, -2, 3}, {-1}, {2, -3}});
    const auto r = build_reduction(f);
    const auto &g = r.graph;
    const int n = 3;
    const int m = 3;
    for (int i = 1; i <= n; ++i) {
        const VertexId v_i = r.map.vertex("r:" + std::to_string(i) + ":" + std::to_string(2 * n - 2 * i + 1));
        CHECK(g.has_edge(v_i, r.map.true_root(i)));
        CHECK(g.has_edge(v_i, r.map.false_root(i)));
    }
    for (int j = 1; j <= m; ++j) {
        const auto &clause = f.clauses()[static_cast<std::size_t>(j - 1)];
        CHECK(g.degree(r.map.clause_vertex(j)) == clause.size());
        for (Literal lit : clause) {
            const std::string leaf = std::string(lit > 0 ? "t:" : "f:") + std::to_string(std::abs(lit)) + ":" +
                                     std::to_string(j) + ":" + std::to_string(2 * m - 2 * j + 1);
            CHECK(g.has_edge(r.map.clause_vertex(j), r.map.vertex(leaf)));
        }
    }
    // Every label matches the map.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(g.label(v) == std::optional<std::string>(r.map.name(v)));
    }
}

TEST_CASE("build_reduction: invariants on random formulas") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int m = 1 + static_cast<int>(rng() % 4);
        const auto f = testing::random_formula(rng, n, m);
        const auto r = build_reduction(f);
        CHECK(r.graph.vertex_count() == static_cast<std::size_t>(n * n + 2 * n * m * m + m));
        CHECK(max_degree(r.graph) <= 3);
        CHECK(is_connected(r.graph));
        for (int i = 1; i <= n; ++i) {
            for (const char *side : {"t:", "f:"}) {
                for (int j = 1; j <= m; ++j) {
                    const auto leaf = r.map.vertex(side + std::to_string(i) + ":" + std::to_string(j) + ":" +
                                                   std::to_string(2 * m - 2 * j + 1));
                    // m = 1 makes the copy root its own leaf, attached to v_i as well.
                    CHECK(r.graph.degree(leaf) <= (m == 1 ? 3U : 2U));
                }
            }
        }
    }
}

TEST_CASE("target_time") {
    CHECK(target_time(CnfFormula(1, {{1}})) == 2);
    CHECK(target_time(CnfFormula(3, {{1}, {2}})) == 8);
    CHECK(target_time(CnfFormula(1, {{1}, {-1}})) == 4);
}

TEST_CASE("certify: examples") {
    SUBCASE("n=1, m=1") {
        const CnfFormula f(1, {{1}});
        const auto r = build_reduction(f);
        const auto s = certify(f, Assignment{{true}});
        const VertexId root = r.map.root();
        const VertexId t1 = r.map.true_root(1);
        const VertexId f1 = r.map.false_root(1);
        const VertexId c1 = r.map.clause_vertex(1);
        CHECK(s == Schedule(root, 2, {{1, root, t1}, {2, root, f1}, {2, t1, c1}}));
        CHECK(verify_schedule(r.graph, s, 2).valid);
    }
    SUBCASE("n=3, m=2") {
        const CnfFormula f(3, {{1, 2, 3}, {-1, -2, -3}});
        const auto r = build_reduction(f);
        const auto report = verify_schedule(r.graph, certify(f, Assignment{{true, true, false}}), 8);
        CHECK(report.valid);
        CHECK(report.completion_time == 8);
    }
    SUBCASE("errors") {
        const CnfFormula f(1, {{1}});
        CHECK_THROWS_AS(certify(f, Assignment{{false}}), InvalidInput);
        CHECK_THROWS_AS(certify(f, Assignment{{true, true}}), InvalidInput);
    }
}

TEST_CASE("certify timing") {
    const CnfFormula f(2, {{1, -2}, {2}, {-1, 2}});
    const Assignment a{{true, true}};
    const auto r = build_reduction(f);
    const auto report = verify_schedule(r.graph, certify(f, a), target_time(f));
    REQUIRE(report.valid);
    const int n = 2;
    CHECK(report.informed_time[r.map.true_root(1)] == 2 * n - 1);
    CHECK(report.informed_time[r.map.false_root(1)] == 2 * n);
    // Clause 1 is served by the lowest true literal, x1.
    CHECK(report.informed_time[r.map.clause_vertex(1)] == target_time(f));
}

TEST_CASE("certify verifies for every satisfying assignment of small formulas") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 3);
        const auto f = testing::random_formula(rng, n, m);
        const auto r = build_reduction(f);
        for (unsigned bits = 0; bits < (1U << n); ++bits) {
            Assignment a;
            for (int i = 0; i < n; ++i) {
                a.values.push_back((bits >> i) & 1U);
            }
            if (!satisfies(f, a)) {
                CHECK_THROWS_AS(certify(f, a), InvalidInput);
                continue;
            }
            const auto s = certify(f, a);
            const auto report = verify_schedule(r.graph, s, target_time(f));
            CHECK(report.valid);
            CHECK(report.completion_time == target_time(f));
            CHECK(extract_assignment(s, r.map) == a);
        }
    }
}

TEST_CASE("extract_assignment") {
    const CnfFormula f(3, {{1, 2, 3}, {-1, -2, -3}});
    const auto r = build_reduction(f);
    const Assignment a{{true, true, false}};
    CHECK(extract_assignment(certify(f, a), r.map) == a);

    const auto one = build_reduction(CnfFormula(1, {{1, -1}}));
    const VertexId root = one.map.root();
    const VertexId t1 = one.map.true_root(1);
    const VertexId f1 = one.map.false_root(1);
    CHECK(extract_assignment(Schedule(root, 2, {{1, root, f1}, {2, root, t1}}), one.map) == Assignment{{false}});
    CHECK_THROWS_AS(extract_assignment(Schedule(root, 2, {{1, root, f1}, {1, root, t1}}), one.map), InvalidInput);
    CHECK_THROWS_AS(extract_assignment(Schedule(root, 1, {{1, root, f1}}), one.map), InvalidInput);
    CHECK_THROWS_AS(extract_assignment(Schedule(root, 2, {{1, root, f1}, {2, root, f1}}), one.map), InvalidInput);
}

TEST_CASE("assignment syntax") {
    CHECK(parse_assignment("1,-2,3", 3) == Assignment{{true, false, true}});
    CHECK(parse_assignment("-3,1,2", 3) == Assignment{{true, true, false}});
    CHECK(format_assignment(Assignment{{true, false, true}}) == "1,-2,3");
    CHECK_THROWS(parse_assignment("1,2", 3));
    CHECK_THROWS(parse_assignment("1,-1", 1));
    CHECK_THROWS(parse_assignment("1,4", 2));
    CHECK_THROWS(parse_assignment("0", 1));
}

TEST_CASE("map file format") {
    const auto r = build_reduction(CnfFormula(2, {{1, -2}, {2}}));
    std::ostringstream out;
    write_map(out, r.map);
    CHECK(out.str().rfind("p map 2 2\nm 0 r:1:1\n", 0) == 0);
    CHECK(parse_map(out.str()) == r.map);

    CHECK_THROWS_AS(parse_map("p map 1 1\nm 0 r:1:1\n"), ParseError);
    CHECK_THROWS_AS(parse_map("m 0 r:1:1\n"), ParseError);
    CHECK_THROWS_AS(parse_map("p map 1 1\nm 0 r:1:1\nm 0 t:1:1:1\n"), ParseError);
    CHECK_THROWS_AS(parse_map("p map 1 1\nm 0 r:1:1\nm 1 t:1:1:1\nm 2 f:1:1:1\nm 3 c:9\n"), ParseError);
}
