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

#include <utility>
#include <vector>

#include "bdmbt/graph.hpp"
#include "bdmbt/schedule.hpp"

namespace bdmbt {

/// (row, column), both 1-based.
using GridCoord = std::pair<int, int>;

/// The A_n tree: a spine (1,1)-(2,1)-...-(n,1), and hanging off spine vertex
/// (i,1) a row path (i,1)-(i,2)-...-(i, 2(n-i)+1). n^2 vertices in total.
struct GadgetGraph {
    int n = 0;
    Graph graph;
    VertexId root = 0;
    /// leaves[i-1] is the end of row i, (i, 2n-2i+1).
    std::vector<VertexId> leaves;
    std::vector<GridCoord> coords;

    /// Vertices are numbered row by row, so (i, j) has a closed-form id.
    VertexId vertex_at(int row, int col) const;
};

/// Number of vertices in rows 1..row-1 of A_n.
std::size_t gadget_row_offset(int n, int row);

/// Internal edges of A_n with ids offset by `base`, in the row-major numbering.
std::vector<Edge> gadget_edges(int n, VertexId base = 0);

/// Vertices are labelled "r:<i>:<j>". Throws InvalidInput for n < 1.
GadgetGraph build_a_tree(int n);

/// The optimal routing from the root: (i,j) is informed in round 2(i-1)+(j-1).
/// Each spine vertex calls into its row first and down the spine second.
Schedule canonical_a_schedule(int n);

/// Calls of canonical_a_schedule(m) for a copy whose vertices start at `base`
/// and whose root is informed in round `start`.
std::vector<Call> canonical_a_calls(int m, VertexId base, int start);

/// A_n plus one pendant vertex p_i hanging off each leaf v_i (ids n^2 + i - 1).
GadgetGraph build_a_tree_with_pendants(int n);

inline constexpr int kLemma2MaxN = 6;

/// Every leaf can forward out of A_n in round 2n-1, simultaneously, after the
/// canonical routing. Checked on build_a_tree_with_pendants(n).
bool check_lemma2(int n, int max_n = kLemma2MaxN);

struct Lemma3Report {
    bool holds = false;
    /// Distinct informed sets reachable after 2n-2 rounds.
    std::size_t states_at_deadline = 0;
    /// Of those, sets where some pendant is already informed.
    std::size_t early_exits = 0;
    /// Early exits that also have A_n complete.
    std::size_t counterexamples = 0;
};

/// Exhaustive check that an early exit from A_n costs local optimality:
/// no schedule on the pendant-augmented tree informs a pendant before round
/// 2n-1 while also finishing A_n by round 2n-2. Only n in {2, 3}.
Lemma3Report check_lemma3_report(int n);
bool check_lemma3(int n);

} // namespace bdmbt
