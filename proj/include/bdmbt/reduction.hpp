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

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bdmbt/graph.hpp"
#include "bdmbt/schedule.hpp"

namespace bdmbt {

/// Signed variable index: +i is x_i, -i is its negation.
using Literal = int;

/// A 3SAT instance. Clauses hold 1..3 distinct literals; repeats collapse on
/// construction (first occurrence order kept).
class CnfFormula {
  public:
    CnfFormula(int num_vars, std::vector<std::vector<Literal>> clauses);

    int num_vars() const { return num_vars_; }
    int num_clauses() const { return static_cast<int>(clauses_.size()); }
    const std::vector<std::vector<Literal>> &clauses() const { return clauses_; }

    bool operator==(const CnfFormula &) const = default;

  private:
    int num_vars_;
    std::vector<std::vector<Literal>> clauses_;
};

/// values[i-1] is the truth value of x_i.
struct Assignment {
    std::vector<bool> values;

    bool operator==(const Assignment &) const = default;
};

bool satisfies(const CnfFormula &cnf, const Assignment &a);

/// DIMACS CNF: "c" comments, one "p cnf <vars> <clauses>" header, clauses
/// terminated by 0 (may span lines), optional trailing "%" section.
CnfFormula parse_dimacs(std::istream &in);
CnfFormula parse_dimacs(const std::string &text);
void write_dimacs(std::ostream &out, const CnfFormula &cnf);

/// "1,-2,3": one signed entry per variable, sign gives the value.
Assignment parse_assignment(const std::string &text, int num_vars);
std::string format_assignment(const Assignment &a);

inline constexpr int kSatBruteForceMaxVars = 24;

/// First satisfying assignment in binary counting order (x_1 is the low bit),
/// or nullopt. Throws InvalidInput above kSatBruteForceMaxVars variables.
std::optional<Assignment> sat_brute_force(const CnfFormula &cnf);

/// Names every vertex of a reduction graph:
///   r:<i>:<j>              vertex (i, j) of the variable gadget A_n
///   t:<i>:<i2>:<j2>        vertex (i2, j2) of the A_m copy rooted at T_i
///   f:<i>:<i2>:<j2>        same, for the copy rooted at F_i
///   c:<j>                  clause vertex j
class ReductionMap {
  public:
    /// Throws InvalidInput unless `names` is exactly the name set for (n, m).
    ReductionMap(int n, int m, std::vector<std::string> names);

    int num_vars() const { return n_; }
    int num_clauses() const { return m_; }
    std::size_t vertex_count() const { return names_.size(); }

    const std::string &name(VertexId v) const { return names_.at(v); }
    VertexId vertex(const std::string &name) const;

    VertexId root() const { return vertex("r:1:1"); }
    VertexId true_root(int var) const;
    VertexId false_root(int var) const;
    VertexId clause_vertex(int clause) const;

    bool operator==(const ReductionMap &other) const { return n_ == other.n_ && m_ == other.m_ && names_ == other.names_; }

  private:
    int n_;
    int m_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> ids_;
};

/// Canonical name list for (n, m) in the id order build_reduction uses.
std::vector<std::string> reduction_names(int n, int m);

struct Reduction {
    Graph graph;
    ReductionMap map;
};

/// The degree-3 broadcast instance for `cnf`: one A_n, an A_m copy rooted at
/// each T_i and F_i (both attached to leaf v_i of A_n), and one vertex per
/// clause joined to leaf v_j of the copy matching each of its literals.
/// n^2 + 2nm^2 + m vertices; the graph carries the names as labels.
Reduction build_reduction(const CnfFormula &cnf);

/// 2n + 2m - 2: reachable from r exactly when the formula is satisfiable.
int target_time(const CnfFormula &cnf);

/// Broadcast schedule from r finishing at target_time(cnf). Throws
/// InvalidInput when `a` has the wrong length or does not satisfy `cnf`.
Schedule certify(const CnfFormula &cnf, const Assignment &a);

/// x_i = true iff T_i is informed strictly before F_i. Informed times come
/// from the schedule's calls alone. Throws InvalidInput on a tie, an
/// uninformed root, or a vertex called twice.
Assignment extract_assignment(const Schedule &schedule, const ReductionMap &map);

// "p map <n> <m>" followed by "m <vertex-id> <name>" lines.
ReductionMap parse_map(std::istream &in);
ReductionMap parse_map(const std::string &text);
void write_map(std::ostream &out, const ReductionMap &map);

} // namespace bdmbt
