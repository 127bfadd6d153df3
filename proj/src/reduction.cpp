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

#include "bdmbt/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <set>
#include <sstream>

#include "bdmbt/errors.hpp"
#include "bdmbt/gadgets.hpp"
#include "text_util.hpp"

namespace bdmbt {

CnfFormula::CnfFormula(int num_vars, std::vector<std::vector<Literal>> clauses) : num_vars_(num_vars) {
    if (num_vars < 1) {
        throw InvalidInput("a formula needs at least one variable");
    }
    if (clauses.empty()) {
        throw InvalidInput("a formula needs at least one clause");
    }
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        std::vector<Literal> distinct;
        for (Literal lit : clauses[c]) {
            if (lit == 0 || std::abs(lit) > num_vars) {
                throw InvalidInput("clause " + std::to_string(c + 1) + ": literal " + std::to_string(lit) +
                                   " out of range");
            }
            if (std::find(distinct.begin(), distinct.end(), lit) == distinct.end()) {
                distinct.push_back(lit);
            }
        }
        if (distinct.empty()) {
            throw InvalidInput("clause " + std::to_string(c + 1) + " is empty");
        }
        if (distinct.size() > 3) {
            throw InvalidInput("clause " + std::to_string(c + 1) + " has more than 3 distinct literals");
        }
        clauses_.push_back(std::move(distinct));
    }
}

bool satisfies(const CnfFormula &cnf, const Assignment &a) {
    if (a.values.size() != static_cast<std::size_t>(cnf.num_vars())) {
        return false;
    }
    return std::all_of(cnf.clauses().begin(), cnf.clauses().end(), [&](const auto &clause) {
        return std::any_of(clause.begin(), clause.end(), [&](Literal lit) {
            return a.values[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0);
        });
    });
}

CnfFormula parse_dimacs(std::istream &in) {
    std::optional<std::pair<int, int>> header;
    std::vector<std::vector<Literal>> clauses;
    std::vector<Literal> current;

    detail::LineReader reader(in, 'c');
    while (auto line = reader.next()) {
        const std::size_t at = reader.line_number();
        if ((*line)[0] == '%') {
            break;
        }
        auto tokens = detail::split(*line);
        if (tokens[0] == "p") {
            if (header) {
                throw ParseError(at, "duplicate 'p cnf' header");
            }
            if (tokens.size() != 4 || tokens[1] != "cnf") {
                throw ParseError(at, "expected 'p cnf <variables> <clauses>'");
            }
            header.emplace(static_cast<int>(detail::parse_unsigned(tokens[2], at)),
                           static_cast<int>(detail::parse_unsigned(tokens[3], at)));
            continue;
        }
        if (!header) {
            throw ParseError(at, "'p cnf' header must precede clauses");
        }
        for (const auto &token : tokens) {
            const auto lit = detail::parse_signed(token, at);
            if (lit == 0) {
                if (current.empty()) {
                    throw ParseError(at, "empty clause");
                }
                clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::abs(lit) > header->first) {
                throw ParseError(at, "literal " + std::to_string(lit) + " exceeds variable count");
            }
            current.push_back(static_cast<Literal>(lit));
        }
    }
    if (!header) {
        throw ParseError("missing 'p cnf' header");
    }
    if (!current.empty()) {
        throw ParseError("last clause is not terminated by 0");
    }
    if (static_cast<int>(clauses.size()) != header->second) {
        throw ParseError("header announces " + std::to_string(header->second) + " clauses, found " +
                         std::to_string(clauses.size()));
    }
    try {
        return CnfFormula(header->first, std::move(clauses));
    } catch (const InvalidInput &e) {
        throw ParseError(e.what());
    }
}

CnfFormula parse_dimacs(const std::string &text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

void write_dimacs(std::ostream &out, const CnfFormula &cnf) {
    out << "p cnf " << cnf.num_vars() << ' ' << cnf.num_clauses() << '\n';
    for (const auto &clause : cnf.clauses()) {
        for (Literal lit : clause) {
            out << lit << ' ';
        }
        out << "0\n";
    }
}

Assignment parse_assignment(const std::string &text, int num_vars) {
    Assignment a;
    a.values.assign(static_cast<std::size_t>(num_vars), false);
    std::vector<bool> seen(static_cast<std::size_t>(num_vars), false);
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto lit = detail::parse_signed(item, 0);
        if (lit == 0 || std::abs(lit) > num_vars) {
            throw InvalidInput("assignment entry " + item + " out of range");
        }
        const auto idx = static_cast<std::size_t>(std::abs(lit) - 1);
        if (seen[idx]) {
            throw InvalidInput("variable " + std::to_string(idx + 1) + " assigned twice");
        }
        seen[idx] = true;
        a.values[idx] = lit > 0;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw InvalidInput("assignment must give every variable a value");
    }
    return a;
}

std::string format_assignment(const Assignment &a) {
    std::string out;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += (a.values[i] ? "" : "-") + std::to_string(i + 1);
    }
    return out;
}

std::optional<Assignment> sat_brute_force(const CnfFormula &cnf) {
    const int n = cnf.num_vars();
    if (n > kSatBruteForceMaxVars) {
        throw InvalidInput("brute-force satisfiability is limited to " + std::to_string(kSatBruteForceMaxVars) +
                           " variables");
    }
    Assignment a;
    a.values.resize(static_cast<std::size_t>(n));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (int i = 0; i < n; ++i) {
            a.values[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
        }
        if (satisfies(cnf, a)) {
            return a;
        }
    }
    return std::nullopt;
}

namespace {

// Id layout: A_n first, then per variable the T copy and the F copy, then clauses.
struct Layout {
    int n;
    int m;

    std::size_t copy_size() const { return static_cast<std::size_t>(m) * static_cast<std::size_t>(m); }
    std::size_t gadget_size() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n); }
    VertexId copy_base(int var, bool positive) const {
        return static_cast<VertexId>(gadget_size() + (static_cast<std::size_t>(var - 1) * 2 + (positive ? 0 : 1)) *
                                                         copy_size());
    }
    VertexId clause_vertex(int clause) const {
        return static_cast<VertexId>(gadget_size() + 2 * static_cast<std::size_t>(n) * copy_size() +
                                     static_cast<std::size_t>(clause - 1));
    }
    std::size_t vertex_count() const { return clause_vertex(m) + 1; }

    // Leaf v_row of an A_size grid starting at `base`.
    static VertexId leaf(int size, VertexId base, int row) {
        return static_cast<VertexId>(base + gadget_row_offset(size, row) + static_cast<std::size_t>(2 * (size - row)));
    }
};

void append_grid_names(std::vector<std::string> &names, const std::string &prefix, int size) {
    for (int i = 1; i <= size; ++i) {
        for (int j = 1; j <= 2 * (size - i) + 1; ++j) {
            names.push_back(prefix + std::to_string(i) + ":" + std::to_string(j));
        }
    }
}

} // namespace

std::vector<std::string> reduction_names(int n, int m) {
    if (n < 1 || m < 1) {
        throw InvalidInput("reduction needs n >= 1 and m >= 1");
    }
    std::vector<std::string> names;
    append_grid_names(names, "r:", n);
    for (int i = 1; i <= n; ++i) {
        append_grid_names(names, "t:" + std::to_string(i) + ":", m);
        append_grid_names(names, "f:" + std::to_string(i) + ":", m);
    }
    for (int j = 1; j <= m; ++j) {
        names.push_back("c:" + std::to_string(j));
    }
    return names;
}

ReductionMap::ReductionMap(int n, int m, std::vector<std::string> names) : n_(n), m_(m), names_(std::move(names)) {
    auto expected = reduction_names(n, m);
    if (expected.size() != names_.size()) {
        throw InvalidInput("map for n=" + std::to_string(n) + ", m=" + std::to_string(m) + " needs " +
                           std::to_string(expected.size()) + " names, got " + std::to_string(names_.size()));
    }
    for (VertexId v = 0; v < names_.size(); ++v) {
        if (!ids_.emplace(names_[v], v).second) {
            throw InvalidInput("name " + names_[v] + " used twice");
        }
    }
    for (const auto &name : expected) {
        if (!ids_.count(name)) {
            throw InvalidInput("map is missing " + name);
        }
    }
}

VertexId ReductionMap::vertex(const std::string &name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) {
        throw InvalidInput("no vertex named " + name);
    }
    return it->second;
}

VertexId ReductionMap::true_root(int var) const { return vertex("t:" + std::to_string(var) + ":1:1"); }
VertexId ReductionMap::false_root(int var) const { return vertex("f:" + std::to_string(var) + ":1:1"); }
VertexId ReductionMap::clause_vertex(int clause) const { return vertex("c:" + std::to_string(clause)); }

Reduction build_reduction(const CnfFormula &cnf) {
    const Layout layout{cnf.num_vars(), cnf.num_clauses()};
    const int n = layout.n;
    const int m = layout.m;

    std::vector<Edge> edges = gadget_edges(n);
    for (int i = 1; i <= n; ++i) {
        const VertexId v_i = Layout::leaf(n, 0, i);
        for (bool positive : {true, false}) {
            const VertexId base = layout.copy_base(i, positive);
            const auto copy = gadget_edges(m, base);
            edges.insert(edges.end(), copy.begin(), copy.end());
            edges.emplace_back(v_i, base);
        }
    }
    for (int j = 1; j <= m; ++j) {
        for (Literal lit : cnf.clauses()[static_cast<std::size_t>(j - 1)]) {
            const VertexId base = layout.copy_base(std::abs(lit), lit > 0);
            edges.emplace_back(layout.clause_vertex(j), Layout::leaf(m, base, j));
        }
    }

    auto names = reduction_names(n, m);
    std::map<VertexId, std::string> labels;
    for (VertexId v = 0; v < names.size(); ++v) {
        labels.emplace(v, names[v]);
    }
    Graph graph(layout.vertex_count(), edges, std::move(labels));
    return Reduction{std::move(graph), ReductionMap(n, m, std::move(names))};
}

int target_time(const CnfFormula &cnf) { return 2 * cnf.num_vars() + 2 * cnf.num_clauses() - 2; }

Schedule certify(const CnfFormula &cnf, const Assignment &a) {
    if (a.values.size() != static_cast<std::size_t>(cnf.num_vars())) {
        throw InvalidInput("assignment has " + std::to_string(a.values.size()) + " values for " +
                           std::to_string(cnf.num_vars()) + " variables");
    }
    if (!satisfies(cnf, a)) {
        throw InvalidInput("assignment does not satisfy the formula");
    }
    const Layout layout{cnf.num_vars(), cnf.num_clauses()};
    const int n = layout.n;
    const int m = layout.m;

    // A_n finishes at 2n-2; each leaf v_i then calls its chosen root, then the other.
    std::vector<Call> calls = canonical_a_calls(n, 0, 0);
    for (int i = 1; i <= n; ++i) {
        const VertexId v_i = Layout::leaf(n, 0, i);
        const bool value = a.values[static_cast<std::size_t>(i - 1)];
        const VertexId chosen = layout.copy_base(i, value);
        const VertexId other = layout.copy_base(i, !value);
        calls.push_back(Call{2 * n - 1, v_i, chosen});
        calls.push_back(Call{2 * n, v_i, other});
        const auto chosen_calls = canonical_a_calls(m, chosen, 2 * n - 1);
        const auto other_calls = canonical_a_calls(m, other, 2 * n);
        calls.insert(calls.end(), chosen_calls.begin(), chosen_calls.end());
        calls.insert(calls.end(), other_calls.begin(), other_calls.end());
    }

    // Chosen copies finish one round early; their leaves inform the clauses last.
    const int target = target_time(cnf);
    for (int j = 1; j <= m; ++j) {
        std::optional<Literal> pick;
        for (Literal lit : cnf.clauses()[static_cast<std::size_t>(j - 1)]) {
            const bool is_true = a.values[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0);
            if (is_true && (!pick || std::abs(lit) < std::abs(*pick))) {
                pick = lit;
            }
        }
        const VertexId base = layout.copy_base(std::abs(*pick), *pick > 0);
        calls.push_back(Call{target, Layout::leaf(m, base, j), layout.clause_vertex(j)});
    }
    return Schedule(0, target, std::move(calls));
}

Assignment extract_assignment(const Schedule &schedule, const ReductionMap &map) {
    std::unordered_map<VertexId, int> informed{{schedule.source(), 0}};
    for (const Call &c : schedule.calls()) {
        if (!informed.emplace(c.callee, c.round).second) {
            throw InvalidInput("vertex " + std::to_string(c.callee) + " is informed more than once");
        }
    }
    Assignment a;
    for (int i = 1; i <= map.num_vars(); ++i) {
        const auto t = informed.find(map.true_root(i));
        const auto f = informed.find(map.false_root(i));
        if (t == informed.end() || f == informed.end()) {
            throw InvalidInput("T_" + std::to_string(i) + " or F_" + std::to_string(i) + " is never informed");
        }
        if (t->second == f->second) {
            throw InvalidInput("T_" + std::to_string(i) + " and F_" + std::to_string(i) +
                               " are informed in the same round");
        }
        a.values.push_back(t->second < f->second);
    }
    return a;
}

ReductionMap parse_map(std::istream &in) {
    std::optional<std::pair<int, int>> header;
    std::map<VertexId, std::string> entries;

    detail::LineReader reader(in);
    while (auto line = reader.next()) {
        const std::size_t at = reader.line_number();
        auto tokens = detail::split(*line);
        if (tokens[0] == "p") {
            if (header || tokens.size() != 4 || tokens[1] != "map") {
                throw ParseError(at, "expected a single 'p map <n> <m>' header");
            }
            header.emplace(static_cast<int>(detail::parse_unsigned(tokens[2], at)),
                           static_cast<int>(detail::parse_unsigned(tokens[3], at)));
        } else if (tokens[0] == "m") {
            if (!header) {
                throw ParseError(at, "'p map' header must come first");
            }
            if (tokens.size() != 3) {
                throw ParseError(at, "expected 'm <vertex-id> <name>'");
            }
            const auto v = static_cast<VertexId>(detail::parse_unsigned(tokens[1], at));
            if (!entries.emplace(v, tokens[2]).second) {
                throw ParseError(at, "vertex mapped twice");
            }
        } else {
            throw ParseError(at, "unknown line type '" + tokens[0] + "'");
        }
    }
    if (!header) {
        throw ParseError("missing 'p map' header");
    }
    std::vector<std::string> names;
    for (const auto &[v, name] : entries) {
        if (v != names.size()) {
            throw ParseError("vertex ids in a map must be 0..N-1 without gaps");
        }
        names.push_back(name);
    }
    try {
        return ReductionMap(header->first, header->second, std::move(names));
    } catch (const InvalidInput &e) {
        throw ParseError(e.what());
    }
}

ReductionMap parse_map(const std::string &text) {
    std::istringstream in(text);
    return parse_map(in);
}

void write_map(std::ostream &out, const ReductionMap &map) {
    out << "p map " << map.num_vars() << ' ' << map.num_clauses() << '\n';
    for (VertexId v = 0; v < map.vertex_count(); ++v) {
        out << "m " << v << ' ' << map.name(v) << '\n';
    }
}

} // namespace bdmbt
