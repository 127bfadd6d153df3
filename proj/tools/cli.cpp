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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "bdmbt/errors.hpp"
#include "bdmbt/gadgets.hpp"
#include "bdmbt/reduction.hpp"
#include "bdmbt/solver.hpp"

namespace bdmbt::cli {

namespace {

struct Config {
    std::uint64_t node_budget = kDefaultNodeBudget;
    int threads = 0;

    SolveOptions solve_options() const { return SolveOptions{node_budget, threads}; }
};

/// A user-facing failure that maps straight onto an exit code.
struct Exit {
    int code;
    std::string message;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Exit{kMalformed, "cannot read " + path};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "-" or empty writes to `out`.
void write_output(const std::string &path, std::ostream &out, const std::function<void(std::ostream &)> &emit) {
    if (path.empty() || path == "-") {
        emit(out);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw Exit{kMalformed, "cannot write " + path};
    }
    emit(file);
}

void require_distinct(const std::vector<std::string> &paths) {
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            if (!paths[i].empty() && paths[i] != "-" && paths[i] == paths[j]) {
                throw Exit{kMalformed, "the same path is used for two files: " + paths[i]};
            }
        }
    }
}

VertexId resolve_source(const Graph &g, const std::optional<std::uint64_t> &source) {
    if (source) {
        if (*source >= g.vertex_count()) {
            throw Exit{kMalformed, "source " + std::to_string(*source) + " is not a vertex"};
        }
        return static_cast<VertexId>(*source);
    }
    if (auto root = g.find_label("r:1:1")) {
        return *root;
    }
    throw Exit{kMalformed, "--source is required: the graph has no vertex labelled r:1:1"};
}

void print_report(std::ostream &out, const VerificationReport &report) {
    if (report.valid) {
        out << "valid completion_time=" << *report.completion_time << '\n';
        return;
    }
    out << "invalid failure=" << to_string(report.failure);
    if (report.offending_call) {
        const Call &c = *report.offending_call;
        out << " round=" << c.round << " call=" << c.caller << "->" << c.callee;
    }
    if (report.failure == Failure::DeadlineExceeded) {
        out << " completion_time=" << *report.completion_time;
    }
    out << '\n';
}

Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) {
        std::uniform_int_distribution<VertexId> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    std::bernoulli_distribution extra(extra_edge_probability);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (extra(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Minimum broadcast time on bounded-degree graphs"};
    app.require_subcommand(1);
    // Global flags may also follow the subcommand.
    app.fallthrough();

    Config config;
    if (const char *env = std::getenv("BDMBT_NODE_BUDGET")) {
        try {
            config.node_budget = std::stoull(env);
        } catch (const std::exception &) {
            err << "ignoring unparsable BDMBT_NODE_BUDGET=" << env << '\n';
        }
    }
    app.add_option("--node-budget", config.node_budget, "Search-node budget for exact solving")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", config.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

    std::function<int()> action;

    // gen
    auto *gen = app.add_subcommand("gen", "Generate graphs");
    gen->require_subcommand(1);
    std::size_t gen_n = 0;
    std::string gen_out;
    std::string gen_schedule;
    auto *gen_a = gen->add_subcommand("a-tree", "The A_n gadget tree");
    gen_a->add_option("--n", gen_n)->required()->check(CLI::PositiveNumber);
    gen_a->add_option("-o,--output", gen_out);
    gen_a->add_option("--schedule", gen_schedule, "Also write the canonical optimal schedule");
    gen_a->callback([&] {
        action = [&] {
            require_distinct({gen_out, gen_schedule});
            const auto a = build_a_tree(static_cast<int>(gen_n));
            write_output(gen_out, out, [&](std::ostream &o) { write_graph(o, a.graph); });
            if (!gen_schedule.empty()) {
                write_output(gen_schedule, out,
                             [&](std::ostream &o) { write_schedule(o, canonical_a_schedule(static_cast<int>(gen_n))); });
            }
            return kOk;
        };
    });
    auto *gen_path = gen->add_subcommand("path", "Path on N vertices");
    gen_path->add_option("--n", gen_n)->required()->check(CLI::PositiveNumber);
    gen_path->add_option("-o,--output", gen_out);
    gen_path->callback([&] {
        action = [&] {
            write_output(gen_out, out, [&](std::ostream &o) { write_graph(o, path_graph(gen_n)); });
            return kOk;
        };
    });
    auto *gen_cycle = gen->add_subcommand("cycle", "Cycle on N >= 3 vertices");
    gen_cycle->add_option("--n", gen_n)->required()->check(CLI::Range(3, 1 << 24));
    gen_cycle->add_option("-o,--output", gen_out);
    gen_cycle->callback([&] {
        action = [&] {
            write_output(gen_out, out, [&](std::ostream &o) { write_graph(o, cycle_graph(gen_n)); });
            return kOk;
        };
    });
    double gen_p = 0.2;
    std::uint64_t gen_seed = 0;
    auto *gen_random = gen->add_subcommand("random", "Random connected graph: random tree plus extra edges");
    gen_random->add_option("--n", gen_n)->required()->check(CLI::PositiveNumber);
    gen_random->add_option("--p", gen_p, "Probability of each extra edge")->check(CLI::Range(0.0, 1.0));
    gen_random->add_option("--seed", gen_seed);
    gen_random->add_option("-o,--output", gen_out);
    gen_random->callback([&] {
        action = [&] {
            write_output(gen_out, out,
                         [&](std::ostream &o) { write_graph(o, random_connected_graph(gen_n, gen_p, gen_seed)); });
            return kOk;
        };
    });

    // solve
    std::string graph_path;
    std::string schedule_path;
    std::string output_path;
    std::optional<std::uint64_t> source;
    std::optional<int> upper;
    bool all_sources = false;
    auto *solve = app.add_subcommand("solve", "Exact broadcast time b(source) or b(G)");
    solve->add_option("--graph", graph_path)->required();
    auto *solve_source = solve->add_option("--source", source);
    solve->add_option("--upper", upper, "Only search broadcast times up to K")->check(CLI::NonNegativeNumber);
    auto *solve_all = solve->add_flag("--all", all_sources, "Maximise over every source");
    solve_all->excludes(solve_source);
    solve->add_option("-o,--output", output_path, "Witness schedule file");
    solve->callback([&] {
        action = [&] {
            require_distinct({graph_path, output_path});
            const Graph g = parse_graph(read_file(graph_path));
            if (all_sources) {
                out << broadcast_time_graph(g, config.solve_options()) << '\n';
                return kOk;
            }
            const VertexId s = resolve_source(g, source);
            err << "lower bound: " << lower_bound(g, s) << '\n';
            if (upper) {
                const auto d = decide_bdmbt(g, s, *upper, config.solve_options());
                if (!d.feasible) {
                    out << "> " << *upper << '\n';
                    err << "nodes explored: " << d.nodes_explored << '\n';
                    return kNegative;
                }
            }
            const auto result = broadcast_time_exact(g, s, config.solve_options());
            err << "nodes explored: " << result.nodes_explored << '\n';
            out << result.broadcast_time << '\n';
            if (!output_path.empty()) {
                write_output(output_path, out, [&](std::ostream &o) { write_schedule(o, result.witness); });
            }
            return kOk;
        };
    });

    // decide
    int k = 0;
    auto *decide = app.add_subcommand("decide", "Is b(source) <= K?");
    decide->add_option("--graph", graph_path)->required();
    decide->add_option("--source", source);
    decide->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    decide->add_option("-o,--output", output_path, "Witness schedule file when the answer is yes");
    decide->callback([&] {
        action = [&] {
            require_distinct({graph_path, output_path});
            const Graph g = parse_graph(read_file(graph_path));
            const VertexId s = resolve_source(g, source);
            const auto d = decide_bdmbt(g, s, k, config.solve_options());
            err << "nodes explored: " << d.nodes_explored << '\n';
            out << (d.feasible ? "yes" : "no") << '\n';
            if (d.feasible && !output_path.empty()) {
                write_output(output_path, out, [&](std::ostream &o) { write_schedule(o, *d.witness); });
            }
            return d.feasible ? kOk : kNegative;
        };
    });

    // verify
    std::optional<int> deadline;
    auto *verify = app.add_subcommand("verify", "Check a schedule against a graph");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--schedule", schedule_path)->required();
    verify->add_option("--deadline", deadline)->check(CLI::NonNegativeNumber);
    verify->callback([&] {
        action = [&] {
            const Graph g = parse_graph(read_file(graph_path));
            const Schedule s = parse_schedule(read_file(schedule_path));
            const auto report = verify_schedule(g, s, deadline);
            print_report(out, report);
            return report.valid ? kOk : kNegative;
        };
    });

    // reduce
    std::string cnf_path;
    std::string map_path;
    auto *reduce = app.add_subcommand("reduce", "Build the broadcast instance for a 3SAT formula");
    reduce->add_option("--cnf", cnf_path)->required();
    reduce->add_option("-o,--output", output_path)->required();
    reduce->add_option("--map", map_path)->required();
    reduce->callback([&] {
        action = [&] {
            require_distinct({cnf_path, output_path, map_path});
            const CnfFormula cnf = parse_dimacs(read_file(cnf_path));
            const Reduction r = build_reduction(cnf);
            write_output(output_path, out, [&](std::ostream &o) { write_graph(o, r.graph); });
            write_output(map_path, out, [&](std::ostream &o) { write_map(o, r.map); });
            out << "target_time " << target_time(cnf) << '\n';
            return kOk;
        };
    });

    // certify
    std::string assignment_text;
    auto *certify_cmd = app.add_subcommand("certify", "Broadcast schedule from a satisfying assignment");
    certify_cmd->add_option("--cnf", cnf_path)->required();
    certify_cmd->add_option("--assignment", assignment_text, "Signed literals, e.g. 1,-2,3")->required();
    certify_cmd->add_option("-o,--output", output_path);
    certify_cmd->callback([&] {
        action = [&] {
            require_distinct({cnf_path, output_path});
            const CnfFormula cnf = parse_dimacs(read_file(cnf_path));
            const Assignment a = parse_assignment(assignment_text, cnf.num_vars());
            if (!satisfies(cnf, a)) {
                throw Exit{kNegative, "assignment does not satisfy the formula"};
            }
            write_output(output_path, out, [&](std::ostream &o) { write_schedule(o, certify(cnf, a)); });
            return kOk;
        };
    });

    // extract
    auto *extract = app.add_subcommand("extract", "Read the truth assignment off a certificate schedule");
    extract->add_option("--schedule", schedule_path)->required();
    extract->add_option("--map", map_path)->required();
    extract->callback([&] {
        action = [&] {
            const Schedule s = parse_schedule(read_file(schedule_path));
            const ReductionMap m = parse_map(read_file(map_path));
            out << format_assignment(extract_assignment(s, m)) << '\n';
            return kOk;
        };
    });

    // heuristic
    auto *heuristic = app.add_subcommand("heuristic", "Greedy schedule (upper bound)");
    heuristic->add_option("--graph", graph_path)->required();
    heuristic->add_option("--source", source);
    heuristic->add_option("-o,--output", output_path);
    heuristic->callback([&] {
        action = [&] {
            require_distinct({graph_path, output_path});
            const Graph g = parse_graph(read_file(graph_path));
            const Schedule s = greedy_schedule(g, resolve_source(g, source));
            write_output(output_path, out, [&](std::ostream &o) { write_schedule(o, s); });
            out << "completion_time " << s.horizon() << '\n';
            return kOk;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kMalformed;
    }

    try {
        return action();
    } catch (const Exit &e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const BudgetExceeded &e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kMalformed;
    }
}

} // namespace bdmbt::cli
