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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bdmbt/gadgets.hpp"
#include "bdmbt/reduction.hpp"
#include "bdmbt/solver.hpp"
#include "cli.hpp"
#include "doctest.h"

using namespace bdmbt;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "bdmbt");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
  public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("bdmbt-cli-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string file(const std::string &name) const { return (path_ / name).string(); }

    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(file(name)) << text;
        return file(name);
    }

    std::string read(const std::string &name) const {
        std::ifstream in(file(name));
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

  private:
    fs::path path_;
};

} // namespace

TEST_CASE("gen a-tree then solve prints 2n-2") {
    TempDir dir;
    REQUIRE(run({"gen", "a-tree", "--n", "3", "-o", dir.file("a3.g"), "--schedule", dir.file("a3.s")}).code == 0);
    CHECK(parse_graph(dir.read("a3.g")) == build_a_tree(3).graph);
    CHECK(parse_schedule(dir.read("a3.s")) == canonical_a_schedule(3));

    const auto solved = run({"solve", "--graph", dir.file("a3.g"), "--source", "0", "-o", dir.file("w.s")});
    CHECK(solved.code == 0);
    CHECK(solved.out == "4\n");
    CHECK(solved.err.find("nodes explored") != std::string::npos);
    CHECK(verify_schedule(build_a_tree(3).graph, parse_schedule(dir.read("w.s")), 4).valid);

    // r:1:1 label supplies the default source.
    CHECK(run({"solve", "--graph", dir.file("a3.g")}).out == "4\n");
    CHECK(run({"verify", "--graph", dir.file("a3.g"), "--schedule", dir.file("a3.s")}).out ==
          "valid completion_time=4\n");
}

TEST_CASE("solve variants") {
    TempDir dir;
    REQUIRE(run({"gen", "path", "--n", "4", "-o", dir.file("p.g")}).code == 0);
    CHECK(run({"solve", "--graph", dir.file("p.g"), "--all"}).out == "3\n");
    CHECK(run({"solve", "--graph", dir.file("p.g"), "--source", "1"}).out == "2\n");
    const auto capped = run({"solve", "--graph", dir.file("p.g"), "--source", "0", "--upper", "2"});
    CHECK(capped.code == 1);
    CHECK(capped.out == "> 2\n");
    CHECK(run({"solve", "--graph", dir.file("p.g"), "--source", "0", "--upper", "3"}).out == "3\n");
    // No label and no --source.
    CHECK(run({"solve", "--graph", dir.file("p.g")}).code == 2);
    CHECK(run({"solve", "--graph", dir.file("p.g"), "--source", "9"}).code == 2);

    REQUIRE(run({"gen", "cycle", "--n", "5", "-o", dir.file("c.g")}).code == 0);
    CHECK(run({"solve", "--graph", dir.file("c.g"), "--all"}).out == "3\n");
    CHECK(run({"gen", "cycle", "--n", "2"}).code == 2);

    const auto random = run({"gen", "random", "--n", "8", "--p", "0.3", "--seed", "4"});
    CHECK(random.code == 0);
    CHECK(is_connected(parse_graph(random.out)));
    CHECK(run({"gen", "random", "--n", "8", "--p", "0.3", "--seed", "4"}).out == random.out);
}

TEST_CASE("reduce an unsatisfiable formula and decide") {
    TempDir dir;
    const auto cnf = dir.write("u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    const auto reduced = run({"reduce", "--cnf", cnf, "-o", dir.file("u.g"), "--map", dir.file("u.m")});
    REQUIRE(reduced.code == 0);
    CHECK(reduced.out == "target_time 4\n");
    CHECK(parse_graph(dir.read("u.g")).vertex_count() == 11);
    CHECK(parse_map(dir.read("u.m")).num_clauses() == 2);

    const auto no = run({"decide", "--graph", dir.file("u.g"), "--k", "4"});
    CHECK(no.code == 1);
    CHECK(no.out == "no\n");
    const auto yes = run({"decide", "--graph", dir.file("u.g"), "--k", "5", "-o", dir.file("w.s")});
    CHECK(yes.code == 0);
    CHECK(verify_schedule(parse_graph(dir.read("u.g")), parse_schedule(dir.read("w.s")), 5).valid);
}

TEST_CASE("certify, verify against the target, extract") {
    TempDir dir;
    const auto cnf = dir.write("s.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
    REQUIRE(run({"reduce", "--cnf", cnf, "-o", dir.file("s.g"), "--map", dir.file("s.m")}).code == 0);
    REQUIRE(run({"certify", "--cnf", cnf, "--assignment", "1,2,-3", "-o", dir.file("s.s")}).code == 0);
    const auto ok = run({"verify", "--graph", dir.file("s.g"), "--schedule", dir.file("s.s"), "--deadline", "8"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid completion_time=8\n");
    const auto late = run({"verify", "--graph", dir.file("s.g"), "--schedule", dir.file("s.s"), "--deadline", "7"});
    CHECK(late.code == 1);
    CHECK(late.out.find("deadline-exceeded") != std::string::npos);

    const auto extracted = run({"extract", "--schedule", dir.file("s.s"), "--map", dir.file("s.m")});
    CHECK(extracted.code == 0);
    CHECK(extracted.out == "1,2,-3\n");

    CHECK(run({"certify", "--cnf", cnf, "--assignment", "1,2,3"}).code == 1);
    CHECK(run({"certify", "--cnf", cnf, "--assignment", "1,2"}).code == 2);
}

TEST_CASE("verify exit codes") {
    TempDir dir;
    const auto g = dir.write("p.g", "p graph 3\ne 0 1\ne 1 2\n");
    const auto bad = dir.write("bad.s", "s 0 1\nc 1 0 1\nc 1 0 2\n");
    const auto invalid = run({"verify", "--graph", g, "--schedule", bad});
    CHECK(invalid.code == 1);
    CHECK(invalid.out == "invalid failure=edge-not-in-graph round=1 call=0->2\n");

    CHECK(run({"verify", "--graph", g, "--schedule", dir.write("m.s", "s 0 1\nc 5 0 1\n")}).code == 2);
    CHECK(run({"verify", "--graph", g, "--schedule", dir.write("v.s", "s 0 1\nc 1 0 7\n")}).code == 2);
    CHECK(run({"verify", "--graph", g, "--schedule", dir.file("missing.s")}).code == 2);
    CHECK(run({"verify", "--graph", dir.write("x.g", "nonsense\n"), "--schedule", bad}).code == 2);
}

TEST_CASE("heuristic") {
    TempDir dir;
    REQUIRE(run({"gen", "a-tree", "--n", "3", "-o", dir.file("a.g")}).code == 0);
    const auto h = run({"heuristic", "--graph", dir.file("a.g"), "--source", "0", "-o", dir.file("h.s")});
    CHECK(h.code == 0);
    const auto s = parse_schedule(dir.read("h.s"));
    CHECK(h.out == "completion_time " + std::to_string(s.horizon()) + "\n");
    CHECK(verify_schedule(build_a_tree(3).graph, s).valid);
}

TEST_CASE("usage errors and the node budget") {
    TempDir dir;
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gen", "path", "--n", "3", "--bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const auto cnf = dir.write("u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    REQUIRE(run({"reduce", "--cnf", cnf, "-o", dir.file("u.g"), "--map", dir.file("u.m")}).code == 0);
    CHECK(run({"decide", "--graph", dir.file("u.g"), "--k", "4", "--node-budget", "1"}).code == 3);
    CHECK(run({"--node-budget", "1", "decide", "--graph", dir.file("u.g"), "--k", "4"}).code == 3);

    ::setenv("BDMBT_NODE_BUDGET", "1", 1);
    CHECK(run({"decide", "--graph", dir.file("u.g"), "--k", "4"}).code == 3);
    CHECK(run({"decide", "--graph", dir.file("u.g"), "--k", "4", "--node-budget", "1000"}).code == 1);
    ::unsetenv("BDMBT_NODE_BUDGET");

    // Reading and writing the same path is refused.
    CHECK(run({"reduce", "--cnf", cnf, "-o", cnf, "--map", dir.file("m")}).code == 2);
}
