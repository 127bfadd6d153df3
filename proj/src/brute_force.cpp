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

#include <unordered_set>

#include "bdmbt/errors.hpp"
#include "bdmbt/solver.hpp"

namespace bdmbt {

namespace {

using Mask = std::uint32_t;

// Every matching between `informed` and its uninformed neighbours, the empty
// one included, added to `out` as the resulting informed set.
void expand_all_matchings(const Graph &g, Mask informed, VertexId next_caller, Mask claimed,
                          std::unordered_set<Mask> &out) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    while (next_caller < n && !((informed >> next_caller) & 1U)) {
        ++next_caller;
    }
    if (next_caller == n) {
        out.insert(informed | claimed);
        return;
    }
    expand_all_matchings(g, informed, next_caller + 1, claimed, out);
    for (VertexId w : g.neighbors(next_caller)) {
        const Mask bit = Mask{1} << w;
        if ((informed & bit) || (claimed & bit)) {
            continue;
        }
        expand_all_matchings(g, informed, next_caller + 1, claimed | bit, out);
    }
}

} // namespace

int brute_force_broadcast_time(const Graph &g, VertexId source) {
    const std::size_t n = g.vertex_count();
    if (n > kBruteForceMaxVertices) {
        throw InvalidInput("brute force is limited to " + std::to_string(kBruteForceMaxVertices) + " vertices");
    }
    if (source >= n) {
        throw InvalidInput("source " + std::to_string(source) + " is not a vertex");
    }
    if (!is_connected(g)) {
        throw InvalidInput("graph must be connected");
    }
    const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);

    std::unordered_set<Mask> seen{Mask{1} << source};
    std::vector<Mask> level{Mask{1} << source};
    for (int round = 0;; ++round) {
        for (Mask s : level) {
            if (s == full) {
                return round;
            }
        }
        std::vector<Mask> next;
        for (Mask s : level) {
            std::unordered_set<Mask> successors;
            expand_all_matchings(g, s, 0, 0, successors);
            for (Mask t : successors) {
                if (seen.insert(t).second) {
                    next.push_back(t);
                }
            }
        }
        level = std::move(next);
    }
}

} // namespace bdmbt
