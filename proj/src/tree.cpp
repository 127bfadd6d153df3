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

#include <algorithm>
#include <functional>

#include "bdmbt/errors.hpp"
#include "bdmbt/solver.hpp"

namespace bdmbt {

int tree_broadcast_time(const Graph &g, VertexId source) {
    if (source >= g.vertex_count()) {
        throw InvalidInput("source " + std::to_string(source) + " is not a vertex");
    }
    if (!is_tree(g)) {
        throw InvalidInput("tree_broadcast_time needs a tree");
    }
    const std::size_t n = g.vertex_count();
    const auto none = static_cast<VertexId>(n);
    std::vector<VertexId> parent(n, none);
    std::vector<VertexId> order{source};
    order.reserve(n);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const VertexId u = order[head];
        for (VertexId w : g.neighbors(u)) {
            if (w != source && w != parent[u]) {
                parent[w] = u;
                order.push_back(w);
            }
        }
    }

    std::vector<int> value(n, 0);
    std::vector<std::vector<int>> child_values(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const VertexId u = *it;
        auto &children = child_values[u];
        std::sort(children.begin(), children.end(), std::greater<>());
        int best = 0;
        for (std::size_t i = 0; i < children.size(); ++i) {
            best = std::max(best, static_cast<int>(i + 1) + children[i]);
        }
        value[u] = best;
        if (u != source) {
            child_values[parent[u]].push_back(best);
        }
    }
    return value[source];
}

} // namespace bdmbt
