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

#include "bdmbt/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "bdmbt/errors.hpp"
#include "text_util.hpp"

namespace bdmbt {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges, std::map<VertexId, std::string> labels)
    : adjacency_(vertex_count), labels_(std::move(labels)) {
    for (const auto &[u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an endpoint outside 0.." + std::to_string(vertex_count) + "-1");
        }
        if (u == v) {
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto &adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        edge_count_ += adj.size();
    }
    edge_count_ /= 2;
    for (const auto &[v, name] : labels_) {
        if (v >= vertex_count) {
            throw InvalidInput("label for vertex " + std::to_string(v) + " which does not exist");
        }
    }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u >= adjacency_.size() || v >= adjacency_.size()) {
        return false;
    }
    const auto &adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::optional<std::string> Graph::label(VertexId v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<VertexId> Graph::find_label(const std::string &label) const {
    for (const auto &[v, name] : labels_) {
        if (name == label) {
            return v;
        }
    }
    return std::nullopt;
}

std::vector<int> bfs_distances(const Graph &g, std::span<const VertexId> sources) {
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    for (VertexId s : sources) {
        if (s >= g.vertex_count()) {
            throw InvalidInput("source " + std::to_string(s) + " out of range");
        }
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> bfs_distances(const Graph &g, VertexId source) {
    const VertexId sources[] = {source};
    return bfs_distances(g, std::span<const VertexId>(sources));
}

int eccentricity(const Graph &g, VertexId source) {
    const auto dist = bfs_distances(g, source);
    return *std::max_element(dist.begin(), dist.end());
}

std::size_t max_degree(const Graph &g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

bool is_connected(const Graph &g) {
    if (g.vertex_count() == 0) {
        return true;
    }
    const auto dist = bfs_distances(g, VertexId{0});
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

bool is_tree(const Graph &g) {
    return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) {
        edges.emplace_back(v - 1, v);
    }
    return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        throw InvalidInput("a simple cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    }
    return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, v);
    }
    return Graph(leaves + 1, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph parse_graph(std::istream &in) {
    std::optional<std::size_t> vertex_count;
    std::vector<Edge> edges;
    std::map<VertexId, std::string> labels;

    detail::LineReader reader(in);
    while (auto line = reader.next()) {
        auto tokens = detail::split(*line);
        const std::string &kind = tokens[0];
        if (kind == "p") {
            if (vertex_count) {
                throw ParseError(reader.line_number(), "duplicate 'p graph' header");
            }
            if (tokens.size() != 3 || tokens[1] != "graph") {
                throw ParseError(reader.line_number(), "expected 'p graph <vertex_count>'");
            }
            vertex_count = detail::parse_unsigned(tokens[2], reader.line_number());
            continue;
        }
        if (!vertex_count) {
            throw ParseError(reader.line_number(), "'p graph' header must come first");
        }
        if (kind == "e") {
            if (tokens.size() != 3) {
                throw ParseError(reader.line_number(), "expected 'e <u> <v>'");
            }
            const auto u = detail::parse_unsigned(tokens[1], reader.line_number());
            const auto v = detail::parse_unsigned(tokens[2], reader.line_number());
            if (u >= *vertex_count || v >= *vertex_count) {
                throw ParseError(reader.line_number(), "edge endpoint out of range");
            }
            if (u == v) {
                throw ParseError(reader.line_number(), "self-loop");
            }
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } else if (kind == "n") {
            if (tokens.size() != 3) {
                throw ParseError(reader.line_number(), "expected 'n <id> <label>'");
            }
            const auto v = detail::parse_unsigned(tokens[1], reader.line_number());
            if (v >= *vertex_count) {
                throw ParseError(reader.line_number(), "label for vertex out of range");
            }
            if (!labels.emplace(static_cast<VertexId>(v), tokens[2]).second) {
                throw ParseError(reader.line_number(), "vertex labelled twice");
            }
        } else {
            throw ParseError(reader.line_number(), "unknown line type '" + kind + "'");
        }
    }
    if (!vertex_count) {
        throw ParseError("missing 'p graph' header");
    }
    return Graph(*vertex_count, edges, std::move(labels));
}

Graph parse_graph(const std::string &text) {
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(std::ostream &out, const Graph &g) {
    out << "p graph " << g.vertex_count() << '\n';
    for (const auto &[v, name] : g.labels()) {
        out << "n " << v << ' ' << name << '\n';
    }
    for (const auto &[u, v] : g.edges()) {
        out << "e " << u << ' ' << v << '\n';
    }
}

std::string serialize_graph(const Graph &g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace bdmbt
