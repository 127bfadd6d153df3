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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bdmbt {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr int kUnreachable = -1;

/// Immutable simple undirected graph on dense ids 0..vertex_count-1.
///
/// Adjacency lists are sorted and symmetric. Duplicate or reversed edges
/// passed to the constructor collapse to one edge; self-loops are rejected.
class Graph {
  public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::span<const Edge> edges,
          std::map<VertexId, std::string> labels = {});
    Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    bool has_edge(VertexId u, VertexId v) const;

    /// Edges as (min, max) pairs sorted lexicographically.
    std::vector<Edge> edges() const;

    const std::map<VertexId, std::string> &labels() const { return labels_; }
    std::optional<std::string> label(VertexId v) const;
    std::optional<VertexId> find_label(const std::string &label) const;

    bool operator==(const Graph &other) const = default;

  private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::map<VertexId, std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Hop distances from `source`; kUnreachable for vertices in other components.
std::vector<int> bfs_distances(const Graph &g, VertexId source);

/// Hop distance from the nearest vertex of `sources`.
std::vector<int> bfs_distances(const Graph &g, std::span<const VertexId> sources);

std::size_t max_degree(const Graph &g);
bool is_connected(const Graph &g);
bool is_tree(const Graph &g);

/// Largest finite BFS distance from `source`.
int eccentricity(const Graph &g, VertexId source);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);

// Line format: "p graph N", optional "n <id> <label>", "e <u> <v>"; '#' comments.
Graph parse_graph(std::istream &in);
Graph parse_graph(const std::string &text);
void write_graph(std::ostream &out, const Graph &g);
std::string serialize_graph(const Graph &g);

} // namespace bdmbt
