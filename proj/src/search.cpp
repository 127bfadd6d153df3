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

#include "search.hpp"

#include <algorithm>
#include <unordered_set>

#include "bdmbt/errors.hpp"

namespace bdmbt::detail {

namespace {

// Bipartite matching between informed callers and a chosen set of callees.
class Matcher {
  public:
    Matcher(const Graph &g, const VertexSet &informed)
        : g_(g), informed_(informed), owner_(g.vertex_count(), -1), seen_(g.vertex_count(), 0) {}

    std::size_t match(const std::vector<VertexId> &callees) {
        for (VertexId c : touched_) {
            owner_[c] = -1;
        }
        touched_.clear();
        std::size_t size = 0;
        for (VertexId callee : callees) {
            ++stamp_;
            if (augment(callee)) {
                ++size;
            }
        }
        return size;
    }

    Move assignment() const {
        Move move;
        for (VertexId c : touched_) {
            if (owner_[c] >= 0) {
                move.emplace_back(c, static_cast<VertexId>(owner_[c]));
            }
        }
        std::sort(move.begin(), move.end());
        return move;
    }

  private:
    bool augment(VertexId callee) {
        for (VertexId c : g_.neighbors(callee)) {
            if (!informed_.test(c) || seen_[c] == stamp_) {
                continue;
            }
            seen_[c] = stamp_;
            if (owner_[c] < 0) {
                touched_.push_back(c);
                owner_[c] = static_cast<int>(callee);
                return true;
            }
            if (augment(static_cast<VertexId>(owner_[c]))) {
                owner_[c] = static_cast<int>(callee);
                return true;
            }
        }
        return false;
    }

    const Graph &g_;
    const VertexSet &informed_;
    std::vector<int> owner_;
    std::vector<unsigned> seen_;
    std::vector<VertexId> touched_;
    unsigned stamp_ = 0;
};

class BasisEnumerator {
  public:
    BasisEnumerator(const Graph &g, const VertexSet &informed, std::vector<VertexId> boundary)
        : matcher_(g, informed), boundary_(std::move(boundary)) {}

    std::vector<Move> run() {
        rank_ = matcher_.match(boundary_);
        std::vector<VertexId> chosen;
        recurse(0, chosen);
        return std::move(moves_);
    }

  private:
    void recurse(std::size_t idx, std::vector<VertexId> &chosen) {
        if (chosen.size() == rank_) {
            matcher_.match(chosen);
            moves_.push_back(matcher_.assignment());
            return;
        }
        if (idx == boundary_.size()) {
            return;
        }
        chosen.push_back(boundary_[idx]);
        if (matcher_.match(chosen) == chosen.size()) {
            recurse(idx + 1, chosen);
        }
        chosen.pop_back();

        // Skipping boundary_[idx] is only useful if a basis still fits in what is left.
        std::vector<VertexId> rest = chosen;
        rest.insert(rest.end(), boundary_.begin() + static_cast<std::ptrdiff_t>(idx) + 1, boundary_.end());
        if (matcher_.match(rest) >= rank_) {
            recurse(idx + 1, chosen);
        }
    }

    Matcher matcher_;
    std::vector<VertexId> boundary_;
    std::size_t rank_ = 0;
    std::vector<Move> moves_;
};

} // namespace

std::vector<Move> enumerate_moves(const Graph &g, const VertexSet &informed, const std::vector<int> &dist) {
    const std::size_t n = g.vertex_count();
    int max_dist = 0;
    for (int d : dist) {
        max_dist = std::max(max_dist, d);
    }
    std::vector<std::vector<VertexId>> layers(static_cast<std::size_t>(max_dist) + 1);
    for (VertexId v = 0; v < n; ++v) {
        if (dist[v] > 0) {
            layers[static_cast<std::size_t>(dist[v])].push_back(v);
        }
    }
    // depth[v]: longest descent through strictly increasing BFS layers below v.
    std::vector<int> depth(n, 0);
    for (int d = max_dist; d >= 2; --d) {
        for (VertexId w : layers[static_cast<std::size_t>(d)]) {
            for (VertexId x : g.neighbors(w)) {
                if (dist[x] == d - 1) {
                    depth[x] = std::max(depth[x], depth[w] + 1);
                }
            }
        }
    }
    std::vector<VertexId> boundary = max_dist >= 1 ? layers[1] : std::vector<VertexId>{};
    std::stable_sort(boundary.begin(), boundary.end(),
                     [&](VertexId a, VertexId b) { return depth[a] > depth[b]; });
    return BasisEnumerator(g, informed, std::move(boundary)).run();
}

Searcher::Searcher(const Graph &g, int deadline, std::atomic<std::uint64_t> &nodes, std::uint64_t budget,
                   std::function<bool()> cancelled)
    : g_(g), deadline_(deadline), nodes_(nodes), budget_(budget), cancelled_(std::move(cancelled)) {}

bool Searcher::feasible(const Graph &g, const VertexSet &informed, int remaining, std::vector<int> &dist) {
    const std::size_t n = g.vertex_count();
    const std::size_t count = informed.count();
    if (count == n) {
        dist.assign(n, 0);
        return true;
    }
    if (remaining <= 0) {
        return false;
    }
    // At most doubling per round.
    if (remaining < 63 && (count << remaining) < n) {
        return false;
    }
    std::vector<VertexId> sources;
    sources.reserve(count);
    for (VertexId v = 0; v < n; ++v) {
        if (informed.test(v)) {
            sources.push_back(v);
        }
    }
    dist = bfs_distances(g, std::span<const VertexId>(sources));
    return std::all_of(dist.begin(), dist.end(), [&](int d) { return d != kUnreachable && d <= remaining; });
}

bool Searcher::run(const SearchState &start) {
    calls_ = start.calls;
    VertexSet informed = start.informed;
    return search(informed, start.round);
}

bool Searcher::search(VertexSet &informed, int round) {
    if (cancelled_ && cancelled_()) {
        throw SearchCancelled{};
    }
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
        throw BudgetExceeded(budget_);
    }
    if (informed.count() == g_.vertex_count()) {
        finish_round_ = round;
        return true;
    }
    if (auto it = memo_.find(informed); it != memo_.end() && it->second <= round) {
        return false;
    }
    auto remember = [&] {
        if (memo_.size() < kMemoCap) {
            memo_[informed] = round;
        }
    };

    std::vector<int> dist;
    if (!feasible(g_, informed, deadline_ - round, dist)) {
        remember();
        return false;
    }
    for (const Move &move : enumerate_moves(g_, informed, dist)) {
        VertexSet next = informed;
        for (const auto &[caller, callee] : move) {
            next.set(callee);
            calls_.push_back(Call{round + 1, caller, callee});
        }
        if (search(next, round + 1)) {
            return true;
        }
        calls_.resize(calls_.size() - move.size());
    }
    remember();
    return false;
}

std::vector<SearchState> split_frontier(const Graph &g, const SearchState &root, int deadline, std::size_t min_tasks,
                                        std::atomic<std::uint64_t> &nodes, std::uint64_t budget) {
    std::vector<SearchState> current{root};
    const std::size_t n = g.vertex_count();
    while (true) {
        std::size_t open = 0;
        for (const auto &s : current) {
            open += s.informed.count() < n ? 1 : 0;
        }
        if (open == 0 || current.size() >= min_tasks) {
            return current;
        }
        std::vector<SearchState> next;
        std::unordered_set<VertexSet, VertexSetHash> seen;
        for (const auto &s : current) {
            if (s.informed.count() == n) {
                next.push_back(s);
                continue;
            }
            if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
                throw BudgetExceeded(budget);
            }
            std::vector<int> dist;
            if (!Searcher::feasible(g, s.informed, deadline - s.round, dist)) {
                continue;
            }
            for (const Move &move : enumerate_moves(g, s.informed, dist)) {
                SearchState child{s.informed, s.round + 1, s.calls};
                for (const auto &[caller, callee] : move) {
                    child.informed.set(callee);
                    child.calls.push_back(Call{s.round + 1, caller, callee});
                }
                if (seen.insert(child.informed).second) {
                    next.push_back(std::move(child));
                }
            }
        }
        current = std::move(next);
        if (current.empty()) {
            return current;
        }
    }
}

} // namespace bdmbt::detail
