#pragma once

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

#include "hsvc/set_system.hpp"

// Maximum matching in general simple graphs via blossom contraction, and
// minimum edge cover derived from it by covering unmatched vertices.

namespace hsvc {

class SimpleGraph {
public:
    SimpleGraph() = default;

    SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : n_(vertex_count)
    {
        detail::check(vertex_count >= 0, "vertex count must be non-negative");
        edges_.reserve(edge_list.size());
        adj_.assign(static_cast<std::size_t>(n_), {});
        for (auto [u, v] : edge_list) {
            detail::check(u >= 0 && u < n_ && v >= 0 && v < n_,
                          "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
            detail::check(u != v, "self-loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
            const int id = static_cast<int>(edges_.size());
            for (auto [w, _] : adj_[static_cast<std::size_t>(u)])
                detail::check(w != v, "parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            edges_.emplace_back(u, v);
            adj_[static_cast<std::size_t>(u)].emplace_back(v, id);
            adj_[static_cast<std::size_t>(v)].emplace_back(u, id);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // (neighbor, edge id) pairs in edge-id order.
    const std::vector<std::pair<int, int>>& neighbors(int v) const
    {
        detail::check(v >= 0 && v < n_, "vertex out of range");
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int edge_id(int u, int v) const
    {
        if (u > v)
            std::swap(u, v);
        for (auto [w, id] : neighbors(u))
            if (w == v)
                return id;
        return -1;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

struct Matching {
    std::vector<int> edge_ids; // sorted
    int size() const { return static_cast<int>(edge_ids.size()); }
};

class no_cover_error : public std::runtime_error {
public:
    explicit no_cover_error(int v)
        : std::runtime_error("no edge cover exists: vertex " + std::to_string(v) + " is isolated")
        , vertex(v)
    {
    }
    int vertex;
};

namespace detail {

// Edmonds' blossom algorithm, O(V^3).  Vertices are scanned as augmentation
// roots in id order and adjacency lists are in edge-id order, so the output
// is deterministic.
struct BlossomSolver {
    const SimpleGraph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit BlossomSolver(const SimpleGraph& graph)
        : g(graph)
        , n(graph.vertex_count())
        , match(static_cast<std::size_t>(n), -1)
        , parent(static_cast<std::size_t>(n), -1)
        , base(static_cast<std::size_t>(n), 0)
        , used(static_cast<std::size_t>(n), 0)
        , in_blossom(static_cast<std::size_t>(n), 0)
    {
    }

    int lowest_common_base(int a, int b)
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        int v = a;
        for (;;) {
            v = base[static_cast<std::size_t>(v)];
            seen[static_cast<std::size_t>(v)] = 1;
            if (match[static_cast<std::size_t>(v)] == -1)
                break;
            v = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])];
        }
        v = b;
        for (;;) {
            v = base[static_cast<std::size_t>(v)];
            if (seen[static_cast<std::size_t>(v)])
                return v;
            v = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base[static_cast<std::size_t>(v)] != b) {
            const int mv = match[static_cast<std::size_t>(v)];
            in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
            in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(mv)])] = 1;
            parent[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent[static_cast<std::size_t>(mv)];
        }
    }

    int find_augmenting_path(int root)
    {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i)
            base[static_cast<std::size_t>(i)] = i;
        std::queue<int> q;
        q.push(root);
        used[static_cast<std::size_t>(root)] = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (auto [to, _] : g.neighbors(v)) {
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] || match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root || (match[static_cast<std::size_t>(to)] != -1 && parent[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                    // Odd cycle: contract the blossom.
                    const int cur_base = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur_base;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[static_cast<std::size_t>(to)] == -1) {
                    parent[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] == -1)
                        return to;
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = 1;
                    q.push(match[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    }

    void run()
    {
        for (int v = 0; v < n; ++v) {
            if (match[static_cast<std::size_t>(v)] != -1)
                continue;
            int u = find_augmenting_path(v);
            while (u != -1) {
                const int pv = parent[static_cast<std::size_t>(u)];
                const int ppv = match[static_cast<std::size_t>(pv)];
                match[static_cast<std::size_t>(u)] = pv;
                match[static_cast<std::size_t>(pv)] = u;
                u = ppv;
            }
        }
    }
};

} // namespace detail

inline Matching max_matching(const SimpleGraph& g)
{
    detail::BlossomSolver solver(g);
    solver.run();
    Matching result;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int w = solver.match[static_cast<std::size_t>(v)];
        if (w > v)
            result.edge_ids.push_back(g.edge_id(v, w));
    }
    std::sort(result.edge_ids.begin(), result.edge_ids.end());
    return result;
}

// Minimum edge cover: take a maximum matching and add, for every unmatched
// vertex, its smallest incident edge.  Size is vertex_count - |matching|.
inline std::vector<int> min_edge_cover(const SimpleGraph& g)
{
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw no_cover_error(v);
    const Matching m = max_matching(g);
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int id : m.edge_ids) {
        covered[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(id)].first)] = 1;
        covered[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(id)].second)] = 1;
    }
    std::vector<int> cover = m.edge_ids;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (covered[static_cast<std::size_t>(v)])
            continue;
        int best = -1;
        for (auto [_, id] : g.neighbors(v))
            if (best == -1 || id < best)
                best = id;
        cover.push_back(best);
        covered[static_cast<std::size_t>(v)] = 1;
    }
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    return cover;
}

} // namespace hsvc
