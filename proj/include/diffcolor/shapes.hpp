#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "diffcolor/graph.hpp"

namespace diffcolor {

/// A caterpillar seen as its spine path plus the legs hanging off each spine vertex.
///
/// Vertex ids refer to the source tree. In canonical form both spine endpoints
/// carry at least one leg whenever the spine has two or more vertices.
struct CaterpillarShape {
    std::vector<int> leg_counts;
    std::vector<Vertex> spine;
    std::vector<std::vector<Vertex>> legs;

    int spine_length() const noexcept { return static_cast<int>(leg_counts.size()); }

    int order() const noexcept {
        return spine_length() + std::accumulate(leg_counts.begin(), leg_counts.end(), 0);
    }

    /// Largest leg count over the spine (the caterpillar's Delta).
    int max_legs() const noexcept {
        return leg_counts.empty() ? 0 : *std::max_element(leg_counts.begin(), leg_counts.end());
    }

    bool is_regular() const noexcept {
        return !leg_counts.empty() &&
               std::all_of(leg_counts.begin(), leg_counts.end(),
                           [&](int c) { return c == leg_counts.front(); });
    }

    bool is_canonical() const noexcept {
        if (leg_counts.empty()) return false;
        if (std::any_of(leg_counts.begin(), leg_counts.end(), [](int c) { return c < 0; }))
            return false;
        return spine_length() == 1 || (leg_counts.front() >= 1 && leg_counts.back() >= 1);
    }

    /// Rebuilds the tree with the same vertex ids.
    Graph to_graph() const {
        Graph g(order());
        for (std::size_t i = 0; i + 1 < spine.size(); ++i) g.add_edge(spine[i], spine[i + 1]);
        for (std::size_t i = 0; i < spine.size(); ++i)
            for (Vertex leg : legs[i]) g.add_edge(spine[i], leg);
        return g;
    }
};

/// A center joined to p disjoint paths. paths[j][l-1] is the vertex at level l of path j.
struct SpiderShape {
    std::vector<int> path_lengths;
    Vertex center = 0;
    std::vector<std::vector<Vertex>> paths;

    int path_count() const noexcept { return static_cast<int>(path_lengths.size()); }

    int order() const noexcept {
        return 1 + std::accumulate(path_lengths.begin(), path_lengths.end(), 0);
    }

    int max_level() const noexcept {
        return path_lengths.empty()
                   ? 0
                   : *std::max_element(path_lengths.begin(), path_lengths.end());
    }

    /// Number of vertices at distance `level` from the center (N_l).
    int level_count(int level) const noexcept {
        if (level <= 0) return level == 0 ? 1 : 0;
        return static_cast<int>(std::count_if(path_lengths.begin(), path_lengths.end(),
                                              [&](int len) { return len >= level; }));
    }

    /// Vertices at even levels >= 2 (N_e). The center is not counted.
    int even_level_count() const noexcept {
        int total = 0;
        for (int len : path_lengths) total += len / 2;
        return total;
    }

    /// Vertices at odd levels (N_o).
    int odd_level_count() const noexcept {
        int total = 0;
        for (int len : path_lengths) total += (len + 1) / 2;
        return total;
    }

    bool all_even() const noexcept {
        return !path_lengths.empty() &&
               std::all_of(path_lengths.begin(), path_lengths.end(),
                           [](int len) { return len % 2 == 0; });
    }

    bool all_odd() const noexcept {
        return !path_lengths.empty() &&
               std::all_of(path_lengths.begin(), path_lengths.end(),
                           [](int len) { return len % 2 == 1; });
    }

    Graph to_graph() const {
        Graph g(order());
        for (const auto& path : paths) {
            Vertex prev = center;
            for (Vertex v : path) {
                g.add_edge(prev, v);
                prev = v;
            }
        }
        return g;
    }
};

/// Leaf removal: returns the spine-and-legs decomposition, or nullopt if the
/// leaves do not hang off a single path.
///
/// The spine starts at the endpoint with the smaller vertex id. n = 1 gives a
/// legless single spine vertex; n = 2 makes the smaller id the spine.
inline std::optional<CaterpillarShape> recognize_caterpillar(const Graph& g) {
    require_tree(g);
    const int n = g.order();
    CaterpillarShape shape;
    if (n == 1) {
        shape.leg_counts = {0};
        shape.spine = {0};
        shape.legs = {{}};
        return shape;
    }
    if (n == 2) {
        shape.leg_counts = {1};
        shape.spine = {0};
        shape.legs = {{1}};
        return shape;
    }

    std::vector<bool> on_spine(n);
    for (Vertex v = 0; v < n; ++v) on_spine[v] = g.degree(v) > 1;

    std::vector<int> spine_degree(n, 0);
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (!on_spine[v]) continue;
        for (Vertex w : g.neighbors(v)) spine_degree[v] += on_spine[w] ? 1 : 0;
        if (spine_degree[v] > 2) return std::nullopt;
        if (spine_degree[v] <= 1 && start < 0) start = v;
    }
    // The remainder of a tree after leaf removal is a tree; max degree 2 makes it a path.
    Vertex prev = -1;
    for (Vertex cur = start; cur >= 0;) {
        shape.spine.push_back(cur);
        std::vector<Vertex> legs;
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur)) {
            if (!on_spine[w])
                legs.push_back(w);
            else if (w != prev)
                next = w;
        }
        std::sort(legs.begin(), legs.end());
        shape.leg_counts.push_back(static_cast<int>(legs.size()));
        shape.legs.push_back(std::move(legs));
        prev = cur;
        cur = next;
    }
    return shape;
}

/// Finds the unique vertex of degree >= 3 and walks its arms.
///
/// A path on n >= 3 vertices is accepted with two arms around its most
/// balanced interior vertex (smaller id on ties). K_1 and K_2 are rejected.
/// Arms are listed in increasing order of the center's neighbor ids.
inline std::optional<SpiderShape> recognize_spider(const Graph& g) {
    require_tree(g);
    const int n = g.order();
    if (n < 3) return std::nullopt;

    Vertex center = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) >= 3) {
            if (center >= 0) return std::nullopt;
            center = v;
        }
    }
    if (center < 0) {
        // Path: walk from the smaller-id endpoint and pick the most balanced interior vertex.
        Vertex end = -1;
        for (Vertex v = 0; v < n && end < 0; ++v)
            if (g.degree(v) == 1) end = v;
        std::vector<Vertex> order;
        for (Vertex cur = end, prev = -1; cur >= 0;) {
            order.push_back(cur);
            Vertex next = -1;
            for (Vertex w : g.neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
        }
        int best_skew = n;
        for (int i = 1; i + 1 < n; ++i) {
            int skew = std::abs(i - (n - 1 - i));
            if (skew < best_skew || (skew == best_skew && order[i] < center)) {
                best_skew = skew;
                center = order[i];
            }
        }
    }

    SpiderShape shape;
    shape.center = center;
    std::vector<Vertex> arms(g.neighbors(center).begin(), g.neighbors(center).end());
    std::sort(arms.begin(), arms.end());
    for (Vertex first : arms) {
        std::vector<Vertex> path;
        for (Vertex cur = first, prev = center; cur >= 0;) {
            path.push_back(cur);
            Vertex next = -1;
            for (Vertex w : g.neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
        }
        shape.path_lengths.push_back(static_cast<int>(path.size()));
        shape.paths.push_back(std::move(path));
    }
    return shape;
}

}  // namespace diffcolor
