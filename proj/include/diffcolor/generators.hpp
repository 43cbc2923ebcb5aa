#pragma once

#include <random>
#include <span>
#include <vector>

#include "diffcolor/shapes.hpp"

namespace diffcolor {

struct GeneratedCaterpillar {
    Graph graph;
    CaterpillarShape shape;
};

struct GeneratedSpider {
    Graph graph;
    SpiderShape shape;
};

/// Spine vertices get ids 0..s-1 in spine order, legs follow spine by spine.
inline GeneratedCaterpillar gen_caterpillar(std::span<const int> leg_counts) {
    if (leg_counts.empty()) throw ValidationError("caterpillar needs at least one spine vertex");
    for (int c : leg_counts)
        if (c < 0) throw ValidationError("negative leg count");
    if (leg_counts.size() >= 2 && (leg_counts.front() == 0 || leg_counts.back() == 0))
        throw ValidationError("spine endpoints must carry at least one leg");

    CaterpillarShape shape;
    shape.leg_counts.assign(leg_counts.begin(), leg_counts.end());
    const int s = shape.spine_length();
    Vertex next = s;
    for (int i = 0; i < s; ++i) {
        shape.spine.push_back(i);
        std::vector<Vertex> legs;
        for (int j = 0; j < leg_counts[i]; ++j) legs.push_back(next++);
        shape.legs.push_back(std::move(legs));
    }
    Graph graph = shape.to_graph();
    return {std::move(graph), std::move(shape)};
}

inline GeneratedCaterpillar gen_regular_caterpillar(int spine, int legs) {
    if (spine < 1 || legs < 1)
        throw ValidationError("regular caterpillar needs spine >= 1 and legs >= 1");
    std::vector<int> counts(spine, legs);
    return gen_caterpillar(counts);
}

/// 2k+1 spine vertices; odd positions carry 1 leg, even positions carry `delta` legs.
/// This is the family on which the bipartition value stays at 2k+1 while n grows with delta.
inline GeneratedCaterpillar gen_alternating_caterpillar(int k, int delta) {
    if (k < 0 || delta < 0) throw ValidationError("k and delta must be non-negative");
    std::vector<int> counts(2 * k + 1);
    for (int i = 0; i < 2 * k + 1; ++i) counts[i] = (i % 2 == 0) ? 1 : delta;
    return gen_caterpillar(counts);
}

/// Random canonical caterpillar: spine length uniform in [1, max_spine], each
/// leg count uniform in [0, max_legs] with the endpoints drawn from [1, max_legs].
template <class Rng>
GeneratedCaterpillar gen_random_caterpillar(Rng& rng, int max_spine, int max_legs) {
    if (max_spine < 1 || max_legs < 1)
        throw ValidationError("random caterpillar needs max_spine >= 1 and max_legs >= 1");
    std::uniform_int_distribution<int> spine_dist(1, max_spine);
    std::uniform_int_distribution<int> inner(0, max_legs);
    std::uniform_int_distribution<int> outer(1, max_legs);
    const int s = spine_dist(rng);
    std::vector<int> counts(s);
    for (int i = 0; i < s; ++i) counts[i] = (i == 0 || i == s - 1) ? outer(rng) : inner(rng);
    return gen_caterpillar(counts);
}

/// Center is vertex 0; path j occupies the next path_lengths[j] ids, level 1 first.
inline GeneratedSpider gen_spider(std::span<const int> path_lengths) {
    if (path_lengths.empty()) throw ValidationError("spider needs at least one path");
    SpiderShape shape;
    shape.center = 0;
    Vertex next = 1;
    for (int len : path_lengths) {
        if (len < 1) throw ValidationError("spider path lengths must be positive");
        std::vector<Vertex> path;
        for (int l = 0; l < len; ++l) path.push_back(next++);
        shape.path_lengths.push_back(len);
        shape.paths.push_back(std::move(path));
    }
    Graph graph = shape.to_graph();
    return {std::move(graph), std::move(shape)};
}

/// Spider with `paths` arms of length `radius`.
inline GeneratedSpider gen_radius_star(int radius, int paths) {
    if (paths < 1) throw ValidationError("radius star needs at least one path");
    std::vector<int> lengths(paths, radius);
    return gen_spider(lengths);
}

inline Graph gen_path(int n) {
    if (n < 1) throw ValidationError("path needs at least one vertex");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace diffcolor
