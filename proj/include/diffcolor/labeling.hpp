#pragma once

#include <algorithm>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "diffcolor/graph.hpp"

namespace diffcolor {

/// labels[v] is the label of vertex v, in 1..n for a valid labeling.
struct Labeling {
    std::vector<int> labels;

    int size() const noexcept { return static_cast<int>(labels.size()); }
    int operator[](Vertex v) const { return labels.at(v); }

    /// x -> n + 1 - x.
    Labeling complement() const {
        Labeling out{labels};
        const int n = size();
        for (int& x : out.labels) x = n + 1 - x;
        return out;
    }

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

struct LabelingCheck {
    bool valid = true;
    std::string violation;

    explicit operator bool() const noexcept { return valid; }
};

/// Reports the first reason `c` is not a bijection onto {1..n} for `g`.
inline LabelingCheck is_valid_labeling(const Graph& g, const Labeling& c) {
    const int n = g.order();
    if (c.size() != n)
        return {false, "labeling has " + std::to_string(c.size()) + " entries, graph has " +
                           std::to_string(n) + " vertices"};
    std::vector<Vertex> owner(n + 1, -1);
    for (Vertex v = 0; v < n; ++v) {
        int x = c.labels[v];
        if (x < 1 || x > n)
            return {false, "label " + std::to_string(x) + " of vertex " + std::to_string(v + 1) +
                               " is out of range 1.." + std::to_string(n)};
        if (owner[x] >= 0)
            return {false, "duplicate label " + std::to_string(x) + " on vertices " +
                               std::to_string(owner[x] + 1) + " and " + std::to_string(v + 1)};
        owner[x] = v;
    }
    return {};
}

/// Minimum |c(u) - c(v)| over the edges; n for an edgeless graph.
inline int differential_value(const Graph& g, const Labeling& c) {
    if (auto check = is_valid_labeling(g, c); !check) throw ValidationError(check.violation);
    int best = g.order();
    for (const auto& e : g.edges()) best = std::min(best, std::abs(c.labels[e.u] - c.labels[e.v]));
    return best;
}

struct EvaluatedLabeling {
    Labeling labeling;
    int value = 0;
};

inline EvaluatedLabeling evaluate(const Graph& g, Labeling c) {
    int value = differential_value(g, c);
    return {std::move(c), value};
}

}  // namespace diffcolor
