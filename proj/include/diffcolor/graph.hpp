#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "diffcolor/errors.hpp"

namespace diffcolor {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Self-loops, duplicate edges and out-of-range endpoints are rejected on
/// insertion, so every constructed Graph is simple. Edges keep insertion order.
class Graph {
public:
    Graph() = default;

    explicit Graph(int order) : adjacency_(check_order(order)) {}

    Graph(int order, std::span<const Edge> edges) : Graph(order) {
        for (const auto& e : edges) add_edge(e.u, e.v);
    }

    void add_edge(Vertex u, Vertex v) {
        if (!contains(u) || !contains(v))
            throw ValidationError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
        if (u == v) throw ValidationError("self-loop on vertex " + std::to_string(u));
        if (!keys_.insert(key(u, v)).second)
            throw ValidationError("duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
        edges_.push_back({u, v});
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool has_edge(Vertex u, Vertex v) const {
        return contains(u) && contains(v) && keys_.count(key(u, v)) != 0;
    }

    /// Component id per vertex; ids are assigned in order of each component's smallest vertex.
    std::vector<int> components() const {
        std::vector<int> comp(order(), -1);
        int next = 0;
        std::vector<Vertex> stack;
        for (Vertex root = 0; root < order(); ++root) {
            if (comp[root] >= 0) continue;
            comp[root] = next;
            stack.push_back(root);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : adjacency_[v]) {
                    if (comp[w] < 0) {
                        comp[w] = next;
                        stack.push_back(w);
                    }
                }
            }
            ++next;
        }
        return comp;
    }

    int component_count() const {
        auto comp = components();
        return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    }

    bool is_connected() const { return order() > 0 && component_count() == 1; }
    bool is_forest() const { return size() == order() - component_count(); }
    bool is_tree() const { return order() > 0 && size() == order() - 1 && is_connected(); }

private:
    static int check_order(int order) {
        if (order < 0) throw ValidationError("negative vertex count");
        return order;
    }

    static std::uint64_t key(Vertex u, Vertex v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> keys_;
};

inline void require_tree(const Graph& g) {
    if (!g.is_tree()) throw ValidationError("input is not a connected tree");
}

namespace detail {

inline std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto next = line.find(' ', pos);
        out.push_back(line.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

inline long long parse_count(std::string_view tok, int line) {
    if (tok.empty() || tok.size() > 12 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return std::stoll(std::string(tok));
}

}  // namespace detail

/// Reads the DIMACS-style graph format:
///
///     c optional comment
///     p <n> <m>
///     e <u> <v>        (m times, 1-based endpoints)
///
/// Tokens are separated by single spaces. Errors carry the offending line number.
inline Graph parse_graph(std::istream& in) {
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    long long declared_edges = 0;
    Graph g;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line == "c" || line.starts_with("c ")) continue;
        if (line.empty()) throw ParseError(line_no, "empty line");
        auto tok = detail::split_spaces(line);
        if (tok[0] == "p") {
            if (have_header) throw ParseError(line_no, "second 'p' header");
            if (tok.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
            long long n = detail::parse_count(tok[1], line_no);
            declared_edges = detail::parse_count(tok[2], line_no);
            if (n > 100'000'000) throw ParseError(line_no, "vertex count too large");
            g = Graph(static_cast<int>(n));
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header) throw ParseError(line_no, "edge before 'p' header");
            if (tok.size() != 3) throw ParseError(line_no, "edge must be 'e <u> <v>'");
            long long u = detail::parse_count(tok[1], line_no);
            long long v = detail::parse_count(tok[2], line_no);
            if (u < 1 || v < 1 || u > g.order() || v > g.order())
                throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(g.order()));
            if (g.size() >= declared_edges)
                throw ParseError(line_no, "more edges than the declared " +
                                              std::to_string(declared_edges));
            try {
                g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            } catch (const ValidationError& e) {
                throw ParseError(line_no, e.what());
            }
        } else {
            throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing 'p' header");
    if (g.size() != declared_edges)
        throw ParseError(line_no, "edge count mismatch: declared " + std::to_string(declared_edges) +
                                      ", found " + std::to_string(g.size()));
    return g;
}

inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

/// Sizes of the two color classes of a bipartite graph, larger first.
struct BipartitionSizes {
    int u_size;
    int v_size;

    int smaller() const noexcept { return v_size; }
    int total() const noexcept { return u_size + v_size; }
};

/// 2-colors every component starting from its smallest vertex.
/// Throws ValidationError on an odd cycle.
inline BipartitionSizes bipartition_sizes(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    int counts[2] = {0, 0};
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        ++counts[0];
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    ++counts[color[w]];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    throw ValidationError("graph has an odd cycle; no bipartition");
                }
            }
        }
    }
    return {std::max(counts[0], counts[1]), std::min(counts[0], counts[1])};
}

}  // namespace diffcolor
