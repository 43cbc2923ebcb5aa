#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "diffcolor/bounds.hpp"
#include "diffcolor/oracle.hpp"
#include "diffcolor/schemes.hpp"

namespace diffcolor {

using json = nlohmann::ordered_json;

inline json labeling_json(const EvaluatedLabeling& e) {
    return {{"n", e.labeling.size()}, {"labels", e.labeling.labels}, {"value", e.value}};
}

inline json scheme_json(const SchemeResult& r) {
    return {{"scheme", r.scheme},
            {"labels", r.labeling.labeling.labels},
            {"value", r.value()},
            {"guarantee", r.guarantee},
            {"optimal", to_string(r.optimal)}};
}

inline json bounds_json(const BoundReport& b) {
    json bounds = json::object();
    for (const auto& [name, value] : b.entries()) bounds[name] = value;
    return {{"bounds", bounds}, {"best", b.best}};
}

inline json exact_json(const ExactResult& r) {
    return {{"dc", r.dc},
            {"nodes", r.stats.nodes},
            {"millis", r.stats.millis},
            {"witness", r.witness.labels}};
}

/// Accepts either a labeling JSON object ({"labels": [...]}, optional "n")
/// or the plain "vertex label" format, one 1-based pair per line.
inline Labeling parse_labeling(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ValidationError(std::string("bad labeling JSON: ") + e.what());
        }
        if (!j.contains("labels") || !j["labels"].is_array())
            throw ValidationError("labeling JSON needs a \"labels\" array");
        Labeling c;
        for (const auto& x : j["labels"]) {
            if (!x.is_number_integer()) throw ValidationError("labels must be integers");
            c.labels.push_back(x.get<int>());
        }
        if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != c.size()))
            throw ValidationError("labeling JSON \"n\" disagrees with the labels array");
        return c;
    }

    std::istringstream lines(text);
    std::string line;
    std::vector<std::pair<int, int>> pairs;
    int line_no = 0;
    int max_vertex = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        int v = 0, x = 0;
        std::string rest;
        if (!(fields >> v >> x) || (fields >> rest) || v < 1)
            throw ParseError(line_no, "expected '<vertex> <label>'");
        pairs.emplace_back(v, x);
        max_vertex = std::max(max_vertex, v);
    }
    Labeling c;
    c.labels.assign(max_vertex, 0);
    for (auto [v, x] : pairs) {
        if (c.labels[v - 1] != 0) throw ValidationError("vertex " + std::to_string(v) + " labeled twice");
        c.labels[v - 1] = x;
    }
    return c;
}

/// "vertex label" per line, both 1-based.
inline void write_plain_labeling(std::ostream& out, const Labeling& c) {
    for (int v = 0; v < c.size(); ++v) out << v + 1 << ' ' << c.labels[v] << '\n';
}

/// Undirected DOT; nodes are named by 1-based vertex id and display their label if given.
inline void write_dot(std::ostream& out, const Graph& g, const Labeling* c = nullptr) {
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v + 1;
        if (c) out << " [label=\"" << c->labels.at(v) << "\"]";
        out << ";\n";
    }
    for (const auto& e : g.edges()) out << "  " << e.u + 1 << " -- " << e.v + 1 << ";\n";
    out << "}\n";
}

}  // namespace diffcolor
