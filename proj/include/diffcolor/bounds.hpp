#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffcolor/shapes.hpp"

namespace diffcolor {

/// Upper bounds on the differential chromatic number of a connected graph.
struct BoundReport {
    int thm1 = 0;             ///< floor(n/2), any connected graph
    std::optional<int> thm2;  ///< regular caterpillars
    std::optional<int> thm3;  ///< spiders: N_e + 1
    int best = 0;

    std::vector<std::pair<std::string, int>> entries() const {
        std::vector<std::pair<std::string, int>> out{{"thm1", thm1}};
        if (thm2) out.emplace_back("thm2", *thm2);
        if (thm3) out.emplace_back("thm3", *thm3);
        return out;
    }
};

/// Regular caterpillar bound: floor(n/2) with an even spine, ceil((n - Delta)/2) with an odd one.
inline int regular_caterpillar_bound(int spine, int legs) {
    const int n = spine * (legs + 1);
    return spine % 2 == 0 ? n / 2 : (n - legs + 1) / 2;
}

inline int spider_bound(const SpiderShape& shape) { return shape.even_level_count() + 1; }

/// Collects every bound whose graph class the recognizers confirm.
///
/// The spider bound is only reported for spiders with a center of degree >= 3;
/// a bare path has no distinguished center.
inline BoundReport upper_bound_report(const Graph& g) {
    if (g.order() < 2) throw ValidationError("bounds need at least two vertices");
    if (!g.is_connected()) throw ValidationError("bounds need a connected graph");

    BoundReport report;
    report.thm1 = g.order() / 2;
    report.best = report.thm1;
    if (!g.is_tree()) return report;

    if (auto cat = recognize_caterpillar(g); cat && cat->is_regular() && cat->max_legs() >= 1) {
        report.thm2 = regular_caterpillar_bound(cat->spine_length(), cat->max_legs());
        report.best = std::min(report.best, *report.thm2);
    }
    if (auto spider = recognize_spider(g); spider && spider->path_count() >= 3) {
        report.thm3 = spider_bound(*spider);
        report.best = std::min(report.best, *report.thm3);
    }
    return report;
}

}  // namespace diffcolor
