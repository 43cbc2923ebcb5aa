#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "diffcolor/labeling.hpp"
#include "diffcolor/shapes.hpp"

namespace diffcolor {

enum class Optimality { proved, not_proved, unknown };

inline const char* to_string(Optimality o) noexcept {
    return o == Optimality::proved ? "proved" : "unknown";
}

struct SchemeResult {
    std::string scheme;
    EvaluatedLabeling labeling;
    /// Lower bound the construction guarantees for this instance.
    int guarantee = 0;
    Optimality optimal = Optimality::unknown;

    int value() const noexcept { return labeling.value; }
};

namespace detail {

inline int ceil_half(int x) { return (x + 1) / 2; }

/// Validates the constructed labels and pins the value against the guarantee.
inline SchemeResult finish_scheme(std::string name, const Graph& g, std::vector<int> labels,
                                  int guarantee, Optimality optimal) {
    Labeling c{std::move(labels)};
    if (auto check = is_valid_labeling(g, c); !check)
        throw SchemeError(name + " produced an invalid labeling: " + check.violation);
    auto evaluated = evaluate(g, std::move(c));
    if (g.size() > 0 && evaluated.value < guarantee)
        throw SchemeError(name + " reached " + std::to_string(evaluated.value) +
                          ", below its guarantee " + std::to_string(guarantee));
    return {std::move(name), std::move(evaluated), guarantee, optimal};
}

/// Stable order of path indices by non-increasing length.
inline std::vector<int> longest_first(const SpiderShape& shape) {
    std::vector<int> order(shape.path_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return shape.path_lengths[a] > shape.path_lengths[b];
    });
    return order;
}

}  // namespace detail

/// Optimal labeling of a regular caterpillar.
///
/// Spine vertices alternate between the lowest and the highest labels starting
/// low; each spine vertex's legs get a consecutive block from the middle range
/// on the opposite side. The value is floor(n/2) for an even spine and
/// ceil((n - Delta)/2) for an odd one, both matching the upper bound.
inline SchemeResult label_regular_caterpillar(const CaterpillarShape& shape) {
    if (!shape.is_regular()) throw ValidationError("caterpillar is not regular");
    const int delta = shape.leg_counts.front();
    if (delta < 1) throw ValidationError("regular caterpillar needs at least one leg per spine vertex");

    const int n = shape.order();
    const int s = shape.spine_length();
    std::vector<int> labels(n, 0);
    int guarantee = 0;
    if (s % 2 == 0) {
        const int k = s / 2;
        for (int pos = 1; pos <= s; ++pos) {
            const auto& legs = shape.legs[pos - 1];
            if (pos % 2 == 1) {
                const int i = (pos + 1) / 2;
                labels[shape.spine[pos - 1]] = i;
                for (int j = 0; j < delta; ++j) labels[legs[j]] = n / 2 + (i - 1) * delta + 1 + j;
            } else {
                const int i = pos / 2;
                labels[shape.spine[pos - 1]] = n - k + i;
                for (int j = 0; j < delta; ++j) labels[legs[j]] = k + (i - 1) * delta + 1 + j;
            }
        }
        guarantee = n / 2;
    } else {
        const int k = (s - 1) / 2;
        const int base = detail::ceil_half(n - delta);
        for (int pos = 1; pos <= s; ++pos) {
            const auto& legs = shape.legs[pos - 1];
            if (pos % 2 == 1) {
                const int i = (pos + 1) / 2;
                labels[shape.spine[pos - 1]] = i;
                for (int j = 0; j < delta; ++j) labels[legs[j]] = base + (i - 1) * delta + 1 + j;
            } else {
                const int i = pos / 2;
                labels[shape.spine[pos - 1]] = n - k + i;
                for (int j = 0; j < delta; ++j) labels[legs[j]] = k + (i - 1) * delta + 2 + j;
            }
        }
        guarantee = base;
    }
    return detail::finish_scheme("regular-cat", shape.to_graph(), std::move(labels), guarantee,
                                 Optimality::proved);
}

/// Optimal labeling of a spider whose paths all have even length.
///
/// The center gets 1, even levels take [2, N_e + 1] level by level, odd levels
/// take the rest. Within a level, longer paths come first. Value N_e = floor(n/2).
inline SchemeResult label_spider_all_even(const SpiderShape& shape) {
    if (!shape.all_even()) throw ValidationError("spider has a path of odd length");

    const int n = shape.order();
    const int n_even = shape.even_level_count();
    const int depth = shape.max_level();
    // same_parity_before[l] = sum of N_l' over 1 <= l' < l with l' of the same parity as l.
    std::vector<int> same_parity_before(depth + 1, 0);
    for (int l = 3; l <= depth; ++l)
        same_parity_before[l] = same_parity_before[l - 2] + shape.level_count(l - 2);

    std::vector<int> labels(n, 0);
    labels[shape.center] = 1;
    const auto order = detail::longest_first(shape);
    for (int rank = 0; rank < shape.path_count(); ++rank) {
        const auto& path = shape.paths[order[rank]];
        const int q = rank + 1;
        for (int l = 1; l <= static_cast<int>(path.size()); ++l) {
            labels[path[l - 1]] = (l % 2 == 0) ? 1 + same_parity_before[l] + q
                                               : n_even + 1 + same_parity_before[l] + q;
        }
    }
    return detail::finish_scheme("spider-even", shape.to_graph(), std::move(labels), n_even,
                                 Optimality::proved);
}

/// Optimal labeling of a spider whose paths all have odd length.
///
/// The center gets ceil(n/2). Paths sorted longest first alternate between a
/// "high start" group (odd ranks) and a "low start" group (even ranks); each
/// group zig-zags across the center label level by level. Value N_e + 1.
inline SchemeResult label_spider_all_odd(const SpiderShape& shape) {
    if (!shape.all_odd()) throw ValidationError("spider has a path of even length");

    const int n = shape.order();
    const int mid = detail::ceil_half(n);
    const int depth = shape.max_level();
    // floor_before[l] = sum over same-parity l' < l of floor(N_l'/2);
    // ceil_through[l] = sum over same-parity l' <= l of ceil(N_l'/2).
    std::vector<int> floor_before(depth + 1, 0), ceil_through(depth + 1, 0);
    for (int l = 1; l <= depth; ++l) {
        const int count = shape.level_count(l);
        const int prev_floor = l > 2 ? floor_before[l - 2] + shape.level_count(l - 2) / 2 : 0;
        floor_before[l] = prev_floor;
        ceil_through[l] = (l > 2 ? ceil_through[l - 2] : 0) + detail::ceil_half(count);
    }

    std::vector<int> labels(n, 0);
    labels[shape.center] = mid;
    const auto order = detail::longest_first(shape);
    for (int rank = 0; rank < shape.path_count(); ++rank) {
        const auto& path = shape.paths[order[rank]];
        const int pos = rank + 1;
        const bool high_start = pos % 2 == 1;
        const int q = high_start ? (pos + 1) / 2 : pos / 2;
        for (int l = 1; l <= static_cast<int>(path.size()); ++l) {
            int label = 0;
            if (l % 2 == 1)
                label = high_start ? n - ceil_through[l] + q : floor_before[l] + q;
            else
                label = high_start ? mid - ceil_through[l] + q - 1 : mid + floor_before[l] + q;
            labels[path[l - 1]] = label;
        }
    }
    return detail::finish_scheme("spider-odd", shape.to_graph(), std::move(labels),
                                 shape.even_level_count() + 1, Optimality::proved);
}

// ---------------------------------------------------------------------------
// General caterpillars

/// Where the marking phase puts a vertex.
enum class Role : std::uint8_t {
    low_spine,        ///< spine vertex labeled from the low block
    high_spine,       ///< spine vertex labeled from the high block
    middle,           ///< the single spine vertex labeled ceil(n/2)
    low_leg,          ///< leg (or pseudo-leg) of a high spine vertex, low-middle labels
    high_leg,         ///< leg (or pseudo-leg) of a low spine vertex, high-middle labels
    middle_low_leg,   ///< leg of the middle vertex taking the very lowest labels
    middle_high_leg,  ///< leg of the middle vertex taking the very highest labels
};

inline constexpr int role_count = 7;

/// Result of the marking phase of the general caterpillar scheme.
struct MarkingState {
    std::vector<Role> role;  ///< per vertex id
    /// Owning spine vertex for every vertex in a leg role (real or pseudo leg), -1 otherwise.
    std::vector<Vertex> owner;
    /// For spine vertices adopted as pseudo-legs, the adopting spine vertex; -1 otherwise.
    std::vector<Vertex> pseudo_leg_owner;
    Vertex middle = -1;
    int middle_position = -1;  ///< 0-based spine index of the middle vertex

    int count(Role r) const {
        return static_cast<int>(std::count(role.begin(), role.end(), r));
    }

    int low_total() const { return count(Role::low_spine) + count(Role::low_leg); }
    int high_total() const { return count(Role::high_spine) + count(Role::high_leg); }
};

namespace detail {

inline bool is_spine_role(Role r) { return r == Role::low_spine || r == Role::high_spine; }

inline Role opposite(Role r) {
    switch (r) {
        case Role::low_spine: return Role::high_spine;
        case Role::high_spine: return Role::low_spine;
        case Role::low_leg: return Role::high_leg;
        case Role::high_leg: return Role::low_leg;
        default: return r;
    }
}

/// The low block holds fewer than n/2 vertices and the high block at most n/2.
inline bool balanced(int low, int high, int n) { return 2 * low < n && 2 * high <= n; }

}  // namespace detail

/// Marking phase: alternate spine sides, pick the middle vertex by a right-to-left
/// balancing scan, turn legless spine vertices into pseudo-legs, and split the
/// middle vertex's legs so the low side holds ceil(n/2) labels.
inline MarkingState mark_general_caterpillar(const CaterpillarShape& shape) {
    if (!shape.is_canonical()) throw ValidationError("caterpillar shape is not canonical");
    const int n = shape.order();
    if (n < 2) throw ValidationError("general caterpillar scheme needs n >= 2");
    const int s = shape.spine_length();

    MarkingState st;
    st.role.assign(n, Role::low_spine);
    st.owner.assign(n, -1);
    st.pseudo_leg_owner.assign(n, -1);

    int low = 0, high = 0;
    for (int i = 0; i < s; ++i) {
        const bool odd_position = i % 2 == 0;
        st.role[shape.spine[i]] = odd_position ? Role::low_spine : Role::high_spine;
        for (Vertex leg : shape.legs[i]) {
            st.role[leg] = odd_position ? Role::high_leg : Role::low_leg;
            st.owner[leg] = shape.spine[i];
        }
        const int legs = shape.leg_counts[i];
        (odd_position ? low : high) += 1;
        (odd_position ? high : low) += legs;
    }

    for (int i = s - 1; i >= 0; --i) {
        const Vertex v = shape.spine[i];
        const int legs = shape.leg_counts[i];
        const bool is_low = st.role[v] == Role::low_spine;
        const int low_without = low - (is_low ? 1 : legs);
        const int high_without = high - (is_low ? legs : 1);
        if (detail::balanced(low_without, high_without, n)) {
            st.middle = v;
            st.middle_position = i;
            st.role[v] = Role::middle;
            // Provisional; the split between low and high is decided below.
            for (Vertex leg : shape.legs[i]) st.role[leg] = Role::middle_low_leg;
            low = low_without;
            high = high_without;
            break;
        }
        st.role[v] = detail::opposite(st.role[v]);
        for (Vertex leg : shape.legs[i]) st.role[leg] = detail::opposite(st.role[leg]);
        low = low_without + (is_low ? legs : 1);
        high = high_without + (is_low ? 1 : legs);
    }
    if (st.middle < 0) throw SchemeError("balancing scan found no middle vertex");
    const int m = st.middle_position;

    // Pseudo-leg pass, left to right.
    std::vector<int> pseudo_legs(s, 0);
    for (int i = 0; i + 1 < s; ++i) {
        if (i == m || shape.leg_counts[i] > 0 || pseudo_legs[i] > 0) continue;
        const Vertex v = shape.spine[i];
        const Vertex right = shape.spine[i + 1];
        st.pseudo_leg_owner[v] = right;
        ++pseudo_legs[i + 1];
        const Role right_role = st.role[right];
        if (right_role == Role::low_spine) {
            st.role[v] = Role::high_leg;
            st.owner[v] = right;
        } else if (right_role == Role::high_spine) {
            st.role[v] = Role::low_leg;
            st.owner[v] = right;
        }
    }

    // The middle vertex adopts its right neighbor if that neighbor is a pseudo-leg,
    // pulling it back onto the spine side it came from.
    if (m + 1 < s) {
        const Vertex right = shape.spine[m + 1];
        if (st.pseudo_leg_owner[right] >= 0) {
            st.pseudo_leg_owner[right] = st.middle;
            st.owner[right] = -1;
            --pseudo_legs[m + 2];
            ++pseudo_legs[m];
            st.role[right] = st.role[right] == Role::low_leg ? Role::low_spine : Role::high_spine;
            if (m > 0 && st.role[shape.spine[m - 1]] == st.role[right])
                st.role[right] = detail::opposite(st.role[right]);
        }
    }
    if (m > 0 && m + 1 < s) {
        const Role left = st.role[shape.spine[m - 1]];
        const Role right = st.role[shape.spine[m + 1]];
        if (!detail::is_spine_role(left) || !detail::is_spine_role(right) || left == right)
            throw SchemeError("middle vertex neighbors are not split across the spine sides");
    }

    low = st.low_total();
    high = st.high_total();
    if (!detail::balanced(low, high, n))
        throw SchemeError("balance condition violated after pseudo-leg assignment");
    const int middle_legs = shape.leg_counts[m];
    const int to_low = detail::ceil_half(n) - low - 1;
    const int to_high = n / 2 - high;
    if (to_low < 0 || to_high < 0 || to_low + to_high != middle_legs)
        throw SchemeError("middle vertex legs cannot balance the label totals");
    for (int j = 0; j < middle_legs; ++j) {
        const Vertex leg = shape.legs[m][j];
        st.role[leg] = j < to_low ? Role::middle_low_leg : Role::middle_high_leg;
        st.owner[leg] = st.middle;
    }
    return st;
}

/// Labeling for arbitrary caterpillars with value at least ceil(n/2) - Delta - 2.
///
/// Not optimal in general; the result records the guarantee and is checked
/// against it before returning.
inline SchemeResult label_general_caterpillar(const CaterpillarShape& shape) {
    const MarkingState st = mark_general_caterpillar(shape);
    const int n = shape.order();
    const int s = shape.spine_length();
    const int m = st.middle_position;
    const int mid = detail::ceil_half(n);
    const int n_low_spine = st.count(Role::low_spine);
    const int n_high_spine = st.count(Role::high_spine);
    const int n_mid_low = st.count(Role::middle_low_leg);
    const int n_mid_high = st.count(Role::middle_high_leg);

    std::vector<int> labels(n, 0);
    labels[st.middle] = mid;
    {
        int next_low = 1, next_high = n - n_mid_high + 1;
        for (Vertex leg : shape.legs[m])
            labels[leg] = st.role[leg] == Role::middle_low_leg ? next_low++ : next_high++;
    }

    // Spine sides. The neighbor of the middle vertex takes the label closest to
    // the middle's leg blocks; the rest follow the spine leftward from the middle,
    // wrapping around to the right end.
    auto cyclic_leftward = [&](Role side) {
        std::vector<int> positions;
        for (int i = s - 1; i >= 0; --i)
            if (st.role[shape.spine[i]] == side) positions.push_back(i);
        auto start = std::find_if(positions.begin(), positions.end(), [&](int i) { return i < m; });
        std::rotate(positions.begin(), start, positions.end());
        return positions;
    };
    auto middle_neighbor = [&](Role side) -> int {
        if (m > 0 && st.role[shape.spine[m - 1]] == side) return m - 1;
        if (m + 1 < s && st.role[shape.spine[m + 1]] == side) return m + 1;
        return -1;
    };
    {
        const int first = n_mid_low + 1;
        const int neighbor = middle_neighbor(Role::low_spine);
        int next = first;
        if (neighbor >= 0) labels[shape.spine[neighbor]] = next++;
        for (int i : cyclic_leftward(Role::low_spine))
            if (i != neighbor) labels[shape.spine[i]] = next++;
    }
    {
        const int top = n - n_mid_high;
        const int neighbor = middle_neighbor(Role::high_spine);
        int next = top - n_high_spine + 1;
        if (neighbor >= 0) labels[shape.spine[neighbor]] = top;
        for (int i : cyclic_leftward(Role::high_spine))
            if (i != neighbor) labels[shape.spine[i]] = next++;
    }

    // Legs grouped by owner; real legs first, then the pseudo-leg.
    std::vector<std::vector<Vertex>> members(n);
    for (int i = 0; i < s; ++i)
        for (Vertex leg : shape.legs[i])
            if (st.owner[leg] >= 0 && st.owner[leg] != st.middle) members[st.owner[leg]].push_back(leg);
    for (int i = 0; i < s; ++i) {
        const Vertex v = shape.spine[i];
        if (st.owner[v] >= 0) members[st.owner[v]].push_back(v);
    }

    // Owners are visited in the cyclic-leftward order, which matches increasing
    // label order except for the middle vertex's neighbors. Those sit at their
    // cyclic place so a pseudo-leg never ends up next to a spine vertex of far rank.
    {
        int next = mid + 1;
        for (int i : cyclic_leftward(Role::low_spine))
            for (Vertex leg : members[shape.spine[i]]) labels[leg] = next++;
    }
    {
        int next = mid - 1;
        auto owners = cyclic_leftward(Role::high_spine);
        for (auto it = owners.rbegin(); it != owners.rend(); ++it)
            for (Vertex leg : members[shape.spine[*it]]) labels[leg] = next--;
        if (next != n_mid_low + n_low_spine)
            throw SchemeError("low leg block does not fill its interval");
    }

    return detail::finish_scheme("general-cat", shape.to_graph(), std::move(labels),
                                 mid - shape.max_legs() - 2, Optimality::not_proved);
}

/// Value of the Miller-Pritikin forest labeling: the smaller bipartition class.
inline int mp_value(const Graph& g) {
    if (!g.is_forest()) throw ValidationError("Miller-Pritikin value needs a forest");
    return bipartition_sizes(g).smaller();
}

}  // namespace diffcolor
