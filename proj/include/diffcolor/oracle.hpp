#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "diffcolor/bounds.hpp"
#include "diffcolor/labeling.hpp"

namespace diffcolor {

struct OracleOptions {
    /// Refuse graphs with more vertices than this.
    int max_order = 16;
    /// Zero means no limit.
    std::chrono::milliseconds timeout{0};
    /// Worker threads for the root branching; 1 runs the reference sequential search.
    int threads = 1;
    /// First value tried by exact_dc. Defaults to the best known upper bound.
    std::optional<int> ceiling;
    /// Cap on remembered dead states per search.
    std::size_t memo_limit = 1u << 22;
};

struct OracleStats {
    std::uint64_t nodes = 0;
    std::int64_t millis = 0;
};

struct ExactResult {
    int dc = 0;
    Labeling witness;
    OracleStats stats;
};

namespace detail {

inline constexpr int oracle_hard_limit = 64;

using Clock = std::chrono::steady_clock;

/// Assigns labels 1, 2, ..., n in order. Label t may go to v only if no
/// neighbor of v holds one of the previous d - 1 labels; later neighbors are
/// checked when they are placed. A dead state is identified by the placed set
/// plus the vertices holding the last d - 1 labels, since nothing else
/// influences the remaining search.
class DecisionSearch {
public:
    DecisionSearch(const Graph& g, int d, std::size_t memo_limit,
                   std::optional<Clock::time_point> deadline,
                   const std::atomic<int>* best_root = nullptr)
        : n_(g.order()), d_(d), memo_limit_(memo_limit), deadline_(deadline),
          best_root_(best_root),
          adjacency_(n_, 0), vertex_at_(n_ + 1, -1), label_of_(n_, 0) {
        for (const auto& e : g.edges()) {
            adjacency_[e.u] |= bit(e.v);
            adjacency_[e.v] |= bit(e.u);
        }
        all_ = n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
    }

    /// Searches with label 1 on `root`. Returns true and fills the witness on success.
    bool solve_from(Vertex root) {
        root_ = root;
        place(root, 1);
        bool found = dfs(2);
        if (!found) unplace(root);
        return found;
    }

    Labeling witness() const { return Labeling{label_of_}; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    bool timed_out() const noexcept { return timed_out_; }
    bool aborted() const noexcept { return aborted_; }

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

    void place(Vertex v, int label) {
        placed_ |= bit(v);
        vertex_at_[label] = v;
        label_of_[v] = label;
    }

    void unplace(Vertex v) {
        placed_ &= ~bit(v);
        vertex_at_[label_of_[v]] = -1;
        label_of_[v] = 0;
    }

    std::string state_key(int next) const {
        std::string key(sizeof(placed_), '\0');
        for (std::size_t i = 0; i < sizeof(placed_); ++i)
            key[i] = static_cast<char>((placed_ >> (8 * i)) & 0xff);
        for (int t = std::max(1, next - d_ + 1); t < next; ++t)
            key.push_back(static_cast<char>(vertex_at_[t]));
        return key;
    }

    bool dfs(int next) {
        if (next > n_) return true;
        if ((++nodes_ & 0xfff) == 0) {
            // Another worker already succeeded from a smaller root.
            if (best_root_ && best_root_->load(std::memory_order_relaxed) < root_) aborted_ = true;
            if (deadline_ && Clock::now() > *deadline_) timed_out_ = true;
        }
        if (timed_out_ || aborted_) return false;

        // Complement symmetry: only labelings with c(0) <= ceil(n/2) are explored.
        if (next > (n_ + 1) / 2 && !(placed_ & 1)) return false;

        const std::uint64_t unplaced = all_ & ~placed_;
        std::uint64_t blocked = 0;
        const int window_start = std::max(1, next - d_ + 1);
        for (int t = window_start; t < next; ++t) {
            const Vertex w = vertex_at_[t];
            const std::uint64_t waiting = adjacency_[w] & unplaced;
            // Every unplaced neighbor of w needs a label in [t + d, n].
            if (std::popcount(waiting) > std::max(0, n_ - (t + d_) + 1)) return false;
            blocked |= waiting;
        }
        std::uint64_t candidates = unplaced & ~blocked;
        if (!candidates) return false;

        std::string key = state_key(next);
        if (dead_.count(key)) return false;

        while (candidates) {
            const Vertex v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            place(v, next);
            if (dfs(next + 1)) return true;
            unplace(v);
            if (timed_out_ || aborted_) return false;
        }
        if (dead_.size() < memo_limit_) dead_.insert(std::move(key));
        return false;
    }

    int n_;
    int d_;
    std::size_t memo_limit_;
    std::optional<Clock::time_point> deadline_;
    const std::atomic<int>* best_root_;
    Vertex root_ = 0;
    std::vector<std::uint64_t> adjacency_;
    std::vector<Vertex> vertex_at_;
    std::vector<int> label_of_;
    std::uint64_t placed_ = 0;
    std::uint64_t all_ = 0;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
    bool aborted_ = false;
    std::unordered_set<std::string> dead_;
};

inline void check_oracle_size(const Graph& g, const OracleOptions& opt) {
    const int limit = std::min(opt.max_order, oracle_hard_limit);
    if (g.order() > limit)
        throw OracleLimitError("exact solver refuses n = " + std::to_string(g.order()) +
                               " (limit " + std::to_string(limit) + ")");
}

struct DecisionOutcome {
    std::optional<Labeling> witness;
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

inline DecisionOutcome run_decision(const Graph& g, int d, const OracleOptions& opt,
                                    std::optional<Clock::time_point> deadline) {
    const int n = g.order();
    DecisionOutcome out;
    const int threads = std::max(1, std::min(opt.threads, n));
    if (threads == 1) {
        DecisionSearch search(g, d, opt.memo_limit, deadline);
        for (Vertex root = 0; root < n; ++root) {
            if (search.solve_from(root)) {
                out.witness = search.witness();
                break;
            }
            if (search.timed_out()) break;
        }
        out.nodes = search.nodes();
        out.timed_out = search.timed_out() && !out.witness;
        return out;
    }

    // Roots are handed out in increasing order. A worker stops once a smaller
    // root has succeeded, so the kept witness is the one the sequential search finds.
    std::atomic<int> next_root{0};
    std::atomic<int> best_root{std::numeric_limits<int>::max()};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> timed_out{false};
    std::mutex mu;
    std::vector<std::optional<Labeling>> found(n);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                DecisionSearch search(g, d, opt.memo_limit, deadline, &best_root);
                while (true) {
                    const int root = next_root.fetch_add(1);
                    if (root >= n || root > best_root.load()) break;
                    if (search.solve_from(root)) {
                        std::lock_guard lock(mu);
                        found[root] = search.witness();
                        int current = best_root.load();
                        while (root < current && !best_root.compare_exchange_weak(current, root)) {
                        }
                        break;
                    }
                    if (search.timed_out()) {
                        timed_out = true;
                        break;
                    }
                    if (search.aborted()) break;
                }
                nodes += search.nodes();
            });
        }
    }
    for (auto& w : found) {
        if (w) {
            out.witness = std::move(w);
            break;
        }
    }
    out.nodes = nodes.load();
    out.timed_out = timed_out.load() && !out.witness;
    return out;
}

}  // namespace detail

/// Exhaustive test of DC(g) >= d. Returns a labeling reaching d, or nullopt if none exists.
inline std::optional<Labeling> decision_dc_at_least(const Graph& g, int d,
                                                    const OracleOptions& opt = {},
                                                    OracleStats* stats = nullptr) {
    const int n = g.order();
    if (n < 1) throw ValidationError("exact solver needs at least one vertex");
    if (d < 1 || d > n)
        throw ValidationError("target " + std::to_string(d) + " outside 1.." + std::to_string(n));
    detail::check_oracle_size(g, opt);

    const auto start = detail::Clock::now();
    std::optional<detail::Clock::time_point> deadline;
    if (opt.timeout.count() > 0) deadline = start + opt.timeout;
    auto outcome = detail::run_decision(g, d, opt, deadline);
    if (stats) {
        stats->nodes += outcome.nodes;
        stats->millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            detail::Clock::now() - start)
                            .count();
    }
    if (outcome.timed_out) throw OracleTimeout(1, d);
    return std::move(outcome.witness);
}

/// Exact differential chromatic number, searching downward from an upper bound.
///
/// Edgeless graphs return n with the identity labeling.
inline ExactResult exact_dc(const Graph& g, const OracleOptions& opt = {}) {
    const int n = g.order();
    if (n < 1) throw ValidationError("exact solver needs at least one vertex");
    detail::check_oracle_size(g, opt);

    const auto start = detail::Clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(detail::Clock::now() - start)
            .count();
    };
    ExactResult result;
    if (g.size() == 0) {
        result.dc = n;
        for (int v = 0; v < n; ++v) result.witness.labels.push_back(v + 1);
        result.stats.millis = elapsed();
        return result;
    }

    int ceiling = n - 1;
    if (opt.ceiling)
        ceiling = std::clamp(*opt.ceiling, 1, n - 1);
    else if (g.is_connected())
        ceiling = upper_bound_report(g).best;

    std::optional<detail::Clock::time_point> deadline;
    if (opt.timeout.count() > 0) deadline = start + opt.timeout;
    for (int d = ceiling; d >= 1; --d) {
        auto outcome = detail::run_decision(g, d, opt, deadline);
        result.stats.nodes += outcome.nodes;
        if (outcome.timed_out) throw OracleTimeout(1, d);
        if (outcome.witness) {
            result.dc = d;
            result.witness = std::move(*outcome.witness);
            break;
        }
    }
    result.stats.millis = elapsed();
    return result;
}

}  // namespace diffcolor
