#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sedg/signed_graph.hpp"

namespace sedg {

enum class SearchMode { all_graphs, restricted };

struct SearchConfig {
    int n = 1;
    SearchMode mode = SearchMode::all_graphs;
    int max_n_guard = 7;  // 3^21 raw nodes at n=7; n <= 6 is the supported guarantee
    int workers = 1;
    bool canonical_first_row = false;  // optional symmetry reduction, result-invariant
    bool collect_witness = true;
};

struct SearchResult {
    int n = 0;
    std::int64_t g_value = 0;
    std::optional<SignedGraph> witness;
    std::uint64_t nodes_explored = 0;
    SearchMode mode = SearchMode::all_graphs;
};

namespace detail {

// Depth-first search over all assignments of each unordered vertex pair to
// {absent, +1, -1}, keeping only assignments whose realized graph is a
// SED-pair (and, in restricted mode, lies in the restricted family).
//
// Pruning, none of which may change the minimum:
//  * remaining-pair bound: pairs still open contribute >= -1 each, so a
//    branch dies once total - open >= incumbent;
//  * per-edge feasibility: a chosen edge (a,b,w) can never reach
//    closed-neighborhood sum >= 1 once s_a + s_b - w plus the number of
//    open pairs touching a or b drops below 1;
//  * optional canonical first row: states of vertex 0's pairs forced
//    non-increasing by rank, a relabeling-class representative choice.
class GnSearch {
public:
    GnSearch(const SearchConfig& cfg, std::atomic<std::int64_t>& best, std::mutex& witness_mu,
             std::int64_t& witness_value, std::vector<std::int8_t>& witness_states)
        : cfg_(cfg),
          best_(best),
          witness_mu_(witness_mu),
          witness_value_(witness_value),
          witness_states_(witness_states) {
        n_ = cfg.n;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
        m_ = static_cast<int>(pairs_.size());
        s_.assign(static_cast<std::size_t>(n_), 0);
        rem_.assign(static_cast<std::size_t>(n_), n_ - 1);
        inc_.assign(static_cast<std::size_t>(n_), {});
        states_.assign(static_cast<std::size_t>(m_), 0);
    }

    int pair_count() const { return m_; }
    std::uint64_t nodes() const { return nodes_; }

    // Replays a prefix; returns false if a feasibility prune fires (the
    // incumbent may have improved since the prefix was generated).
    bool replay(const std::vector<std::int8_t>& prefix) {
        for (std::size_t t = 0; t < prefix.size(); ++t)
            if (!apply(static_cast<int>(t), prefix[t])) {
                for (int back = static_cast<int>(t); back >= 0; --back)
                    undo(back, prefix[static_cast<std::size_t>(back)]);
                return false;
            }
        return true;
    }

    void run_from(int depth) { dfs(depth); }

    // Enumerates the feasible prefixes of the first `depth` pairs.
    void collect_prefixes(int depth, std::vector<std::vector<std::int8_t>>& out) {
        prefix_depth_ = depth;
        prefix_out_ = &out;
        dfs_prefix(0);
        prefix_out_ = nullptr;
    }

private:
    static constexpr std::int8_t kStates[3] = {0, 1, -1};

    static int rank(std::int8_t st) { return st == 1 ? 2 : (st == -1 ? 1 : 0); }

    bool bound_cut(int t) const {
        const int open = m_ - t;
        return total_ - open >= best_.load(std::memory_order_relaxed);
    }

    bool edge_feasible(int a, int b, std::int8_t w) const {
        return s_[static_cast<std::size_t>(a)] + s_[static_cast<std::size_t>(b)] - w +
                   rem_[static_cast<std::size_t>(a)] + rem_[static_cast<std::size_t>(b)] >=
               1;
    }

    bool incident_edges_feasible(int v) const {
        for (const int t : inc_[static_cast<std::size_t>(v)]) {
            const auto [a, b] = pairs_[static_cast<std::size_t>(t)];
            if (!edge_feasible(a, b, states_[static_cast<std::size_t>(t)])) return false;
        }
        return true;
    }

    // Applies state to pair t and checks feasibility of every edge whose
    // potential changed. The state stays applied even on a false return;
    // every apply must be matched by an undo.
    bool apply(int t, std::int8_t st) {
        const auto [u, v] = pairs_[static_cast<std::size_t>(t)];
        ++nodes_;
        states_[static_cast<std::size_t>(t)] = st;
        --rem_[static_cast<std::size_t>(u)];
        --rem_[static_cast<std::size_t>(v)];
        if (st != 0) {
            s_[static_cast<std::size_t>(u)] += st;
            s_[static_cast<std::size_t>(v)] += st;
            total_ += st;
            inc_[static_cast<std::size_t>(u)].push_back(t);
            inc_[static_cast<std::size_t>(v)].push_back(t);
        }
        return incident_edges_feasible(u) && incident_edges_feasible(v);
    }

    void undo(int t, std::int8_t st) {
        const auto [u, v] = pairs_[static_cast<std::size_t>(t)];
        if (st != 0) {
            inc_[static_cast<std::size_t>(u)].pop_back();
            inc_[static_cast<std::size_t>(v)].pop_back();
            s_[static_cast<std::size_t>(u)] -= st;
            s_[static_cast<std::size_t>(v)] -= st;
            total_ -= st;
        }
        ++rem_[static_cast<std::size_t>(u)];
        ++rem_[static_cast<std::size_t>(v)];
        states_[static_cast<std::size_t>(t)] = 0;
    }

    bool state_allowed(int t, std::int8_t st) const {
        if (!cfg_.canonical_first_row) return true;
        // pairs 0..n-2 are (0, j): force non-increasing rank along the row
        if (t < 1 || t > n_ - 2) return true;
        return rank(st) <= rank(states_[static_cast<std::size_t>(t - 1)]);
    }

    bool restricted_ok() const {
        for (int t = 0; t < m_; ++t) {
            const std::int8_t st = states_[static_cast<std::size_t>(t)];
            if (st == 0) continue;
            const auto [u, v] = pairs_[static_cast<std::size_t>(t)];
            const bool up = s_[static_cast<std::size_t>(u)] >= 0;
            const bool vp = s_[static_cast<std::size_t>(v)] >= 0;
            if (st < 0 ? (up == vp) : !(up && vp)) return false;
        }
        return true;
    }

    void leaf() {
        if (total_ >= best_.load(std::memory_order_relaxed)) return;
        if (cfg_.mode == SearchMode::restricted && !restricted_ok()) return;
        std::int64_t cur = best_.load(std::memory_order_relaxed);
        while (total_ < cur &&
               !best_.compare_exchange_weak(cur, total_, std::memory_order_relaxed)) {
        }
        if (cfg_.collect_witness) {
            std::lock_guard<std::mutex> lock(witness_mu_);
            if (total_ < witness_value_) {
                witness_value_ = total_;
                witness_states_ = states_;
            }
        }
    }

    void dfs(int t) {
        if (t == m_) {
            leaf();
            return;
        }
        if (bound_cut(t)) return;
        for (const std::int8_t st : kStates) {
            if (!state_allowed(t, st)) continue;
            if (apply(t, st)) dfs(t + 1);
            undo(t, st);
        }
    }

    void dfs_prefix(int t) {
        if (t == prefix_depth_) {
            prefix_out_->push_back(
                std::vector<std::int8_t>(states_.begin(), states_.begin() + prefix_depth_));
            return;
        }
        if (bound_cut(t)) return;
        for (const std::int8_t st : kStates) {
            if (!state_allowed(t, st)) continue;
            if (apply(t, st)) dfs_prefix(t + 1);
            undo(t, st);
        }
    }

    SearchConfig cfg_;
    std::atomic<std::int64_t>& best_;
    std::mutex& witness_mu_;
    std::int64_t& witness_value_;
    std::vector<std::int8_t>& witness_states_;

    int n_ = 0, m_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> s_, rem_;
    std::vector<std::vector<int>> inc_;
    std::vector<std::int8_t> states_;
    std::int64_t total_ = 0;
    std::uint64_t nodes_ = 0;

    int prefix_depth_ = 0;
    std::vector<std::vector<std::int8_t>>* prefix_out_ = nullptr;
};

}  // namespace detail

/// Exact g(n): the minimum total weight over every SED-pair of order n
/// (restricted mode additionally demands membership in the restricted
/// family). The empty graph pins the incumbent at 0 from the start. The
/// g_value is independent of worker count; the witness need not be.
inline SearchResult solve_g(const SearchConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("solve_g: n must be >= 1");
    if (cfg.n > cfg.max_n_guard)
        throw std::invalid_argument("solve_g: n = " + std::to_string(cfg.n) +
                                    " exceeds the exhaustive-search guard (max_n_guard = " +
                                    std::to_string(cfg.max_n_guard) + ")");
    if (cfg.workers < 1) throw std::invalid_argument("solve_g: workers must be >= 1");

    std::atomic<std::int64_t> best{0};
    std::mutex witness_mu;
    std::int64_t witness_value = 0;
    std::vector<std::int8_t> witness_states;  // empty graph

    const int m = cfg.n * (cfg.n - 1) / 2;
    int split = 0;
    if (cfg.workers > 1) {
        std::int64_t tasks = 1;
        while (split < m && split < 10 && tasks < 64LL * cfg.workers) {
            tasks *= 3;
            ++split;
        }
    }

    std::vector<std::vector<std::int8_t>> prefixes;
    std::uint64_t nodes = 0;
    {
        detail::GnSearch gen(cfg, best, witness_mu, witness_value, witness_states);
        gen.collect_prefixes(split, prefixes);
        nodes += gen.nodes();
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> node_total{nodes};

    // Workers pull prefix tasks from a shared index; each task gets a fresh
    // searcher (state is O(n^2), tasks are few, so rebuilds are cheap).
    auto run_tasks = [&]() {
        std::uint64_t local_nodes = 0;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) break;
            detail::GnSearch search(cfg, best, witness_mu, witness_value, witness_states);
            if (search.replay(prefixes[i]))
                search.run_from(static_cast<int>(prefixes[i].size()));
            local_nodes += search.nodes();
        }
        node_total.fetch_add(local_nodes);
    };

    if (cfg.workers <= 1 || prefixes.size() <= 1) {
        run_tasks();
    } else {
        std::vector<std::thread> pool;
        const int w = std::min<int>(cfg.workers, static_cast<int>(prefixes.size()));
        pool.reserve(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) pool.emplace_back(run_tasks);
        for (auto& th : pool) th.join();
    }

    SearchResult result;
    result.n = cfg.n;
    result.mode = cfg.mode;
    result.g_value = best.load();
    result.nodes_explored = node_total.load();
    if (cfg.collect_witness) {
        std::vector<Edge> edges;
        int t = 0;
        for (int i = 0; i < cfg.n; ++i)
            for (int j = i + 1; j < cfg.n; ++j, ++t)
                if (t < static_cast<int>(witness_states.size()) &&
                    witness_states[static_cast<std::size_t>(t)] != 0)
                    edges.push_back(Edge{i, j, witness_states[static_cast<std::size_t>(t)]});
        result.witness = SignedGraph(cfg.n, std::move(edges));
    }
    return result;
}

/// One bound violation; absence means every result is consistent with the
/// proven floors (-n^2/25 in full mode, -n^2/54 in restricted mode).
struct BoundViolation {
    int n = 0;
    std::int64_t g_value = 0;
    SearchMode mode = SearchMode::all_graphs;
};

/// Exact integer comparison of each result against its mode's bound:
/// 25 g + n^2 >= 0 (all graphs) or 54 g + n^2 >= 0 (restricted).
inline std::optional<BoundViolation> check_lower_bounds(const std::vector<SearchResult>& results) {
    for (const SearchResult& r : results) {
        const std::int64_t n2 = static_cast<std::int64_t>(r.n) * r.n;
        const std::int64_t scale = r.mode == SearchMode::all_graphs ? 25 : 54;
        if (scale * r.g_value + n2 < 0) return BoundViolation{r.n, r.g_value, r.mode};
    }
    return std::nullopt;
}

}  // namespace sedg
