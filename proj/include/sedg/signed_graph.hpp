#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sedg {

/// One undirected edge {u,v} carrying weight +1 or -1.
struct Edge {
    int u = 0;
    int v = 0;
    int w = 1;
};

inline bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
}

/// Simple undirected graph on vertices 0..n-1 with every edge weighted +1 or -1.
///
/// The constructor enforces: no self-loops, no duplicate unordered pairs,
/// all endpoints in range, weights in {+1,-1}. Edge order is preserved as
/// given (file round-trips depend on it).
class SignedGraph {
public:
    SignedGraph() = default;

    SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 0) throw std::invalid_argument("SignedGraph: negative vertex count");
        std::vector<std::int64_t> keys;
        keys.reserve(edges_.size());
        for (const Edge& e : edges_) {
            if (e.u == e.v)
                throw std::invalid_argument("SignedGraph: self-loop at vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
                throw std::invalid_argument("SignedGraph: edge endpoint out of range");
            if (e.w != 1 && e.w != -1)
                throw std::invalid_argument("SignedGraph: weight must be +1 or -1");
            const int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
            keys.push_back(static_cast<std::int64_t>(lo) * n_ + hi);
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            throw std::invalid_argument("SignedGraph: duplicate edge");
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Everything verify_sed computes in one pass.
struct SedReport {
    std::vector<int> vertex_sums;            // s_v per vertex
    std::vector<int> edge_neighborhood_sums; // per edge, sum over its closed neighborhood
    std::int64_t total_weight = 0;
    bool is_sed = false;
};

/// s_v = sum of weights of edges incident to v, for every vertex.
inline std::vector<int> vertex_sums(const SignedGraph& g) {
    std::vector<int> s(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        s[static_cast<std::size_t>(e.u)] += e.w;
        s[static_cast<std::size_t>(e.v)] += e.w;
    }
    return s;
}

/// Weight sum over the closed neighborhood of edge #edge_index: the edge
/// itself plus all edges sharing an endpoint. Computed as s_u + s_v - w,
/// which double-counts the edge once and subtracts it back.
inline int edge_neighborhood_sum(const SignedGraph& g, std::size_t edge_index) {
    if (edge_index >= g.edge_count())
        throw std::out_of_range("edge_neighborhood_sum: edge index " + std::to_string(edge_index) +
                                " out of range");
    const auto s = vertex_sums(g);
    const Edge& e = g.edges()[edge_index];
    return s[static_cast<std::size_t>(e.u)] + s[static_cast<std::size_t>(e.v)] - e.w;
}

/// Full SED verdict: is_sed holds iff every edge's closed-neighborhood sum
/// is >= 1. A graph with no edges is vacuously a SED-pair of weight 0.
inline SedReport verify_sed(const SignedGraph& g) {
    SedReport r;
    r.vertex_sums = vertex_sums(g);
    r.edge_neighborhood_sums.reserve(g.edge_count());
    r.is_sed = true;
    for (const Edge& e : g.edges()) {
        const int nb = r.vertex_sums[static_cast<std::size_t>(e.u)] +
                       r.vertex_sums[static_cast<std::size_t>(e.v)] - e.w;
        r.edge_neighborhood_sums.push_back(nb);
        if (nb < 1) r.is_sed = false;
        r.total_weight += e.w;
    }
    return r;
}

/// Cross-check oracle: s_u + s_v >= 0 for every edge (u,v). This holds for
/// every SED-pair, so a false return on a verified SED-pair flags a bug.
/// Requires the input to be a SED-pair.
inline bool adjacent_sums_nonnegative(const SignedGraph& g) {
    const SedReport r = verify_sed(g);
    if (!r.is_sed)
        throw std::logic_error("adjacent_sums_nonnegative: input is not a SED-pair");
    for (const Edge& e : g.edges())
        if (r.vertex_sums[static_cast<std::size_t>(e.u)] +
                r.vertex_sums[static_cast<std::size_t>(e.v)] < 0)
            return false;
    return true;
}

}  // namespace sedg
