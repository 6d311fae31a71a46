#pragma once

#include <stdexcept>
#include <vector>

#include "sedg/signed_graph.hpp"

namespace sedg {

/// k-blow-up: vertex v becomes copies v*k .. v*k+k-1; copies of u and v are
/// adjacent iff (u,v) was an edge, inheriting its weight. Copies of the same
/// vertex stay non-adjacent. Edge count and total weight scale by k^2, every
/// vertex sum by k.
inline SignedGraph blow_up(const SignedGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("blow_up: multiplicity must be >= 1");
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (const Edge& e : g.edges())
        for (int cu = 0; cu < k; ++cu)
            for (int cv = 0; cv < k; ++cv)
                edges.push_back(Edge{e.u * k + cu, e.v * k + cv, e.w});
    return SignedGraph(n * k, std::move(edges));
}

/// Adds one vertex (last index) joined to every existing vertex by a +1
/// edge; total weight grows by the old vertex count.
inline SignedGraph apex_augment(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    edges.reserve(edges.size() + static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) edges.push_back(Edge{v, n, 1});
    return SignedGraph(n + 1, std::move(edges));
}

/// Membership test for the restricted family: with V+ = {v : s_v >= 0} and
/// V- = {v : s_v < 0}, every -1 edge must join V+ to V- and every +1 edge
/// must stay inside V+.
inline bool restricted_class_check(const SignedGraph& g) {
    const auto s = vertex_sums(g);
    for (const Edge& e : g.edges()) {
        const bool u_plus = s[static_cast<std::size_t>(e.u)] >= 0;
        const bool v_plus = s[static_cast<std::size_t>(e.v)] >= 0;
        if (e.w < 0) {
            if (u_plus == v_plus) return false;
        } else {
            if (!u_plus || !v_plus) return false;
        }
    }
    return true;
}

}  // namespace sedg
