#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sedg/signed_graph.hpp"

namespace sedg {

inline std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

/// (n, e) together with the unique decompositions the two extremal graphs
/// are built from: e = C(a,2) + b with 0 <= b < a, and
/// C(n,2) - e = C(c,2) + d with 0 <= d < c.
struct ExtremalSpec {
    int n = 0;
    std::int64_t e = 0;
    int a = 1;
    std::int64_t b = 0;
    int c = 1;
    std::int64_t d = 0;
};

namespace detail {

// largest a with C(a,2) <= e; then b = e - C(a,2) < a
inline void clique_decompose(std::int64_t e, int& a, std::int64_t& b) {
    a = 1;
    while (choose2(a + 1) <= e) ++a;
    b = e - choose2(a);
}

}  // namespace detail

inline ExtremalSpec extremal_spec(int n, std::int64_t e) {
    if (n < 1) throw std::invalid_argument("extremal_spec: n must be >= 1");
    if (e < 0 || e > choose2(n))
        throw std::invalid_argument("extremal_spec: e out of range [0, C(n,2)]");
    ExtremalSpec s;
    s.n = n;
    s.e = e;
    detail::clique_decompose(e, s.a, s.b);
    detail::clique_decompose(choose2(n) - e, s.c, s.d);
    return s;
}

/// Quasi-complete graph: clique on vertices 0..a-1 plus vertex a joined to
/// vertices 0..b-1. Exactly e edges, all +1.
inline SignedGraph quasi_complete(int n, std::int64_t e) {
    const ExtremalSpec s = extremal_spec(n, e);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(e));
    for (int i = 0; i < s.a; ++i)
        for (int j = i + 1; j < s.a; ++j) edges.push_back(Edge{i, j, 1});
    for (int j = 0; j < s.b; ++j) edges.push_back(Edge{j, s.a, 1});
    return SignedGraph(n, std::move(edges));
}

/// Complement on the same vertex set; weights in the result are all +1
/// (degree bookkeeping only — the extremal question ignores signs).
inline SignedGraph complement(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const Edge& e : g.edges())
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
            adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                edges.push_back(Edge{i, j, 1});
    return SignedGraph(n, std::move(edges));
}

/// Quasi-star graph, defined as the complement of the quasi-complete graph
/// on the complementary edge count. Exactly e edges.
inline SignedGraph quasi_star(int n, std::int64_t e) {
    if (n < 1) throw std::invalid_argument("quasi_star: n must be >= 1");
    if (e < 0 || e > choose2(n)) throw std::invalid_argument("quasi_star: e out of range");
    return complement(quasi_complete(n, choose2(n) - e));
}

/// Sum of squared degrees; weights are ignored.
inline std::int64_t sum_deg_sq(const SignedGraph& g) {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    std::int64_t s = 0;
    for (const std::int64_t d : deg) s += d * d;
    return s;
}

/// F(n,e): the maximum of sum_deg_sq over all graphs with n vertices and e
/// edges, attained on the quasi-complete or the quasi-star graph.
inline std::int64_t max_sum_deg_sq(int n, std::int64_t e) {
    return std::max(sum_deg_sq(quasi_complete(n, e)), sum_deg_sq(quasi_star(n, e)));
}

/// Independent oracle: exact maximum of sum_deg_sq by enumerating every
/// e-subset of the C(n,2) vertex pairs. Refuses n > 7.
inline std::int64_t max_sum_deg_sq_brute(int n, std::int64_t e) {
    if (n < 1) throw std::invalid_argument("max_sum_deg_sq_brute: n must be >= 1");
    if (n > 7)
        throw std::invalid_argument("max_sum_deg_sq_brute: enumeration bound is n <= 7, got n = " +
                                    std::to_string(n));
    if (e < 0 || e > choose2(n)) throw std::invalid_argument("max_sum_deg_sq_brute: e out of range");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int m = static_cast<int>(pairs.size());

    if (e == 0) return 0;
    std::int64_t best = -1;
    // Gosper's hack over e-bit subsets of m <= 21 bits
    std::uint32_t mask = (1u << static_cast<int>(e)) - 1u;
    const std::uint32_t limit = 1u << m;
    while (mask < limit) {
        int deg[7] = {0, 0, 0, 0, 0, 0, 0};
        for (std::uint32_t bits = mask; bits;) {
            const int t = __builtin_ctz(bits);
            bits &= bits - 1;
            ++deg[pairs[static_cast<std::size_t>(t)].first];
            ++deg[pairs[static_cast<std::size_t>(t)].second];
        }
        std::int64_t s = 0;
        for (int v = 0; v < n; ++v) s += static_cast<std::int64_t>(deg[v]) * deg[v];
        if (s > best) best = s;
        const std::uint32_t c = mask & (0u - mask);
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return best;
}

// Normalized degree-square densities: with alpha = 2e/n^2,
// F(n,e)/n^3 -> max(g_curve, h_curve)(alpha).

inline double g_curve(double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("g_curve: alpha outside [0,1]");
    return std::pow(alpha, 1.5);
}

inline double h_curve(double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("h_curve: alpha outside [0,1]");
    const double t = std::sqrt(1.0 - alpha);
    return (1.0 - t) * (t + alpha);
}

/// Returns h_curve^2 - g_curve^2 and checks it against the factored form
/// t^2 (1-t)^2 (2t^2 - 1) with t = sqrt(1-alpha): positive below the
/// crossover alpha = 1/2, negative above it.
inline double crossover_gap(double alpha) {
    if (alpha <= 0.0 || alpha >= 1.0) throw std::domain_error("crossover_gap: alpha outside (0,1)");
    const double t = std::sqrt(1.0 - alpha);
    const double h = h_curve(alpha), g = g_curve(alpha);
    const double gap = h * h - g * g;
    const double factored = t * t * (1.0 - t) * (1.0 - t) * (2.0 * t * t - 1.0);
    if (std::abs(gap - factored) > 1e-12)
        throw std::logic_error("crossover_gap: factored form disagrees");
    if (std::abs(alpha - 0.5) > 1e-9 && (alpha < 0.5 ? gap <= 0.0 : gap >= 0.0))
        throw std::logic_error("crossover_gap: sign inconsistent with crossover at 1/2");
    return gap;
}

}  // namespace sedg
