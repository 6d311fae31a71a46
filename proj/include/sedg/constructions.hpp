#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedg/checked.hpp"
#include "sedg/pell.hpp"
#include "sedg/signed_graph.hpp"

namespace sedg {

/// Banded circulant bipartite family. Side X is x_blocks blocks of
/// block_size vertices, side Y is y_blocks blocks of the same size. Within
/// every block pair, local indices g,h are adjacent iff (g-h) mod block_size
/// falls in the band {1,...,band}. band == block_size means the band covers
/// every residue, i.e. complete bipartite between each block pair.
struct CirculantBipartiteSpec {
    int x_blocks = 1;   // a
    int y_blocks = 1;   // b
    int band = 1;       // k
    int block_size = 1; // l, requires band <= block_size

    void validate() const {
        if (x_blocks < 1 || y_blocks < 1 || band < 1 || block_size < 1)
            throw std::invalid_argument("circulant bipartite: all parameters must be >= 1");
        if (band > block_size)
            throw std::invalid_argument("circulant bipartite: band exceeds block size");
    }
};

/// Banded circulant family on one vertex set: 2*half_blocks consecutive
/// blocks of block_size vertices; blocks i and j are completely joined iff
/// (i-j) mod 2*half_blocks lies in {1..band} or {2*half_blocks-band .. -1}.
/// band < half_blocks keeps the band clear of both 0 (self-block) and the
/// antipodal block, so the graph is simple and 2*block_size*band regular.
struct CirculantSpec {
    int block_size = 1;  // a
    int band = 1;        // k
    int half_blocks = 2; // l, requires band < half_blocks

    void validate() const {
        if (block_size < 1 || band < 1 || half_blocks < 1)
            throw std::invalid_argument("circulant: all parameters must be >= 1");
        if (band >= half_blocks)
            throw std::invalid_argument("circulant: band must be smaller than half_blocks");
    }
};

/// Graph on x_blocks*block_size + y_blocks*block_size vertices (X first),
/// all edges carrying `weight`. X-degrees are y_blocks*band, Y-degrees
/// x_blocks*band.
inline SignedGraph circulant_bipartite(const CirculantBipartiteSpec& spec, int weight) {
    spec.validate();
    const int l = spec.block_size, k = spec.band;
    const int nx = spec.x_blocks * l, ny = spec.y_blocks * l;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(spec.x_blocks) * spec.y_blocks * l * k);
    for (int bi = 0; bi < spec.x_blocks; ++bi)
        for (int bj = 0; bj < spec.y_blocks; ++bj)
            for (int g = 0; g < l; ++g)
                for (int h = 0; h < l; ++h) {
                    const int d = ((g - h) % l + l) % l;
                    const bool in_band = (k == l) || (d >= 1 && d <= k);
                    if (!in_band) continue;
                    edges.push_back(Edge{bi * l + g, nx + bj * l + h, weight});
                }
    return SignedGraph(nx + ny, std::move(edges));
}

/// Graph on 2*half_blocks*block_size vertices, all edges carrying `weight`.
inline SignedGraph circulant_unipartite(const CirculantSpec& spec, int weight) {
    spec.validate();
    const int a = spec.block_size, k = spec.band, two_l = 2 * spec.half_blocks;
    const int n = two_l * a;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * a * k);
    for (int bi = 0; bi < two_l; ++bi)
        for (int bj = bi + 1; bj < two_l; ++bj) {
            const int d = bj - bi;  // in (0, 2l)
            const bool in_band = (d >= 1 && d <= k) || (d >= two_l - k);
            if (!in_band) continue;
            for (int g = 0; g < a; ++g)
                for (int h = 0; h < a; ++h)
                    edges.push_back(Edge{bi * a + g, bj * a + h, weight});
        }
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph complete_graph(int n, int weight) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back(Edge{i, j, weight});
    return SignedGraph(n, std::move(edges));
}

/// Half-open vertex index range [begin, end).
struct IndexRange {
    int begin = 0;
    int end = 0;
    int size() const { return end - begin; }
    bool contains(int v) const { return v >= begin && v < end; }
};

/// The Pell-parameterized extremal SED-pair together with its block layout.
/// Vertices are laid out A-block, B-block, C-block, then the apex, each
/// block ordered by (sub-block index, within-block index).
struct PellExtremal {
    SignedGraph graph;
    IndexRange a_block, b_block, c_block;
    int apex = 0;
    std::int64_t expected_total = 0;  // -2 p^2 q^2 + 4 p^2 + 5 p q
};

namespace detail {

inline void shift_edges(std::vector<Edge>& dst, const SignedGraph& g, int u_off, int v_off) {
    for (const Edge& e : g.edges()) dst.push_back(Edge{e.u + u_off, e.v + v_off, e.w});
}

}  // namespace detail

/// Builds the extremal family member for a Pell pair (p,q), p^2 = 2q^2 + 1:
/// blocks |A| = 2p^2, |B| = 2pq, |C| = 2(p+q)p and one apex vertex, so
/// n = 4p(p+q) + 1. Positive edges: complete bipartite A-B, complete B, and
/// the apex joined to everything. Negative edges: banded circulant on A
/// (block_size p, band q, half_blocks p) and banded circulant bipartite B-C
/// (2q and 2(p+q) blocks of size p, band q).
///
/// The constructor re-derives every vertex sum and compares it with the
/// closed forms s_a = 1, s_b = 2p^2-2q^2, s_c = 1-2q^2, s_x = 4p(p+q);
/// a mismatch throws std::logic_error. Disjointness of the five edge
/// families is enforced by the duplicate-edge check in SignedGraph.
inline PellExtremal pell_extremal(const PellPair& pq) {
    if (!is_pell_pair(pq)) throw std::invalid_argument("pell_extremal: p^2 = 2q^2 + 1 violated");
    const std::int64_t p = pq.p, q = pq.q;

    const std::int64_t size_a = checked_mul(2, checked_mul(p, p));
    const std::int64_t size_b = checked_mul(2, checked_mul(p, q));
    const std::int64_t size_c = checked_mul(2, checked_mul(checked_add(p, q), p));
    const std::int64_t n64 = checked_add(checked_add(size_a, size_b), checked_add(size_c, 1));
    // edge count: complete bipartite A-B, complete B, star, A-circulant, B-C
    const std::int64_t m64 = checked_add(
        checked_add(checked_mul(size_a, size_b), checked_mul(size_b, size_b - 1) / 2),
        checked_add(checked_add(n64 - 1, checked_mul(size_a, checked_mul(p, q))),
                    checked_mul(size_b, checked_mul(2, checked_mul(checked_add(p, q), q)))));
    if (m64 > (std::int64_t{1} << 27))
        throw std::overflow_error("pell_extremal: " + std::to_string(m64) +
                                  " edges is too large to materialize");
    const int na = static_cast<int>(size_a), nb = static_cast<int>(size_b),
              nc = static_cast<int>(size_c), n = static_cast<int>(n64);
    const int off_a = 0, off_b = na, off_c = na + nb, apex = n - 1;

    std::vector<Edge> edges;
    // positive: complete bipartite A-B
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) edges.push_back(Edge{off_a + i, off_b + j, 1});
    // positive: complete graph on B
    detail::shift_edges(edges, complete_graph(nb, 1), off_b, off_b);
    // positive: apex star over A, B and C
    for (int v = 0; v < n - 1; ++v) edges.push_back(Edge{v, apex, 1});
    // negative: banded circulant on A
    detail::shift_edges(edges,
                        circulant_unipartite(CirculantSpec{static_cast<int>(p), static_cast<int>(q),
                                                           static_cast<int>(p)},
                                             -1),
                        off_a, off_a);
    // negative: banded circulant bipartite B-C
    {
        CirculantBipartiteSpec bc;
        bc.x_blocks = static_cast<int>(2 * q);
        bc.y_blocks = static_cast<int>(2 * (p + q));
        bc.band = static_cast<int>(q);
        bc.block_size = static_cast<int>(p);
        SignedGraph g = circulant_bipartite(bc, -1);
        // its X side is B, its Y side is C; Y indices start at nb within g
        for (const Edge& e : g.edges())
            edges.push_back(Edge{off_b + e.u, off_c + (e.v - nb), e.w});
    }

    PellExtremal out{SignedGraph(n, std::move(edges)),
                     IndexRange{off_a, off_a + na},
                     IndexRange{off_b, off_b + nb},
                     IndexRange{off_c, off_c + nc},
                     apex,
                     0};

    // cross-check the construction against the closed-form vertex sums
    const std::int64_t sa = 1;
    const std::int64_t sb = checked_sub(checked_mul(2, checked_mul(p, p)), checked_mul(2, checked_mul(q, q)));
    const std::int64_t sc = checked_sub(1, checked_mul(2, checked_mul(q, q)));
    const std::int64_t sx = checked_mul(4, checked_mul(p, checked_add(p, q)));
    const auto sums = vertex_sums(out.graph);
    for (int v = 0; v < n; ++v) {
        const std::int64_t want = out.a_block.contains(v)   ? sa
                                  : out.b_block.contains(v) ? sb
                                  : out.c_block.contains(v) ? sc
                                                            : sx;
        if (sums[static_cast<std::size_t>(v)] != want)
            throw std::logic_error("pell_extremal: vertex sum mismatch at vertex " +
                                   std::to_string(v));
    }
    for (const Edge& e : out.graph.edges())
        if (sums[static_cast<std::size_t>(e.u)] + sums[static_cast<std::size_t>(e.v)] - e.w < 1)
            throw std::logic_error("pell_extremal: SED condition violated");
    out.expected_total =
        checked_add(checked_sub(checked_mul(4, checked_mul(p, p)),
                                checked_mul(2, checked_mul(checked_mul(p, p), checked_mul(q, q)))),
                    checked_mul(5, checked_mul(p, q)));
    return out;
}

/// Order, exact total weight and weight/n^2 ratio of the extremal family
/// member, from the closed forms alone (nothing is materialized, so this
/// works far beyond buildable sizes). Ratio tends to -1/(8(1+sqrt 2)^2).
struct PellExtremalStats {
    std::int64_t n = 0;
    std::int64_t total_weight = 0;
    double ratio = 0.0;
};

inline PellExtremalStats pell_extremal_stats(const PellPair& pq) {
    if (!is_pell_pair(pq))
        throw std::invalid_argument("pell_extremal_stats: p^2 = 2q^2 + 1 violated");
    const std::int64_t p = pq.p, q = pq.q;
    PellExtremalStats st;
    st.n = checked_add(checked_mul(4, checked_mul(p, checked_add(p, q))), 1);
    st.total_weight =
        checked_add(checked_sub(checked_mul(4, checked_mul(p, p)),
                                checked_mul(2, checked_mul(checked_mul(p, p), checked_mul(q, q)))),
                    checked_mul(5, checked_mul(p, q)));
    checked_mul(st.n, st.n);  // ensure the ratio denominator is exactly representable
    st.ratio = static_cast<double>(st.total_weight) /
               (static_cast<double>(st.n) * static_cast<double>(st.n));
    return st;
}

}  // namespace sedg
