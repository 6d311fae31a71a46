#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sedg/checked.hpp"

namespace sedg {

/// Positive solution of p^2 = 2 q^2 + 1.
struct PellPair {
    std::int64_t p = 0;
    std::int64_t q = 0;
};

inline bool operator==(const PellPair& a, const PellPair& b) { return a.p == b.p && a.q == b.q; }

/// Exact check of the Pell invariant. 128-bit squares, so any 64-bit pair
/// is decided exactly.
inline bool is_pell_pair(const PellPair& s) {
    if (s.p <= 0 || s.q <= 0) return false;
    const __int128 p = s.p, q = s.q;
    return p * p == 2 * q * q + 1;
}

/// First `count` positive solutions of p^2 = 2 q^2 + 1 in increasing order,
/// via the integer recurrence (p,q) <- (3p+4q, 2p+3q) starting from (3,2).
/// Throws std::overflow_error once a solution exceeds 64-bit range.
inline std::vector<PellPair> pell_solutions(int count) {
    if (count < 1) throw std::invalid_argument("pell_solutions: count must be >= 1");
    std::vector<PellPair> out;
    out.reserve(static_cast<std::size_t>(count));
    PellPair s{3, 2};
    for (int i = 0; i < count; ++i) {
        out.push_back(s);
        if (i + 1 < count) {
            const std::int64_t p = checked_add(checked_mul(3, s.p), checked_mul(4, s.q));
            const std::int64_t q = checked_add(checked_mul(2, s.p), checked_mul(3, s.q));
            s = PellPair{p, q};
        }
    }
    return out;
}

/// 1-based access: pell_solution(1) == (3,2).
inline PellPair pell_solution(int index) {
    if (index < 1) throw std::invalid_argument("pell_solution: index must be >= 1");
    return pell_solutions(index).back();
}

}  // namespace sedg
