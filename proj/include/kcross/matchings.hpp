#pragma once

// Brute-force layer: enumerate perfect matchings on {1, ..., 2n}, compute
// the crossing number of a matching (the largest set of pairwise crossing
// arcs), and count matchings whose crossing number stays below a bound.
// Everything here is exponential by design and guarded accordingly; it
// exists to ground the faster counting methods in something unarguable.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace kcross {

// A perfect matching on {1, ..., 2n}: arcs (l, r) with l < r, sorted by l.
struct Matching {
    std::vector<std::pair<int, int>> arcs;

    int points() const { return 2 * static_cast<int>(arcs.size()); }

    static Matching from_arcs(std::vector<std::pair<int, int>> arcs) {
        Matching m;
        m.arcs = std::move(arcs);
        int n2 = 2 * static_cast<int>(m.arcs.size());
        std::vector<bool> seen(n2 + 1, false);
        for (auto& [l, r] : m.arcs) {
            if (l >= r) std::swap(l, r);
            if (l < 1 || r > n2) throw std::invalid_argument("Matching: endpoint out of range");
            if (seen[l] || seen[r]) throw std::invalid_argument("Matching: repeated endpoint");
            seen[l] = seen[r] = true;
        }
        std::sort(m.arcs.begin(), m.arcs.end());
        return m;
    }

    friend bool operator==(const Matching& a, const Matching& b) { return a.arcs == b.arcs; }
};

inline constexpr int kBruteForceGuard = 8;

// Visit all (2n - 1)!! perfect matchings on {1, ..., 2n}.  The visitor
// receives each matching with arcs already sorted by left endpoint.
template <typename F>
void enumerate_matchings(int n, F&& visit, int guard = kBruteForceGuard) {
    if (n < 0) throw std::invalid_argument("enumerate_matchings: negative n");
    if (n > guard)
        throw std::invalid_argument("enumerate_matchings: n exceeds the exponential-work guard");
    Matching m;
    m.arcs.reserve(n);
    std::uint32_t free_mask = (n == 0) ? 0u : ((1u << (2 * n)) - 1u);  // bit v-1 <-> point v
    auto rec = [&](auto&& self) -> void {
        if (free_mask == 0) {
            visit(static_cast<const Matching&>(m));
            return;
        }
        int l = std::countr_zero(free_mask) + 1;
        std::uint32_t rest = free_mask & (free_mask - 1);  // drop l
        for (std::uint32_t cand = rest; cand != 0; cand &= cand - 1) {
            int r = std::countr_zero(cand) + 1;
            free_mask = rest & ~(1u << (r - 1));
            m.arcs.emplace_back(l, r);
            self(self);
            m.arcs.pop_back();
        }
        free_mask = rest | (1u << (l - 1));
    };
    rec(rec);
}

// Largest number of pairwise crossing arcs; 0 for the empty matching.
// Arcs (a, b) and (c, d) cross when a < c < b < d.
inline int crossing_number(const Matching& m) {
    const int a = static_cast<int>(m.arcs.size());
    if (a == 0) return 0;
    if (a > 20) throw std::invalid_argument("crossing_number: too many arcs for subset scan");
    std::vector<std::uint32_t> crossers(a, 0);
    for (int i = 0; i < a; ++i) {
        for (int j = i + 1; j < a; ++j) {
            // arcs sorted by left endpoint, so only the interleaving test remains
            if (m.arcs[i].first < m.arcs[j].first && m.arcs[j].first < m.arcs[i].second &&
                m.arcs[i].second < m.arcs[j].second) {
                crossers[i] |= 1u << j;
                crossers[j] |= 1u << i;
            }
        }
    }
    int best = 1;
    const std::uint32_t all = (a >= 32) ? ~0u : ((1u << a) - 1u);
    for (std::uint32_t s = 1; s <= all; ++s) {
        if (std::popcount(s) <= best) continue;
        bool clique = true;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
            int i = std::countr_zero(rest);
            if ((crossers[i] & s) != (s & ~(1u << i))) {
                clique = false;
                break;
            }
        }
        if (clique) best = std::popcount(s);
    }
    return best;
}

// Mirror the point line: v -> 2n + 1 - v.  Crossing numbers are invariant.
inline Matching reflect(const Matching& m) {
    int n2 = m.points();
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(m.arcs.size());
    for (auto [l, r] : m.arcs) arcs.emplace_back(n2 + 1 - r, n2 + 1 - l);
    return Matching::from_arcs(std::move(arcs));
}

// Number of perfect matchings on {1, ..., 2n} whose crossing number is at
// most k - 1, by exhaustive enumeration.
inline Int count_bruteforce(int k, int n, int guard = kBruteForceGuard) {
    if (k < 2) throw std::invalid_argument("count_bruteforce: k must be at least 2");
    Int total = 0;
    enumerate_matchings(
        n,
        [&](const Matching& m) {
            if (crossing_number(m) <= k - 1) ++total;
        },
        guard);
    return total;
}

}  // namespace kcross
