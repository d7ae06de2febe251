#pragma once

// Lattice-walk counter.  Matchings with crossing number below k are in
// bijection with closed walks on Young diagrams having fewer than k rows,
// where each step adds or removes a single box.  Counting those walks with
// a layered dynamic program gives a polynomial-time replacement for brute
// force.  States are partitions packed into 64-bit keys.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rational.hpp"

namespace kcross {

namespace detail {

// bits needed per row so every row value <= n_max fits
inline int row_bits(long n_max) {
    unsigned long long m = static_cast<unsigned long long>(n_max < 1 ? 1 : n_max);
    return static_cast<int>(std::bit_width(m));
}

}  // namespace detail

// True when the walk DP for (k, n_max) fits the packed-state representation.
inline bool tableau_walks_feasible(int k, long n_max) {
    return k >= 2 && n_max >= 0 && (k - 1) * detail::row_bits(n_max) <= 64;
}

// Counts of closed walks of length 0, 2, ..., 2*n_max, i.e. the number of
// matchings on 0, 2, ..., 2*n_max points with crossing number < k.  One DP
// sweep produces the whole prefix.
inline std::vector<Int> tableau_walk_counts(int k, long n_max) {
    if (k < 2) throw std::invalid_argument("tableau_walk_counts: k must be at least 2");
    if (n_max < 0) throw std::invalid_argument("tableau_walk_counts: negative n_max");
    if (!tableau_walks_feasible(k, n_max))
        throw std::invalid_argument("tableau_walk_counts: state space exceeds packed-key capacity");

    const int rows = k - 1;
    const int bits = detail::row_bits(n_max);
    const std::uint64_t row_mask = (bits >= 64) ? ~0ull : ((1ull << bits) - 1ull);
    const long total_steps = 2 * n_max;

    std::vector<Int> out;
    out.reserve(n_max + 1);
    out.push_back(1);  // the empty walk

    std::unordered_map<std::uint64_t, Int> layer;
    layer.emplace(0, 1);
    std::vector<std::uint64_t> shape(rows);

    for (long s = 0; s < total_steps; ++s) {
        // any state alive after step s+1 has at most this many boxes
        const long cap = std::min(s + 1, total_steps - (s + 1));
        std::unordered_map<std::uint64_t, Int> next;
        next.reserve(2 * layer.size() + 16);
        for (const auto& [key, ways] : layer) {
            long boxes = 0;
            for (int r = 0; r < rows; ++r) {
                shape[r] = (key >> (bits * r)) & row_mask;
                boxes += static_cast<long>(shape[r]);
            }
            // grow: row r accepts a box when it stays weakly below row r-1
            if (boxes + 1 <= cap) {
                for (int r = 0; r < rows; ++r) {
                    if (r > 0 && shape[r] >= shape[r - 1]) continue;
                    next[key + (1ull << (bits * r))] += ways;
                    if (shape[r] == 0) break;  // rows below are 0 too; only the first may grow
                }
            }
            // shrink: row r gives up a box when it stays weakly above row r+1
            if (boxes >= 1 && boxes - 1 <= cap) {
                for (int r = 0; r < rows; ++r) {
                    if (shape[r] == 0) break;
                    std::uint64_t below = (r + 1 < rows) ? shape[r + 1] : 0;
                    if (shape[r] <= below) continue;
                    next[key - (1ull << (bits * r))] += ways;
                }
            }
        }
        layer.swap(next);
        if ((s + 1) % 2 == 0) {
            auto it = layer.find(0);
            out.push_back(it == layer.end() ? Int(0) : it->second);
        }
    }
    return out;
}

// Count of matchings on 2n points with crossing number < k, via the walk DP.
inline Int count_tableau_walks(int k, long n) {
    return tableau_walk_counts(k, n).back();
}

}  // namespace kcross
