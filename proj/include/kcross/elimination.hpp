#pragma once

// Symbolic elimination on the matrix of Bessel-difference expansions.
//
// Entry (i, j) of the starting matrix is the large-argument expansion of
// the Bessel difference, a truncated polynomial in 1/z.  A fixed sequence
// of row and column updates (one round per pivot t) cancels low-order
// terms until every entry's leading term sits at order i + j - 1 with a
// half-integer-gamma coefficient.  The product of those leading terms --
// a gamma determinant with a closed form -- yields the constant, the
// exponential rate and the polynomial power of the generating function's
// singular behaviour.

#include <stdexcept>
#include <utility>
#include <vector>

#include "hankel.hpp"
#include "laurent.hpp"
#include "pi_scalar.hpp"
#include "rational.hpp"

namespace kcross {

// Expansion of the (i, j) Bessel difference in powers of 1/z:
// sum_h seed_h(i, j) * (-1)^h / (16^h h!) * z^(-h), truncated after H.
inline LaurentPoly bessel_diff_expansion(int i, int j, int order_bound) {
    if (i < 1 || j < 1)
        throw std::invalid_argument("bessel_diff_expansion: indices start at 1");
    LaurentPoly p(order_bound);
    for (int h = 0; h <= order_bound; ++h) {
        Int seed = hankel_diff(i, j, h);
        if (seed == 0) continue;
        Int den = pow_int(Int(16), h) * factorial(h);
        if (h % 2 == 1) seed = -seed;
        p.set(h, Rational(seed, den));
    }
    return p;
}

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

struct EliminationStep {
    int pivot;             // the round t that produced this snapshot
    LaurentMatrix matrix;  // state after both passes of the round
};

struct EliminationRun {
    int k = 0;
    int order_bound = 0;
    LaurentMatrix matrix;                // final state
    std::vector<EliminationStep> steps;  // per-round snapshots when captured
};

// Default truncation for the elimination.  Intermediate cancellations reach
// order (k-1)^2, so the bound must clear that; four extra orders keep a few
// correction terms visible behind each leading term.
inline int default_order_bound(int k) { return (k - 1) * (k - 1) + 4; }

// Run the elimination for crossing bound k over polynomials truncated after
// order H.  One round per pivot t: first rows i > t absorb a multiple of
// row t, then columns j > t absorb a multiple of column t; the multiplier
// for index x is  -x * prod_{r<t} (x-r)(x+r) / (2t-1)!.  Updates read the
// live matrix; row and column t themselves are never touched in round t,
// so the two passes commute.
inline EliminationRun run_elimination(int k, int order_bound, bool capture_steps = false) {
    if (k < 2) throw std::invalid_argument("run_elimination: k must be at least 2");
    if (order_bound <= (k - 1) * (k - 1))
        throw std::invalid_argument(
            "run_elimination: order bound must exceed (k-1)^2 to expose every leading term");

    const int d = k - 1;
    EliminationRun run;
    run.k = k;
    run.order_bound = order_bound;
    run.matrix.assign(d, std::vector<LaurentPoly>(d, LaurentPoly(order_bound)));
    auto& m = run.matrix;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m[i - 1][j - 1] = bessel_diff_expansion(i, j, order_bound);

    auto multiplier = [](int x, int t) {
        Int num = -x;
        for (int r = 1; r < t; ++r) num *= square_diff(x, r);
        return Rational(num, factorial(2 * t - 1));
    };

    for (int t = 1; t <= d; ++t) {
        for (int i = t + 1; i <= d; ++i) {
            Rational c = multiplier(i, t);
            for (int j = 1; j <= d; ++j) m[i - 1][j - 1].add_scaled(c, m[t - 1][j - 1]);
        }
        for (int j = t + 1; j <= d; ++j) {
            Rational c = multiplier(j, t);
            for (int i = 1; i <= d; ++i) m[i - 1][j - 1].add_scaled(c, m[i - 1][t - 1]);
        }
        if (capture_steps) run.steps.push_back({t, m});
    }
    return run;
}

// Where the elimination must land: entry (i, j) has leading order i + j - 1
// with coefficient (-1)^(i+j) * 2 * Gamma(i + j - 1/2) / sqrt(pi), i.e. the
// rational part of 2 * gamma_half(i + j - 1).
inline LeadingTerm expected_leading_term(int i, int j) {
    if (i < 1 || j < 1)
        throw std::invalid_argument("expected_leading_term: indices start at 1");
    unsigned long m = static_cast<unsigned long>(i + j - 1);
    Rational c = Rational(2) * gamma_half(m).coeff();
    if ((i + j) % 2 == 1) c = -c;
    return {i + j - 1, c};
}

namespace detail {

// determinant of a rational matrix by Gaussian elimination with pivot search
inline Rational rational_det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace detail

// Determinant of the (k-1) x (k-1) matrix with entries Gamma(j + i - 1/2),
// computed two ways: directly by rational elimination, and by the closed
// form  prod_i Gamma(i + 1/2) * prod_r r!.  Disagreement is an internal
// error.  Returns the closed form.
inline PiScalar gamma_half_matrix_det(int k) {
    if (k < 2) throw std::invalid_argument("gamma_half_matrix_det: k must be at least 2");
    const int d = k - 1;

    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m[i - 1][j - 1] = gamma_half(static_cast<unsigned long>(j + i - 1)).coeff();
    // entries are q_{ij} * sqrt(pi), so det = rational_det * pi^((k-1)/2)
    PiScalar direct(detail::rational_det(std::move(m)), d);

    Rational q(1);
    for (int i = 1; i <= d; ++i) q *= gamma_half(static_cast<unsigned long>(i)).coeff();
    for (int r = 1; r <= d - 1; ++r) q *= Rational(factorial(static_cast<unsigned long>(r)));
    PiScalar closed(q, d);

    if (direct != closed)
        throw std::logic_error("gamma_half_matrix_det: closed form disagrees with elimination");
    return closed;
}

// The singular behaviour of the generating function of the walk counts:
// F(z) ~ constant * exp(exp_rate * z) * z^(-power)  as z grows.
struct AsymptoticForm {
    PiScalar constant;
    int exp_rate;
    Rational power;
};

inline AsymptoticForm egf_asymptotic(int k) {
    if (k < 2) throw std::invalid_argument("egf_asymptotic: k must be at least 2");
    const int d = k - 1;
    // gamma determinant scaled by pi^(-(k-1)) from the prefactor of each row
    PiScalar det = gamma_half_matrix_det(k);
    PiScalar constant(det.coeff(), det.pi_half() - 2 * d, det.root());
    return {constant, 2 * d, Rational(2L * d * d + d, 2)};
}

}  // namespace kcross
