#pragma once

// Exact truncated power series over the rationals, plus the determinant
// counting method: the exponential generating function of the walk counts
// is a determinant of differences of modified-Bessel-type series, and its
// coefficients can be read off after a purely rational computation.

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace kcross {

// Dense power series truncated after degree T; coefficients are exact
// rationals.  Operands of mixed truncation order are rejected rather than
// silently coerced -- a mismatch is always a logic bug upstream.
class TruncSeries {
public:
    explicit TruncSeries(int degree_bound) {
        if (degree_bound < 0) throw std::invalid_argument("TruncSeries: negative degree bound");
        c_.resize(degree_bound + 1);
    }

    int degree_bound() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& operator[](int d) const { return c_.at(d); }
    void set(int d, Rational v) { c_.at(d) = std::move(v); }

    TruncSeries& operator+=(const TruncSeries& o) {
        require_same(o);
        for (std::size_t d = 0; d < c_.size(); ++d) c_[d] += o.c_[d];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        require_same(o);
        for (std::size_t d = 0; d < c_.size(); ++d) c_[d] -= o.c_[d];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { a += b; return a; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { a -= b; return a; }
    TruncSeries operator-() const {
        TruncSeries r(degree_bound());
        for (std::size_t d = 0; d < c_.size(); ++d) r.c_[d] = -c_[d];
        return r;
    }

    // product truncated after the shared degree bound
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_same(b);
        const int T = a.degree_bound();
        TruncSeries r(T);
        for (int i = 0; i <= T; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= T; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

private:
    void require_same(const TruncSeries& o) const {
        if (c_.size() != o.c_.size())
            throw std::invalid_argument("TruncSeries: mismatched degree bounds");
    }

    std::vector<Rational> c_;
};

// Series of the modified Bessel function I_m at doubled argument:
// sum_j z^(|m| + 2j) / (j! (|m| + j)!), truncated after degree T.
inline TruncSeries bessel_series(long m, int degree_bound) {
    if (m < 0) m = -m;
    TruncSeries s(degree_bound);
    for (long j = 0;; ++j) {
        long d = m + 2 * j;
        if (d > degree_bound) break;
        s.set(static_cast<int>(d),
              Rational(Int(1), factorial(j) * factorial(m + j)));
    }
    return s;
}

// Determinant by cofactor expansion along the first row.  Fine for the
// small matrix orders used here; avoids divisions, which keeps everything
// inside the truncated ring.
inline TruncSeries series_det(const std::vector<std::vector<TruncSeries>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("series_det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("series_det: matrix not square");
    if (n == 1) return m[0][0];
    const int T = m[0][0].degree_bound();
    TruncSeries acc(T);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<TruncSeries>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<TruncSeries> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        TruncSeries term = m[0][j] * series_det(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Matching counts f(0..n_max) for crossing number < k, read off the
// Bessel-determinant generating function: f(n) = (2n)! [z^(2n)] det.
// The determinant must have integral scaled coefficients and vanishing odd
// ones; violations indicate an internal inconsistency, not bad input.
inline std::vector<Int> count_by_determinant(int k, int n_max) {
    if (k < 2) throw std::invalid_argument("count_by_determinant: k must be at least 2");
    if (n_max < 0) throw std::invalid_argument("count_by_determinant: negative n_max");
    const int T = 2 * n_max;
    const int d = k - 1;
    std::vector<std::vector<TruncSeries>> m(d, std::vector<TruncSeries>(d, TruncSeries(T)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m[i - 1][j - 1] = bessel_series(i - j, T) - bessel_series(i + j, T);
    TruncSeries det = series_det(m);

    std::vector<Int> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (2 * n + 1 <= T && !det[2 * n + 1].is_zero())
            throw std::logic_error("count_by_determinant: odd coefficient did not vanish");
        Rational scaled = det[2 * n] * Rational(factorial(2 * n));
        if (!scaled.is_integer() || scaled.sign() < 0)
            throw std::logic_error("count_by_determinant: scaled coefficient not a count");
        out.push_back(scaled.numerator());
    }
    return out;
}

}  // namespace kcross
