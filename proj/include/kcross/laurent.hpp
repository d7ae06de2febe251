#pragma once

// Sparse polynomials in the inverse variable 1/z, truncated after a fixed
// order bound H: values are sums  sum_h c_h z^(-h)  with 0 <= h <= H.
// The symbolic elimination works entirely inside this ring, so the leading
// (lowest-order) terms it produces are exact.

#include <map>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace kcross {

// Raised when a leading term is requested from an identically zero value.
struct ZeroPolynomialError : std::domain_error {
    ZeroPolynomialError() : std::domain_error("leading term of the zero polynomial") {}
};

struct LeadingTerm {
    int order;       // exponent h of z^(-h)
    Rational coeff;  // nonzero by construction
    friend bool operator==(const LeadingTerm& a, const LeadingTerm& b) {
        return a.order == b.order && a.coeff == b.coeff;
    }
};

class LaurentPoly {
public:
    explicit LaurentPoly(int order_bound) : H_(order_bound) {
        if (order_bound < 0) throw std::invalid_argument("LaurentPoly: negative order bound");
    }

    int order_bound() const { return H_; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(int h) const {
        auto it = c_.find(h);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void set(int h, Rational v) {
        check_order(h);
        if (v.is_zero())
            c_.erase(h);
        else
            c_[h] = std::move(v);
    }

    // lowest order first; zero coefficients are never stored
    const std::map<int, Rational>& terms() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        require_same(o);
        for (const auto& [h, v] : o.c_) add_term(h, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        require_same(o);
        for (const auto& [h, v] : o.c_) add_term(h, -v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    LaurentPoly operator-() const {
        LaurentPoly r(H_);
        for (const auto& [h, v] : c_) r.c_.emplace(h, -v);
        return r;
    }

    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
        LaurentPoly r(p.H_);
        if (s.is_zero()) return r;
        for (const auto& [h, v] : p.c_) r.c_.emplace(h, s * v);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& p, const Rational& s) { return s * p; }

    // this += s * o, the elimination workhorse
    void add_scaled(const Rational& s, const LaurentPoly& o) {
        require_same(o);
        if (s.is_zero()) return;
        for (const auto& [h, v] : o.c_) add_term(h, s * v);
    }

    // product truncated after the shared order bound
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.require_same(b);
        LaurentPoly r(a.H_);
        for (const auto& [ha, va] : a.c_) {
            for (const auto& [hb, vb] : b.c_) {
                if (ha + hb > a.H_) break;  // map iterates in increasing order
                r.add_term(ha + hb, va * vb);
            }
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.H_ == b.H_ && a.c_ == b.c_;
    }

    LeadingTerm leading_term() const {
        if (c_.empty()) throw ZeroPolynomialError();
        auto it = c_.begin();
        return {it->first, it->second};
    }

private:
    void check_order(int h) const {
        if (h < 0 || h > H_) throw std::out_of_range("LaurentPoly: order outside [0, H]");
    }
    void require_same(const LaurentPoly& o) const {
        if (H_ != o.H_) throw std::invalid_argument("LaurentPoly: mismatched order bounds");
    }
    void add_term(int h, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(h, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    std::map<int, Rational> c_;
    int H_;
};

// Cofactor-expansion determinant over the truncated Laurent ring.
inline LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("laurent_det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("laurent_det: matrix not square");
    if (n == 1) return m[0][0];
    LaurentPoly acc(m[0][0].order_bound());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<LaurentPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<LaurentPoly> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        LaurentPoly term = m[0][j] * laurent_det(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace kcross
