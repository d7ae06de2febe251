#pragma once

// Coefficient combinatorics behind the large-argument expansion of the
// Bessel differences: products of the form  prod_t (4m^2 - (2t-1)^2),
// their difference at m = i - j versus m = i + j, and that difference as an
// explicit polynomial in (i, j).  The polynomial view exposes structure the
// numeric products cannot: divisibility by i*j and an even quotient.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "rational.hpp"

namespace kcross {

// (x - r)(x + r)
inline long square_diff(long x, long r) { return (x - r) * (x + r); }

// prod_{t=1}^{h} (4 m^2 - (2t - 1)^2); empty product for h = 0
inline Int hankel_product(long m, int h) {
    if (h < 0) throw std::invalid_argument("hankel_product: negative layer");
    Int acc = 1;
    Int m2 = Int(4) * m * m;
    for (int t = 1; t <= h; ++t) acc *= m2 - (2 * t - 1) * (2 * t - 1);
    return acc;
}

// layer-h coefficient seed: the product at m = i - j minus the product at
// m = i + j; antisymmetric in a sign-free sense (vanishes when i = j only
// at h = 0, where both products are the empty product)
inline Int hankel_diff(long i, long j, int h) {
    if (i < 1 || j < 1) throw std::invalid_argument("hankel_diff: indices start at 1");
    return hankel_product(i - j, h) - hankel_product(i + j, h);
}

// Polynomial in two variables with exact rational coefficients, stored as
// exponent pair (a, b) -> coefficient of i^a j^b.
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly constant(Rational c) {
        BiPoly p;
        if (!c.is_zero()) p.c_[{0, 0}] = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    Rational coeff(int a, int b) const {
        auto it = c_.find({a, b});
        return it == c_.end() ? Rational(0) : it->second;
    }

    void set(int a, int b, Rational v) {
        if (a < 0 || b < 0) throw std::invalid_argument("BiPoly: negative exponent");
        if (v.is_zero())
            c_.erase({a, b});
        else
            c_[{a, b}] = std::move(v);
    }

    const std::map<std::pair<int, int>, Rational>& terms() const { return c_; }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_)
                r.add_term({ea.first + eb.first, ea.second + eb.second}, va * vb);
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& i, const Rational& j) const {
        Rational acc(0);
        for (const auto& [e, v] : c_) {
            Rational term = v;
            for (int t = 0; t < e.first; ++t) term *= i;
            for (int t = 0; t < e.second; ++t) term *= j;
            acc += term;
        }
        return acc;
    }

    // quotient by the monomial i*j; throws unless every term is divisible
    BiPoly divide_by_ij() const {
        BiPoly r;
        for (const auto& [e, v] : c_) {
            if (e.first < 1 || e.second < 1)
                throw std::domain_error("BiPoly: term not divisible by i*j");
            r.c_[{e.first - 1, e.second - 1}] = v;
        }
        return r;
    }

private:
    void add_term(const std::pair<int, int>& e, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(e, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    std::map<std::pair<int, int>, Rational> c_;
};

// The layer-h seed as a polynomial in (i, j): expand both products of
// 4(i -+ j)^2 - (2t - 1)^2 symbolically and subtract.
inline BiPoly hankel_diff_poly(int h) {
    if (h < 1) throw std::invalid_argument("hankel_diff_poly: layer starts at 1");
    BiPoly x_minus, x_plus;  // 4 (i -+ j)^2
    x_minus.set(2, 0, Rational(4));
    x_minus.set(1, 1, Rational(-8));
    x_minus.set(0, 2, Rational(4));
    x_plus.set(2, 0, Rational(4));
    x_plus.set(1, 1, Rational(8));
    x_plus.set(0, 2, Rational(4));
    BiPoly prod_minus = BiPoly::constant(Rational(1));
    BiPoly prod_plus = BiPoly::constant(Rational(1));
    for (int t = 1; t <= h; ++t) {
        BiPoly shift = BiPoly::constant(Rational(-(2L * t - 1) * (2L * t - 1)));
        prod_minus = prod_minus * (x_minus + shift);
        prod_plus = prod_plus * (x_plus + shift);
    }
    return prod_minus - prod_plus;
}

// Closed form for the top-degree layer of the quotient -seed/(i j): the
// coefficient of i^(2a+1) j^(2b+1) with a + b = h - 1 equals
// 4^(h+1) * sum_s C(h, a-s) C(h-a+s, 2s+1) 4^s.
inline Int top_layer_coeff(int h, int a, int b) {
    if (h < 1) throw std::invalid_argument("top_layer_coeff: layer starts at 1");
    if (a < 0 || b < 0 || a + b != h - 1)
        throw std::invalid_argument("top_layer_coeff: exponents must sit on layer h - 1");
    Int acc = 0;
    for (int s = 0; s <= std::min(a, b); ++s) {
        acc += binomial(h, a - s) * binomial(h - a + s, 2 * s + 1) * pow_int(Int(4), s);
    }
    return pow_int(Int(4), h + 1) * acc;
}

}  // namespace kcross
