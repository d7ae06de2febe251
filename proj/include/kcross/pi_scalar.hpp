#pragma once

// Exact scalars of the form  q * sqrt(r) * pi^(e/2)  with q rational,
// r a squarefree positive integer and e an integer.  Every closed-form
// constant produced by the asymptotic machinery lives in this set, so the
// symbolic layer never has to round anything.

#include <stdexcept>
#include <string>

#include "bigfloat.hpp"
#include "rational.hpp"

namespace kcross {

class PiScalar {
public:
    // zero, represented canonically as 0 * sqrt(1) * pi^0
    PiScalar() : q_(0), root_(1), pi_half_(0) {}

    PiScalar(Rational q, int pi_half = 0, Int root = 1)
        : q_(std::move(q)), root_(std::move(root)), pi_half_(pi_half) {
        if (root_ <= 0) throw std::invalid_argument("PiScalar: radicand must be positive");
        normalize();
    }

    static PiScalar zero() { return PiScalar(); }
    static PiScalar one() { return PiScalar(Rational(1)); }

    const Rational& coeff() const { return q_; }
    const Int& root() const { return root_; }
    int pi_half() const { return pi_half_; }
    bool is_zero() const { return q_.is_zero(); }
    // true when the value is a plain rational (no surd, no pi)
    bool is_rational() const { return root_ == 1 && pi_half_ == 0; }

    friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
        return PiScalar(a.q_ * b.q_, a.pi_half_ + b.pi_half_, a.root_ * b.root_);
    }
    friend PiScalar operator*(const PiScalar& a, const Rational& c) {
        return PiScalar(a.q_ * c, a.pi_half_, a.root_);
    }
    friend PiScalar operator*(const Rational& c, const PiScalar& a) { return a * c; }

    // Addition is only defined within one (sqrt, pi) component; zero is
    // absorbed regardless of its formal component.
    friend PiScalar operator+(const PiScalar& a, const PiScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.root_ != b.root_ || a.pi_half_ != b.pi_half_)
            throw std::invalid_argument("PiScalar: addition across distinct sqrt/pi components");
        return PiScalar(a.q_ + b.q_, a.pi_half_, a.root_);
    }
    friend PiScalar operator-(const PiScalar& a, const PiScalar& b) { return a + (-b); }
    PiScalar operator-() const { return PiScalar(-q_, pi_half_, root_); }

    friend bool operator==(const PiScalar& a, const PiScalar& b) {
        return a.q_ == b.q_ && a.root_ == b.root_ && a.pi_half_ == b.pi_half_;
    }
    friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

    // e.g. "45/32 * sqrt(3) * pi^(-3/2)"
    std::string str() const {
        if (q_.is_zero()) return "0";
        std::string s = q_.str();
        if (root_ != 1) s += " * sqrt(" + root_.get_str() + ")";
        if (pi_half_ != 0) {
            if (pi_half_ % 2 == 0)
                s += " * pi^" + std::to_string(pi_half_ / 2);
            else
                s += " * pi^(" + std::to_string(pi_half_) + "/2)";
        }
        return s;
    }

private:
    // Pull square factors out of the radicand and collapse the
    // representation of zero.
    void normalize() {
        if (q_.is_zero()) {
            root_ = 1;
            pi_half_ = 0;
            return;
        }
        if (root_ == 1) return;
        Int rest = root_;
        Int square_part = 1;
        Int reduced = 1;
        for (Int p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            square_part *= pow_int(p, e / 2);
            if (e % 2 == 1) reduced *= p;
        }
        reduced *= rest;  // leftover prime (or 1)
        q_ *= Rational(square_part);
        root_ = reduced;
    }

    Rational q_;
    Int root_;
    int pi_half_;
};

// Gamma(n + 1/2) = (2n)! / (4^n n!) * sqrt(pi), exactly
inline PiScalar gamma_half(unsigned long n) {
    return PiScalar(Rational(factorial(2 * n), pow_int(Int(4), n) * factorial(n)), 1);
}

// Round an exact scalar into a float of the requested precision.  The
// computation runs with guard bits so the final rounding dominates the error.
inline BigFloat to_float(const PiScalar& x, mpfr_prec_t precision_bits) {
    if (precision_bits < 53)
        throw std::invalid_argument("to_float: need at least 53 bits of precision");
    const mpfr_prec_t work = precision_bits + 32;
    BigFloat acc = BigFloat::from(x.coeff(), work);
    if (x.root() != 1) acc = acc * BigFloat::from(x.root(), work).sqrt();
    if (x.pi_half() != 0) {
        // pi^(e/2) = pi^m * sqrt(pi)^b  with  e = 2m + b,  b in {0, 1}
        const int e = x.pi_half();
        const int b = ((e % 2) + 2) % 2;
        const int m = (e - b) / 2;
        BigFloat p = BigFloat::pi(work);
        if (b != 0) acc = acc * p.sqrt();
        if (m != 0) {
            BigFloat pw = p.pow_ui(static_cast<unsigned long>(m < 0 ? -m : m));
            acc = (m < 0) ? acc / pw : acc * pw;
        }
    }
    return acc.rounded_to(precision_bits);
}

}  // namespace kcross
