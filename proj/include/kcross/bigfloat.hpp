#pragma once

// RAII wrapper around MPFR floats.  Each value carries its own precision;
// binary operations produce results at the wider of the two operand
// precisions, rounding to nearest.  Only the operations the library needs
// are wrapped -- this is not a general-purpose float class.

#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace kcross {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from(const Int& n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from(unsigned long n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui(r.v_, n, MPFR_RNDN);
        return r;
    }
    static BigFloat from(double d, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // n! rounded to the requested precision
    static BigFloat factorial(unsigned long n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_fac_ui(r.v_, n, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    BigFloat rounded_to(mpfr_prec_t prec) const {
        check_prec(prec);
        BigFloat r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {
        BigFloat r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    // this^e for a float exponent
    BigFloat pow(const BigFloat& e) const {
        BigFloat r(join(*this, e));
        mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
        return r;
    }
    BigFloat pow_ui(unsigned long e) const {
        BigFloat r(prec());
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // shortest %g-style decimal form with `sig_digits` significant digits
    std::string str(int sig_digits = 12) const {
        if (sig_digits < 1) throw std::invalid_argument("BigFloat::str: need at least one digit");
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", sig_digits, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static void check_prec(mpfr_prec_t prec) {
        if (prec < MPFR_PREC_MIN || prec > MPFR_PREC_MAX)
            throw std::invalid_argument("BigFloat: precision out of range");
    }
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }

    mpfr_t v_;
};

}  // namespace kcross
