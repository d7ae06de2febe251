#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "kcross/bigfloat.hpp"
#include "kcross/pi_scalar.hpp"
#include "kcross/rational.hpp"

using namespace kcross;

TEST_CASE("factorial and binomial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(4, 9) == 0);
}

TEST_CASE("odd double factorials count perfect matchings of complete point sets") {
    // 1, 1, 3, 15, 105, 945
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(1) == 1);
    CHECK(double_factorial_odd(2) == 3);
    CHECK(double_factorial_odd(3) == 15);
    CHECK(double_factorial_odd(5) == 945);
}

TEST_CASE("rationals canonicalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(0, 7) == Rational());
    CHECK(Rational(3, 7).denominator() == 7);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational division by zero throws") {
    Rational a(3, 4);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
    std::uniform_int_distribution<long> den(1, 1000000000L);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("gamma at half-integers: first values") {
    // Gamma(1/2) = sqrt(pi), Gamma(3/2) = sqrt(pi)/2, Gamma(7/2) = 15 sqrt(pi)/8
    CHECK(gamma_half(0) == PiScalar(Rational(1), 1));
    CHECK(gamma_half(1) == PiScalar(Rational(1, 2), 1));
    CHECK(gamma_half(3) == PiScalar(Rational(15, 8), 1));
}

TEST_CASE("gamma at half-integers satisfies the shift recurrence") {
    // Gamma(n + 1 + 1/2) = (n + 1/2) Gamma(n + 1/2)
    for (unsigned long n = 0; n < 200; ++n) {
        PiScalar lhs = gamma_half(n + 1);
        PiScalar rhs = gamma_half(n) * Rational(2 * static_cast<long>(n) + 1, 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pi-scalar multiplication merges components") {
    PiScalar root_pi(Rational(1), 1);
    CHECK(root_pi * root_pi == PiScalar(Rational(1), 2));
    CHECK(PiScalar(Rational(1, 2), 1) * PiScalar(Rational(3, 4), 1) == PiScalar(Rational(3, 8), 2));
    // sqrt(6) * sqrt(10) = 2 sqrt(15)
    CHECK(PiScalar(Rational(1), 0, 6) * PiScalar(Rational(1), 0, 10) ==
          PiScalar(Rational(2), 0, 15));
}

TEST_CASE("pi-scalar radicands are reduced to squarefree form") {
    CHECK(PiScalar(Rational(1), 0, 12) == PiScalar(Rational(2), 0, 3));
    CHECK(PiScalar(Rational(1), 0, 49) == PiScalar(Rational(7)));
    CHECK(PiScalar(Rational(5, 3), -2, 360) == PiScalar(Rational(10), -2, 10));
    CHECK_THROWS_AS(PiScalar(Rational(1), 0, 0), std::invalid_argument);
}

TEST_CASE("pi-scalar addition needs matching components, zero is absorbed") {
    PiScalar a(Rational(1, 2), 1);
    PiScalar b(Rational(1, 3), 1);
    CHECK(a + b == PiScalar(Rational(5, 6), 1));
    CHECK(a - a == PiScalar::zero());
    CHECK(PiScalar::zero() + a == a);
    CHECK(a + PiScalar::zero() == a);
    CHECK_THROWS_AS(a + PiScalar(Rational(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(a + PiScalar(Rational(1), 1, 2), std::invalid_argument);
}

TEST_CASE("zero pi-scalar is canonical regardless of construction") {
    CHECK(PiScalar(Rational(0), 5, 7) == PiScalar::zero());
    CHECK((PiScalar(Rational(2), 3, 5) * PiScalar(Rational(0))).is_zero());
}

TEST_CASE("pi-scalar rendering") {
    CHECK(PiScalar(Rational(45, 32), -3, 1).str() == "45/32 * pi^(-3/2)");
    CHECK(PiScalar(Rational(3, 8), -2).str() == "3/8 * pi^-1");
    CHECK(PiScalar(Rational(2), 0, 3).str() == "2 * sqrt(3)");
    CHECK(PiScalar::zero().str() == "0");
}

TEST_CASE("to_float hits reference values") {
    // sqrt(pi) = 1.77245385090551602...
    double v = to_float(PiScalar(Rational(1), 1), 256).to_double();
    CHECK(std::abs(v - 1.7724538509055160273) < 1e-15);
    // plain rationals convert exactly
    CHECK(to_float(PiScalar(Rational(1, 2)), 64).to_double() == 0.5);
    // 24 / pi = 7.639437268410976...
    double w = to_float(PiScalar(Rational(24), -2), 256).to_double();
    CHECK(std::abs(w - 7.6394372684109763) < 1e-14);
    // sqrt(3) * pi^(-3/2) = 0.311053573964...
    double u = to_float(PiScalar(Rational(1), -3, 3), 256).to_double();
    CHECK(std::abs(u - std::sqrt(3.0) / std::pow(std::acos(-1.0), 1.5)) < 1e-14);
}

TEST_CASE("to_float rejects precision below 53 bits") {
    CHECK_THROWS_AS(to_float(PiScalar::one(), 52), std::invalid_argument);
}

TEST_CASE("to_float is monotone on same-component scalars") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(1, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int trial = 0; trial < 100; ++trial) {
        Rational qa(num(rng), den(rng));
        Rational qb(num(rng), den(rng));
        if (qb < qa) std::swap(qa, qb);
        PiScalar a(qa, -1, 5);
        PiScalar b(qb, -1, 5);
        CHECK(to_float(a, 128) <= to_float(b, 128));
    }
}

TEST_CASE("bigfloat precision handling") {
    BigFloat a = BigFloat::from(1ul, 100);
    BigFloat b = BigFloat::from(3ul, 200);
    CHECK((a / b).prec() == 200);
    CHECK(BigFloat::pi(53).to_double() == std::acos(-1.0));
    CHECK_THROWS_AS(BigFloat(0), std::invalid_argument);
}

TEST_CASE("bigfloat string rendering trims to significant digits") {
    BigFloat x = BigFloat::from(Rational(1, 3), 256);
    CHECK(x.str(12) == "0.333333333333");
    CHECK(BigFloat::from(18707ul, 64).str(12) == "18707");
}

TEST_CASE("bigfloat factorial and powers") {
    CHECK(BigFloat::factorial(10, 64).to_double() == 3628800.0);
    CHECK(BigFloat::from(4ul, 64).pow_ui(10).to_double() == 1048576.0);
    BigFloat e = BigFloat::from(Rational(3, 2), 128);
    double got = BigFloat::from(9ul, 128).pow(e).to_double();
    CHECK(std::abs(got - 27.0) < 1e-12);
}
