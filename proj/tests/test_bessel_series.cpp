#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "kcross/bessel_series.hpp"
#include "kcross/matchings.hpp"
#include "kcross/tableaux.hpp"

using namespace kcross;

namespace {

TruncSeries random_series(std::mt19937& rng, int T) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    TruncSeries s(T);
    for (int d = 0; d <= T; ++d) s.set(d, Rational(num(rng), den(rng)));
    return s;
}

}  // namespace

TEST_CASE("bessel series coefficients") {
    TruncSeries i0 = bessel_series(0, 6);
    CHECK(i0[0] == Rational(1));
    CHECK(i0[1] == Rational(0));
    CHECK(i0[2] == Rational(1));          // 1/(1! 1!)
    CHECK(i0[4] == Rational(1, 4));       // 1/(2! 2!)
    CHECK(i0[6] == Rational(1, 36));      // 1/(3! 3!)
    TruncSeries i2 = bessel_series(2, 6);
    CHECK(i2[0] == Rational(0));
    CHECK(i2[2] == Rational(1, 2));       // 1/(0! 2!)
    CHECK(i2[4] == Rational(1, 6));       // 1/(1! 3!)
    // negative order mirrors positive order
    CHECK(bessel_series(-2, 6) == i2);
}

TEST_CASE("series ring rejects mismatched truncation orders") {
    TruncSeries a(3), b(4);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("series multiplication truncates consistently") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        TruncSeries a = random_series(rng, 8);
        TruncSeries b = random_series(rng, 8);
        TruncSeries c = random_series(rng, 8);
        // truncation commutes with addition: (a + b) c == a c + b c
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("series determinant: row swap flips the sign") {
    const int T = 6;
    std::vector<std::vector<TruncSeries>> m(2, std::vector<TruncSeries>(2, TruncSeries(T)));
    m[0][0] = bessel_series(0, T);
    m[0][1] = bessel_series(1, T);
    m[1][0] = bessel_series(2, T);
    m[1][1] = bessel_series(3, T);
    std::vector<std::vector<TruncSeries>> swapped{m[1], m[0]};
    CHECK(series_det(swapped) == -series_det(m));
    CHECK_THROWS_AS(series_det({}), std::invalid_argument);
}

TEST_CASE("determinant counts: Catalan prefix at the lowest bound") {
    std::vector<Int> f2 = count_by_determinant(2, 5);
    CHECK(f2 == std::vector<Int>{1, 1, 2, 5, 14, 42});
}

TEST_CASE("determinant counts match the walk DP and brute force") {
    for (int k = 2; k <= 5; ++k) {
        std::vector<Int> det = count_by_determinant(k, 6);
        std::vector<Int> dp = tableau_walk_counts(k, 6);
        CHECK(det == dp);
        for (int n = 0; n <= 6; ++n) {
            INFO("k=" << k << " n=" << n);
            CHECK(det[n] == count_bruteforce(k, n));
        }
    }
}

TEST_CASE("determinant counts: frozen spot values") {
    CHECK(count_by_determinant(3, 4)[4] == 84);
    CHECK(count_by_determinant(3, 10)[10] == Int("37975756"));
    CHECK(count_by_determinant(4, 2)[2] == 3);
}

TEST_CASE("two-row determinant identity: central binomial form up to n = 50") {
    // At the lowest bound the determinant is I_0 - I_2 and the scaled
    // coefficient collapses to (2n)! / (n! (n+1)!), the Catalan number.
    const int nmax = 50;
    std::vector<Int> f2 = count_by_determinant(2, nmax);
    for (int n = 0; n <= nmax; ++n) {
        Int catalan = factorial(2 * n) / (factorial(n) * factorial(n + 1));
        CHECK(f2[n] == catalan);
    }
}

TEST_CASE("determinant method rejects bad input") {
    CHECK_THROWS_AS(count_by_determinant(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(count_by_determinant(3, -1), std::invalid_argument);
}

TEST_CASE("odd coefficients of the determinant vanish identically") {
    const int T = 9;
    const int d = 2;  // crossing bound 3
    std::vector<std::vector<TruncSeries>> m(d, std::vector<TruncSeries>(d, TruncSeries(T)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m[i - 1][j - 1] = bessel_series(i - j, T) - bessel_series(i + j, T);
    TruncSeries det = series_det(m);
    for (int odd = 1; odd <= T; odd += 2) CHECK(det[odd].is_zero());
}

TEST_CASE("series identity: I0 minus I2 equals I1 shifted down one degree") {
    // The two-row determinant collapses because I_0(2z) - I_2(2z) and
    // I_1(2z)/z are the same series; compare coefficientwise.
    const int T = 101;
    TruncSeries diff = bessel_series(0, T) - bessel_series(2, T);
    TruncSeries mid = bessel_series(1, T);
    for (int m = 0; m < T; ++m) CHECK(diff[m] == mid[m + 1]);
    // both sides are even series, so the odd top slot holds nothing
    CHECK(diff[T].is_zero());
}
