#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kcross/elimination.hpp"
#include "kcross/hankel.hpp"
#include "kcross/laurent.hpp"

using namespace kcross;

TEST_CASE("square difference") {
    CHECK(square_diff(1, 1) == 0);
    CHECK(square_diff(3, 1) == 8);
    CHECK(square_diff(2, 3) == -5);
    CHECK(square_diff(-2, 3) == -5);
}

TEST_CASE("layer products and seeds: hand-checked values") {
    CHECK(hankel_product(0, 0) == 1);
    CHECK(hankel_product(1, 1) == 3);       // 4 - 1
    CHECK(hankel_product(1, 2) == -15);     // 3 * (4 - 9)
    CHECK(hankel_product(3, 2) == 945);     // 35 * 27
    // layer-0 seeds vanish: both empty products
    CHECK(hankel_diff(2, 5, 0) == 0);
    // diagonal layer-1 seed: (4*0 - 1) - (4*4 - 1) = -1 - 15
    CHECK(hankel_diff(1, 1, 1) == -16);
    // layer 2: (-1)(-9) - (15)(7) = 9 - 105
    CHECK(hankel_diff(1, 1, 2) == -96);
    CHECK_THROWS_AS(hankel_diff(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(hankel_product(1, -1), std::invalid_argument);
}

TEST_CASE("seed polynomial matches the numeric seeds") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> idx(1, 9);
    for (int h = 1; h <= 6; ++h) {
        BiPoly p = hankel_diff_poly(h);
        for (int trial = 0; trial < 20; ++trial) {
            long i = idx(rng), j = idx(rng);
            CHECK(p.eval(Rational(i), Rational(j)) == Rational(hankel_diff(i, j, h)));
        }
    }
    CHECK_THROWS_AS(hankel_diff_poly(0), std::invalid_argument);
}

TEST_CASE("seed polynomial at layer 1 is the single monomial -16 i j") {
    BiPoly p = hankel_diff_poly(1);
    CHECK(p.coeff(1, 1) == Rational(-16));
    CHECK(p.terms().size() == 1);
}

TEST_CASE("every seed polynomial is divisible by i j with an even quotient") {
    for (int h = 1; h <= 7; ++h) {
        BiPoly q = hankel_diff_poly(h).divide_by_ij();
        for (const auto& [e, v] : q.terms()) {
            INFO("h=" << h << " exponents=(" << e.first << "," << e.second << ")");
            // only even exponent pairs survive: the quotient is a polynomial
            // in i^2 and j^2
            CHECK(e.first % 2 == 0);
            CHECK(e.second % 2 == 0);
            CHECK(!v.is_zero());
        }
    }
}

TEST_CASE("top-degree layer of the quotient matches the binomial-sum closed form") {
    for (int h = 1; h <= 6; ++h) {
        BiPoly q = hankel_diff_poly(h).divide_by_ij();
        for (int a = 0; a <= h - 1; ++a) {
            int b = h - 1 - a;
            INFO("h=" << h << " a=" << a << " b=" << b);
            CHECK(q.coeff(2 * a, 2 * b) == Rational(-top_layer_coeff(h, a, b)));
        }
    }
}

TEST_CASE("top-layer closed form: frozen values and input checks") {
    CHECK(top_layer_coeff(1, 0, 0) == 16);
    CHECK(top_layer_coeff(2, 1, 0) == 128);
    CHECK(top_layer_coeff(2, 0, 1) == 128);
    CHECK_THROWS_AS(top_layer_coeff(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(top_layer_coeff(0, 0, 0), std::invalid_argument);
}

TEST_CASE("laurent ring basics") {
    LaurentPoly p(10);
    p.set(3, Rational(5));
    p.set(1, Rational(1));
    CHECK(p.leading_term() == LeadingTerm{1, Rational(1)});
    p.set(1, Rational(0));  // clearing the low term exposes the next one
    CHECK(p.leading_term() == LeadingTerm{3, Rational(5)});
    CHECK_THROWS_AS(LaurentPoly(4).leading_term(), ZeroPolynomialError);
    CHECK_THROWS_AS(p.set(11, Rational(1)), std::out_of_range);
    LaurentPoly q(9);
    CHECK_THROWS_AS(p + q, std::invalid_argument);
}

TEST_CASE("laurent multiplication truncates; cancellation stays exact") {
    LaurentPoly a(6), b(6);
    a.set(0, Rational(1));
    a.set(1, Rational(2));
    b.set(5, Rational(1));
    b.set(6, Rational(7));
    LaurentPoly ab = a * b;
    CHECK(ab.coeff(5) == Rational(1));
    CHECK(ab.coeff(6) == Rational(9));  // 7 + 2; the order-7 term is cut
    LaurentPoly diff = a - a;
    CHECK(diff.is_zero());
}

TEST_CASE("bessel difference expansion: first diagonal entry") {
    LaurentPoly e11 = bessel_diff_expansion(1, 1, 5);
    CHECK(e11.coeff(0) == Rational(0));
    CHECK(e11.coeff(1) == Rational(1));        // -(-16)/16
    CHECK(e11.coeff(2) == Rational(-3, 16));   // -96 / (256 * 2)
    CHECK(e11.leading_term() == LeadingTerm{1, Rational(1)});
}

TEST_CASE("elimination at the lowest bound leaves the matrix untouched") {
    EliminationRun run = run_elimination(2, 3);
    REQUIRE(run.matrix.size() == 1);
    CHECK(run.matrix[0][0] == bessel_diff_expansion(1, 1, 3));
}

TEST_CASE("elimination for crossing bound 3: hand-computed leading terms") {
    EliminationRun run = run_elimination(3, 7);
    REQUIRE(run.matrix.size() == 2);
    CHECK(run.matrix[0][0].leading_term() == LeadingTerm{1, Rational(1)});
    CHECK(run.matrix[0][1].leading_term() == LeadingTerm{2, Rational(-3, 2)});
    CHECK(run.matrix[1][0].leading_term() == LeadingTerm{2, Rational(-3, 2)});
    CHECK(run.matrix[1][1].leading_term() == LeadingTerm{3, Rational(15, 4)});
}

TEST_CASE("expected leading terms: frozen table") {
    CHECK(expected_leading_term(1, 1) == LeadingTerm{1, Rational(1)});
    CHECK(expected_leading_term(1, 2) == LeadingTerm{2, Rational(-3, 2)});
    CHECK(expected_leading_term(2, 2) == LeadingTerm{3, Rational(15, 4)});
    CHECK(expected_leading_term(2, 3) == LeadingTerm{4, Rational(-105, 8)});
}

TEST_CASE("elimination hits the expected leading term at every entry") {
    for (int k = 2; k <= 5; ++k) {
        EliminationRun run = run_elimination(k, default_order_bound(k));
        for (int i = 1; i <= k - 1; ++i) {
            for (int j = 1; j <= k - 1; ++j) {
                INFO("k=" << k << " entry (" << i << "," << j << ")");
                CHECK(run.matrix[i - 1][j - 1].leading_term() == expected_leading_term(i, j));
            }
        }
    }
}

TEST_CASE("elimination preserves symmetry at every captured round") {
    EliminationRun run = run_elimination(4, default_order_bound(4), true);
    REQUIRE(run.steps.size() == 3);
    for (const auto& step : run.steps) {
        for (std::size_t i = 0; i < step.matrix.size(); ++i)
            for (std::size_t j = i + 1; j < step.matrix.size(); ++j)
                CHECK(step.matrix[i][j] == step.matrix[j][i]);
    }
}

TEST_CASE("entries settle once both indices clear the pivot") {
    EliminationRun run = run_elimination(5, default_order_bound(5), true);
    // after round t, entry (i, j) with max(i, j) <= t never changes again
    for (std::size_t s = 0; s + 1 < run.steps.size(); ++s) {
        int t = run.steps[s].pivot;
        for (int i = 1; i <= t; ++i)
            for (int j = 1; j <= t; ++j)
                for (std::size_t later = s + 1; later < run.steps.size(); ++later)
                    CHECK(run.steps[later].matrix[i - 1][j - 1] ==
                          run.steps[s].matrix[i - 1][j - 1]);
    }
}

TEST_CASE("elimination rejects an insufficient order bound") {
    CHECK_THROWS_AS(run_elimination(4, 9), std::invalid_argument);
    CHECK_NOTHROW(run_elimination(4, 10));
    CHECK_THROWS_AS(run_elimination(1, 10), std::invalid_argument);
}

TEST_CASE("row and column updates leave the determinant invariant") {
    for (int k = 3; k <= 4; ++k) {
        const int H = default_order_bound(k);
        LaurentMatrix start(k - 1, std::vector<LaurentPoly>(k - 1, LaurentPoly(H)));
        for (int i = 1; i <= k - 1; ++i)
            for (int j = 1; j <= k - 1; ++j)
                start[i - 1][j - 1] = bessel_diff_expansion(i, j, H);
        EliminationRun run = run_elimination(k, H);
        CHECK(laurent_det(start) == laurent_det(run.matrix));
    }
}

TEST_CASE("gamma determinant closed form") {
    CHECK(gamma_half_matrix_det(2) == PiScalar(Rational(1, 2), 1));
    CHECK(gamma_half_matrix_det(3) == PiScalar(Rational(3, 8), 2));
    CHECK(gamma_half_matrix_det(4) == PiScalar(Rational(45, 32), 3));
    // the function cross-checks elimination against the closed form internally
    for (int k = 5; k <= 12; ++k) CHECK_NOTHROW(gamma_half_matrix_det(k));
}

TEST_CASE("asymptotic form of the generating function") {
    AsymptoticForm f2 = egf_asymptotic(2);
    CHECK(f2.constant == PiScalar(Rational(1, 2), -1));
    CHECK(f2.exp_rate == 2);
    CHECK(f2.power == Rational(3, 2));

    AsymptoticForm f3 = egf_asymptotic(3);
    CHECK(f3.constant == PiScalar(Rational(3, 8), -2));
    CHECK(f3.exp_rate == 4);
    CHECK(f3.power == Rational(5));

    AsymptoticForm f4 = egf_asymptotic(4);
    CHECK(f4.constant == PiScalar(Rational(45, 32), -3));
    CHECK(f4.exp_rate == 6);
    CHECK(f4.power == Rational(21, 2));
}
