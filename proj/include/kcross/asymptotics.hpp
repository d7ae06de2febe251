#pragma once

// Growth law of the matching counts.  The generating-function analysis
// produces, for each crossing bound k, a comparison function: a scaled
// Bessel or hyperbolic series whose coefficients the exact counts approach.
// This header carries the exact coefficient formulas, the growth constant,
// and the machinery for convergence tables that measure the approach.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bessel_series.hpp"
#include "bigfloat.hpp"
#include "elimination.hpp"
#include "matchings.hpp"
#include "pi_scalar.hpp"
#include "rational.hpp"
#include "tableaux.hpp"

namespace kcross {

// Shape of the comparison function, cycling with k mod 4.
enum class BaseFunction { I0, I1, Cosh, Sinh };

inline std::string base_function_name(BaseFunction b) {
    switch (b) {
        case BaseFunction::I0: return "I0";
        case BaseFunction::I1: return "I1";
        case BaseFunction::Cosh: return "cosh";
        case BaseFunction::Sinh: return "sinh";
    }
    throw std::logic_error("base_function_name: unreachable");
}

// The comparison function for crossing bound k is
//   g(z) = normalizer * z^(-shift) * (base(scale * z) - tail)
// where tail is the Taylor prefix of base(scale * z) through degree
// shift - 1, i.e. the part that would produce negative powers.
struct ComparisonSpec {
    int k;
    BaseFunction base;
    long shift;                        // power of z dividing out
    int bessel_order;                  // 0 or 1; meaningful for I0/I1 only
    int scale;                         // argument multiplier 2k - 2
    PiScalar normalizer;
    std::vector<Rational> subtraction;  // tail coefficients of z^(shift-j), j = 1..shift
};

// constant of the generating function's singular form (pure pi power)
inline PiScalar egf_constant(int k) { return egf_asymptotic(k).constant; }

// Normalizer of the comparison function: twice the generating-function
// constant, with an extra sqrt((k-1) pi) for even k where a Bessel base
// replaces the hyperbolic one.
inline PiScalar comparison_normalizer(int k) {
    if (k < 2) throw std::invalid_argument("comparison_normalizer: k must be at least 2");
    PiScalar c = egf_constant(k) * Rational(2);
    if (k % 2 == 0) c = c * PiScalar(Rational(1), 1, Int(k - 1));
    return c;
}

// Taylor coefficient [z^d] of base(scale * z)
inline Rational base_taylor_coeff(BaseFunction base, int bessel_order, int scale, long d) {
    if (d < 0) return Rational(0);
    switch (base) {
        case BaseFunction::I0:
        case BaseFunction::I1: {
            // I_s(2 w) = sum_m w^(s + 2m) / (m! (s + m)!) at w = (scale/2) z
            long s = bessel_order;
            if (d < s || (d - s) % 2 != 0) return Rational(0);
            long m = (d - s) / 2;
            Int half_scale = Int(scale) / 2;
            return Rational(pow_int(half_scale, d), factorial(m) * factorial(m + s));
        }
        case BaseFunction::Cosh:
            if (d % 2 != 0) return Rational(0);
            return Rational(pow_int(Int(scale), d), factorial(d));
        case BaseFunction::Sinh:
            if (d % 2 != 1) return Rational(0);
            return Rational(pow_int(Int(scale), d), factorial(d));
    }
    throw std::logic_error("base_taylor_coeff: unreachable");
}

inline ComparisonSpec comparison_spec(int k) {
    if (k < 2) throw std::invalid_argument("comparison_spec: k must be at least 2");
    ComparisonSpec spec;
    spec.k = k;
    spec.scale = 2 * k - 2;
    const long d = k - 1;
    switch (k % 4) {
        case 0: spec.base = BaseFunction::I0; spec.bessel_order = 0; break;
        case 2: spec.base = BaseFunction::I1; spec.bessel_order = 1; break;
        case 1: spec.base = BaseFunction::Cosh; spec.bessel_order = 0; break;
        default: spec.base = BaseFunction::Sinh; spec.bessel_order = 0; break;
    }
    spec.shift = (k % 2 == 0) ? d * d + (k - 2) / 2 : d * d + (k - 1) / 2;
    spec.normalizer = comparison_normalizer(k);
    spec.subtraction.reserve(spec.shift);
    for (long j = 1; j <= spec.shift; ++j)
        spec.subtraction.push_back(
            base_taylor_coeff(spec.base, spec.bessel_order, spec.scale, spec.shift - j));
    return spec;
}

// Exact coefficient [z^(2n)] of the comparison function.  The shifted
// degree 2n + shift always has the parity the base function demands; a
// violation would be an internal inconsistency.
inline PiScalar comparison_coefficient(int k, long n) {
    if (n < 0) throw std::invalid_argument("comparison_coefficient: negative n");
    ComparisonSpec spec = comparison_spec(k);
    const long deg = 2 * n + spec.shift;
    Rational c = base_taylor_coeff(spec.base, spec.bessel_order, spec.scale, deg);
    if (c.is_zero())
        throw std::logic_error("comparison_coefficient: parity mismatch in shifted degree");
    return spec.normalizer * c;
}

// Growth constant: the exact counts behave like
//   constant * n^(-power) * (2k - 2)^(2n)
// with power from the generating-function analysis.  The constant folds the
// factor (k - 1)^power into twice the generating-function constant, which
// introduces sqrt(k - 1) for even k.
inline PiScalar growth_constant(int k) {
    if (k < 2) throw std::invalid_argument("growth_constant: k must be at least 2");
    const long d = k - 1;
    const long doubled_power = 2 * d * d + d;  // 2 * power is always integral
    PiScalar c = egf_constant(k) * Rational(2);
    PiScalar scale_power(Rational(pow_int(Int(d), static_cast<unsigned long>(doubled_power / 2))),
                         0, (doubled_power % 2 != 0) ? Int(d) : Int(1));
    return c * scale_power;
}

// Float evaluation of the growth law at a concrete n.
inline BigFloat asymptotic_count(int k, long n, mpfr_prec_t precision_bits) {
    if (n < 1) throw std::invalid_argument("asymptotic_count: n must be positive");
    if (precision_bits < 53)
        throw std::invalid_argument("asymptotic_count: need at least 53 bits");
    const mpfr_prec_t work = precision_bits + 32;
    AsymptoticForm form = egf_asymptotic(k);
    BigFloat value = to_float(growth_constant(k), work);
    BigFloat n_pow = BigFloat::from(static_cast<unsigned long>(n), work)
                         .pow(BigFloat::from(form.power, work));
    BigFloat rate = BigFloat::from(static_cast<unsigned long>(2 * k - 2), work)
                        .pow_ui(static_cast<unsigned long>(2 * n));
    return (value * rate / n_pow).rounded_to(precision_bits);
}

enum class CountMethod { Brute, Tableau, Det };

inline std::string count_method_name(CountMethod m) {
    switch (m) {
        case CountMethod::Brute: return "brute";
        case CountMethod::Tableau: return "tableau";
        case CountMethod::Det: return "det";
    }
    throw std::logic_error("count_method_name: unreachable");
}

struct ConvergenceRow {
    long n;
    Int exact;
    BigFloat approx;
    BigFloat ratio;  // exact / approx
};

// Exact counts f(n) for every requested n, by the chosen method.  The
// methods with shared state (DP, determinant) run once to the largest n.
inline std::vector<Int> exact_counts(int k, const std::vector<long>& n_values,
                                     CountMethod method) {
    std::vector<Int> out;
    out.reserve(n_values.size());
    if (n_values.empty()) return out;
    const long n_top = n_values.back();
    switch (method) {
        case CountMethod::Brute:
            for (long n : n_values) out.push_back(count_bruteforce(k, static_cast<int>(n)));
            break;
        case CountMethod::Tableau: {
            std::vector<Int> prefix = tableau_walk_counts(k, n_top);
            for (long n : n_values) out.push_back(prefix[n]);
            break;
        }
        case CountMethod::Det: {
            std::vector<Int> prefix = count_by_determinant(k, static_cast<int>(n_top));
            for (long n : n_values) out.push_back(prefix[n]);
            break;
        }
    }
    return out;
}

// Convergence table: exact count, growth-law value and their ratio for each
// requested n.  n_values must be positive and sorted ascending; infeasible
// method/size combinations are rejected before any work starts.
inline std::vector<ConvergenceRow> convergence_table(int k, const std::vector<long>& n_values,
                                                     CountMethod method,
                                                     mpfr_prec_t precision_bits, int jobs = 1) {
    if (k < 2) throw std::invalid_argument("convergence_table: k must be at least 2");
    if (precision_bits < 53)
        throw std::invalid_argument("convergence_table: need at least 53 bits");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] < 1)
            throw std::invalid_argument("convergence_table: n values must be positive");
        if (i > 0 && n_values[i] < n_values[i - 1])
            throw std::invalid_argument("convergence_table: n values must be sorted ascending");
    }
    std::vector<ConvergenceRow> rows;
    if (n_values.empty()) return rows;
    if (method == CountMethod::Brute && n_values.back() > kBruteForceGuard)
        throw std::invalid_argument("convergence_table: brute force is capped at n <= 8");
    if (method == CountMethod::Tableau && !tableau_walks_feasible(k, n_values.back()))
        throw std::invalid_argument("convergence_table: walk DP state space too large");

    std::vector<Int> exact = exact_counts(k, n_values, method);
    rows.resize(n_values.size(), ConvergenceRow{0, Int(0), BigFloat(precision_bits),
                                                BigFloat(precision_bits)});
    auto fill = [&](std::size_t idx) {
        const long n = n_values[idx];
        BigFloat approx = asymptotic_count(k, n, precision_bits);
        BigFloat ratio = BigFloat::from(exact[idx], precision_bits + 32) / approx;
        rows[idx] = ConvergenceRow{n, exact[idx], approx, ratio.rounded_to(precision_bits)};
    };
    if (jobs <= 1 || n_values.size() < 2) {
        for (std::size_t i = 0; i < rows.size(); ++i) fill(i);
    } else {
        const std::size_t workers =
            std::min(static_cast<std::size_t>(jobs), n_values.size());
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < rows.size(); i += workers) fill(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

}  // namespace kcross
