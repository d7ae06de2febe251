// Worked example: run the Laurent elimination at k = 4 and print the
// leading order and coefficient of every entry of the reduced matrix,
// next to the Gamma closed form each must equal.
//
//   $ ./demo_leading_orders
//
// Also prints the asymptotic constants the reduced determinant yields.

#include <iostream>

#include "kcross/asymptotics.hpp"
#include "kcross/elimination.hpp"

int main() {
    using namespace kcross;

    const int k = 4;
    EliminationRun run = run_elimination(k, default_order_bound(k), false);

    std::cout << "Reduced matrix for k=" << k
              << " (entry: leading coefficient * z^-order):\n";
    for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
            LeadingTerm got = run.matrix[i - 1][j - 1].leading_term();
            LeadingTerm want = expected_leading_term(i, j);
            std::cout << "  a(" << i << "," << j << ") = " << got.coeff.str()
                      << " * z^-" << got.order;
            if (got.order != want.order || !(got.coeff == want.coeff)) {
                std::cerr << "\nclosed form mismatch at (" << i << "," << j
                          << ")\n";
                return 1;
            }
        }
        std::cout << "\n";
    }
    std::cout << "Every entry matches the half-integer Gamma closed form.\n\n";

    for (int kk = 2; kk <= 5; ++kk) {
        AsymptoticForm form = egf_asymptotic(kk);
        std::cout << "k=" << kk << ": generating function ~ " << form.constant.str()
                  << " * e^(" << form.exp_rate << "z)"
                  << " * z^-(" << form.power.str() << ")"
                  << ",  growth constant " << growth_constant(kk).str() << "\n";
    }
    return 0;
}
