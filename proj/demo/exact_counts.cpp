// Worked example: count matchings with bounded crossing number by two
// independent routes and print the agreeing table.
//
//   $ ./demo_exact_counts
//
// For small n the walk dynamic program and the series determinant must
// produce identical integers; the demo recomputes both and refuses to
// print a row they disagree on.

#include <iostream>

#include "kcross/bessel_series.hpp"
#include "kcross/tableaux.hpp"

int main() {
    using namespace kcross;

    const int n_max = 8;
    std::cout << "Counts of matchings on 2n points whose largest set of\n"
                 "pairwise-crossing arcs has size < k.\n\n";
    std::cout << "   n:";
    for (int n = 0; n <= n_max; ++n) std::cout << "  " << n;
    std::cout << "\n";

    for (int k = 2; k <= 5; ++k) {
        std::vector<Int> walk = tableau_walk_counts(k, n_max);
        std::vector<Int> det = count_by_determinant(k, n_max);
        std::cout << " k=" << k << ":";
        for (int n = 0; n <= n_max; ++n) {
            if (walk[n] != det[n]) {
                std::cerr << "method disagreement at k=" << k << ", n=" << n
                          << ": " << walk[n] << " vs " << det[n] << "\n";
                return 1;
            }
            std::cout << "  " << walk[n];
        }
        std::cout << "\n";
    }

    std::cout << "\nRows k=2 are the Catalan numbers; the k=5 row already\n"
                 "tracks (2n-1)!! closely because few small matchings\n"
                 "contain five mutually crossing arcs.\n";
    return 0;
}
