// Prints the stratification of Gr(e+1, S^dU) by numerical type for small d,
// then compares with type frequencies of random subspaces.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>

#include "binform/strata.hpp"
#include "binform/random.hpp"

int main(int argc, char **argv) {
  using namespace binform;
  const int d_max = argc > 1 ? std::atoi(argv[1]) : 6;
  const int trials = argc > 2 ? std::atoi(argv[2]) : 20;
  for (int d = 2; d <= d_max; ++d) {
    for (int e = 0; e < d; ++e) {
      std::cout << "d=" << d << " e=" << e
                << "  dim Gr=" << grassmannian_dim(d, e) << '\n';
      std::map<NumericalType, int> seen;
      for (int i = 0; i < trials; ++i) {
        Rng rng = sub_rng(kDefaultSeed, static_cast<std::uint64_t>(i));
        ++seen[numerical_type(
            random_subspace(d, static_cast<std::size_t>(e + 1), rng))];
      }
      for (const auto &row : strata_table(d, e))
        std::cout << "  " << std::setw(14) << std::left << to_string(row.tau)
                  << " codim " << row.codim << "  random hits "
                  << seen[row.tau] << (row.is_generic ? "  (generic)" : "")
                  << '\n';
    }
  }
}
