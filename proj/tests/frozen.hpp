// Frozen expected values and independent brute-force helpers shared by the
// test suites. The tables were computed by hand from the chain axioms
// alone (residuation, involution, parity), so the tests can hold the
// library to answers it did not produce itself.
#ifndef FLEC_TESTS_FROZEN_HPP
#define FLEC_TESTS_FROZEN_HPP

#include <string>

#include "flec/chain.hpp"

namespace frozen {

// The one-element odd chain.
inline const std::string kS1 =
    "1 0 0\n"
    "0\n";

// The two-element Boolean chain (even, idempotent falsum).
inline const std::string kS2 =
    "2 1 0\n"
    "0 0\n"
    "0 1\n";

// Odd Sugihara monoid on three elements.
inline const std::string kS3 =
    "3 1 1\n"
    "0 0 0\n"
    "0 1 2\n"
    "0 2 2\n";

// Even Sugihara monoid on four elements (idempotent falsum).
inline const std::string kS4 =
    "4 2 1\n"
    "0 0 0 0\n"
    "0 1 1 3\n"
    "0 1 2 3\n"
    "0 3 3 3\n";

// Odd Sugihara monoid on five elements.
inline const std::string kS5 =
    "5 2 2\n"
    "0 0 0 0 0\n"
    "0 1 1 1 4\n"
    "0 1 2 3 4\n"
    "0 1 3 3 4\n"
    "0 4 4 4 4\n";

// Even Sugihara monoid on six elements (idempotent falsum).
inline const std::string kS6 =
    "6 3 2\n"
    "0 0 0 0 0 0\n"
    "0 1 1 1 1 5\n"
    "0 1 2 2 4 5\n"
    "0 1 2 3 4 5\n"
    "0 1 4 4 4 5\n"
    "0 5 5 5 5 5\n";

inline flec::FiniteChainTable table(const std::string& text) {
  return flec::FiniteChainTable::from_text(text);
}

// Residual computed directly from the table, independently of Chain::res:
// the largest z with mul(x, z) <= y, or -1 when none exists.
inline int brute_res(const flec::FiniteChainTable& t, int x, int y) {
  int best = -1;
  for (int z = 0; z < t.n; ++z) {
    if (t.mul[x][z] <= y) best = z;
  }
  return best;
}

// Local unit computed directly from the table: the largest z with
// mul(x, z) <= x.
inline int brute_tau(const flec::FiniteChainTable& t, int x) {
  return brute_res(t, x, x);
}

}  // namespace frozen

#endif
