#ifndef FLEC_ORACLE_HPP
#define FLEC_ORACLE_HPP

#include <optional>
#include <vector>

#include "flec/chain.hpp"
#include "flec/report.hpp"

namespace flec {

/// Exhaustive search parameters: the carrier size, and optionally a parity
/// to restrict the results to.
struct SearchConfig {
  int n = 1;
  std::optional<Parity> parity;
};

/// Every involutive commutative residuated chain on n totally ordered
/// elements, as canonical tables in lexicographic order of their mul rows.
///
/// The designated positions are forced before the search starts: the
/// complement is an order-reversing involution, so on positions it must be
/// p -> n-1-p, which pins t = f = (n-1)/2 on odd carriers and f = n/2 - 1,
/// t = n/2 on even ones. The search backtracks over symmetric tables with
/// the unit row and absorbing bottom filled in, keeps rows monotone via
/// cell bounds, checks associativity incrementally, and filters by the
/// involution law (and the requested parity) on completion.
///
/// Sizes 1 through 8 are supported; larger carriers are rejected.
std::vector<FiniteChainTable> enumerate_finite_chains(const SearchConfig& sc);

/// What the layer catalog predicts for carrier size n: the derived chains
/// of the bunches of trivial groups with that size. Odd sizes n = 2m - 1
/// come from the m-layer odd bunch, even sizes n = 2m from the m-layer
/// even one. Finite chains admit no other bunch: a layer group must be
/// finite, hence trivial, which rules out the discretely ordered layers
/// entirely and leaves no choice of subgroup or homomorphism.
std::vector<FiniteChainTable> catalog_tables(int n);

/// Cross-checks the enumeration against the catalog for every size
/// 1..max_n: equal counts and equal table sets, the parity-restricted
/// searches partition the full one, no even chain with non-idempotent
/// falsum exists, and every enumerated table passes the law suite and
/// decomposes and re-derives bit-exactly.
Report cross_check(int max_n, const CheckConfig& cfg);

}  // namespace flec

#endif
