#ifndef FLEC_LAWS_HPP
#define FLEC_LAWS_HPP

#include "flec/chain.hpp"
#include "flec/report.hpp"

namespace flec {

/// Property suite for involutive commutative residuated chains. Checks,
/// on sampled tuples (exhaustively on small finite carriers):
///
///   - adjointness: mul(x,y) <= z iff y <= res(x,z)
///   - complement is an order-reversing involution with complement(t) = f
///   - mul is commutative, associative, with unit t, and monotone
///   - the reflection bound mul(x,y) <= complement(mul(x',y'))
///   - local units: local_unit(x) is a positive idempotent fixed under
///     the complement, below every positive x it measures, and
///     local_unit(mul(x,y)) = max(local_unit(x), local_unit(y))
///   - strict bi-monotonicity: x1 > x and y1 > y imply
///     mul(x1,y1) > mul(x,y)
///   - term locality: the local unit of a random term over mul, res and
///     complement equals the largest local unit of its leaves
///   - parity shape: odd chains have complement(t) = t; even chains have
///     no element strictly between f and t, and the idempotent-falsum
///     subclass matches mul(f,f)
///
/// Deterministic for a fixed config. Chains whose parity cannot be
/// classified report a single parity violation instead of throwing.
Report run_law_suite(const Chain& c, const CheckConfig& cfg);

}  // namespace flec

#endif
