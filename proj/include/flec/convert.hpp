#ifndef FLEC_CONVERT_HPP
#define FLEC_CONVERT_HPP

#include <functional>
#include <optional>

#include "flec/chain.hpp"
#include "flec/ogroup.hpp"

namespace flec {

/// Reads a totally ordered abelian group as an odd chain: mul is the group
/// operation, the complement is the inverse, and unit = falsum.
Chain induced_chain(const OrderedGroup& g);

/// The inverse reading: recovers the group of a cancellative odd chain.
/// Group chains give their group back; one-element chains give Z^0; other
/// finite chains cannot be cancellative and are rejected. Throws
/// std::domain_error with a witness when the preconditions fail.
OrderedGroup induced_group(const Chain& c);

/// Sampled cancellativity and oddness check backing induced_group.
Report check_cancellative_odd(const Chain& c, const CheckConfig& cfg);

/// Moves the falsum one step down: same carrier, order and mul (hence the
/// same residual), falsum the cocover of the unit, complement the old
/// complement followed by one step down. Requires a discretely ordered
/// cancellative odd chain; the result is even with non-idempotent falsum.
Chain downshift(const Chain& c);

/// Inverse of downshift (structural).
Chain upshift(const Chain& c);

/// Splits an odd group chain at a subgroup: every subgroup element gets a
/// dotted copy immediately below itself, products of two subgroup elements
/// stay plain exactly when both factors were plain subgroup elements, and
/// the complement swaps the copies. The result is even with idempotent
/// falsum (the dotted unit).
Chain split(const Chain& base, SubgroupDesc h);

struct UnsplitResult {
  Chain base;      // the odd chain the input is a split of
  Chain subgroup;  // the doubled subgroup, as a chain of its own
  /// Set when the input is a structural split (its stored description).
  std::optional<SubgroupDesc> subgroup_desc;
  /// The canonical surjection onto the base: drops the dot / steps a
  /// dotted copy up to its plain partner.
  std::function<ChainElement(const ChainElement&)> canonical_hom;
};

/// Inverse of split. Structural splits are unpacked exactly; finite even
/// chains with idempotent falsum are unsplit by computing the doubled
/// subgroup {x : mul(x, f) < x}. Throws std::domain_error when the falsum
/// is not idempotent, the parity is wrong, or the carrier is infinite
/// with no split structure to recover.
UnsplitResult unsplit(const Chain& y);

}  // namespace flec

#endif
