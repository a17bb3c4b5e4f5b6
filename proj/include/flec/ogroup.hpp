#ifndef FLEC_OGROUP_HPP
#define FLEC_OGROUP_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flec/report.hpp"

namespace flec {

using Int = std::int64_t;

/// Element of Z^k, stored as its coordinate vector (first coordinate most
/// significant under the lexicographic order).
struct GroupElement {
  std::vector<Int> coords;
  bool operator==(const GroupElement&) const = default;
};

enum class Direction { Up, Down };

/// The totally ordered abelian group Z^k under lexicographic order.
/// k = 0 is the one-element group. For k >= 1 the group is discrete:
/// (0,...,0,1) is the smallest element strictly above the unit, so every
/// element has an immediate neighbor in each direction.
///
/// Values are immutable and freely shareable across threads.
class OrderedGroup {
 public:
  explicit OrderedGroup(int rank);
  int rank() const { return rank_; }
  /// True iff some smallest strictly positive element exists (rank >= 1).
  bool discrete() const { return rank_ >= 1; }
  GroupElement unit() const;
  bool operator==(const OrderedGroup& o) const { return rank_ == o.rank_; }

 private:
  int rank_;
};

GroupElement group_mul(const OrderedGroup& g, const GroupElement& a,
                       const GroupElement& b);
GroupElement group_inverse(const OrderedGroup& g, const GroupElement& a);
std::strong_ordering group_compare(const OrderedGroup& g,
                                   const GroupElement& a,
                                   const GroupElement& b);
bool group_leq(const OrderedGroup& g, const GroupElement& a,
               const GroupElement& b);

/// Immediate neighbor in the given direction: last coordinate +/- 1.
/// Empty for the one-element group (no neighbors exist).
std::optional<GroupElement> group_cover(const OrderedGroup& g,
                                        const GroupElement& a, Direction d);

/// Uniform sample with every coordinate drawn from [-window, window].
GroupElement group_sample(const OrderedGroup& g, int window,
                          std::mt19937_64& rng);

/// Throws std::invalid_argument unless `a` has exactly g.rank coordinates.
void group_check_element(const OrderedGroup& g, const GroupElement& a);

std::string format_coords(const GroupElement& a);

/// Description of a recognized subgroup of Z^k: the whole group, the
/// trivial subgroup, or a lexicographic prefix Z^j x {0}^(k-j). All of
/// them are cancellative, closed under the operations, and contain the
/// unit by construction.
struct SubgroupDesc {
  enum class Kind { Full, Trivial, Prefix };
  Kind kind = Kind::Full;
  int prefix = 0;  // meaningful when kind == Prefix

  /// Canonical form: the prefix length j with the same member set.
  int prefix_length(const OrderedGroup& g) const;
  bool contains(const OrderedGroup& g, const GroupElement& a) const;
  /// The subgroup as a group in its own right (Z^j).
  OrderedGroup as_group(const OrderedGroup& g) const;
  /// Throws std::invalid_argument if the prefix is out of range for g.
  void validate_for(const OrderedGroup& g) const;

  static SubgroupDesc full() { return {Kind::Full, 0}; }
  static SubgroupDesc trivial() { return {Kind::Trivial, 0}; }
  static SubgroupDesc prefix_of(int j) { return {Kind::Prefix, j}; }
};

/// Semantic equality: same member set within g.
bool same_subgroup(const OrderedGroup& g, const SubgroupDesc& a,
                   const SubgroupDesc& b);

std::string format_subgroup(const SubgroupDesc& d);

/// Order-preserving group homomorphism Z^s -> Z^t. Stored as one of four
/// named kinds; every kind also materializes its integer matrix (t rows,
/// s columns), which makes composition and equality exact.
///
/// The named kinds (trivial, identity, lex-truncate) are order-preserving
/// by construction. A general matrix need not be; use validate_hom.
class Homomorphism {
 public:
  enum class Kind { Trivial, Identity, LexTruncate, Matrix };

  static Homomorphism trivial(const OrderedGroup& src,
                              const OrderedGroup& dst);
  static Homomorphism identity(const OrderedGroup& g);
  /// Keep the first `keep` coordinates; requires keep == dst.rank and
  /// keep <= src.rank.
  static Homomorphism lex_truncate(const OrderedGroup& src,
                                   const OrderedGroup& dst, int keep);
  static Homomorphism matrix(const OrderedGroup& src, const OrderedGroup& dst,
                             std::vector<std::vector<Int>> m);
  /// Builds from a matrix and canonicalizes the kind (recognizes zero,
  /// identity and truncation matrices).
  static Homomorphism from_matrix(const OrderedGroup& src,
                                  const OrderedGroup& dst,
                                  std::vector<std::vector<Int>> m);

  Kind kind() const { return kind_; }
  const OrderedGroup& source() const { return src_; }
  const OrderedGroup& target() const { return dst_; }
  const std::vector<std::vector<Int>>& matrix_form() const { return mat_; }

  GroupElement apply(const GroupElement& a) const;
  /// True for the named kinds, which cannot violate order preservation.
  bool structurally_order_preserving() const { return kind_ != Kind::Matrix; }

  /// Same map: equal source/target ranks and equal matrix form.
  bool operator==(const Homomorphism& o) const;

 private:
  Homomorphism(Kind k, OrderedGroup s, OrderedGroup d,
               std::vector<std::vector<Int>> m);
  Kind kind_;
  OrderedGroup src_, dst_;
  std::vector<std::vector<Int>> mat_;
};

/// outer o inner, defined when inner.target == outer.source.
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

/// Checks the homomorphism law and order preservation. Named kinds pass
/// structurally; matrix kinds are checked on sampled pairs. The report's
/// suite name records the sampling radius used.
Report validate_hom(const Homomorphism& h, const CheckConfig& cfg);

std::string format_hom(const Homomorphism& h);

}  // namespace flec

#endif
