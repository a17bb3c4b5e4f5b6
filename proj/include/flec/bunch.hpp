#ifndef FLEC_BUNCH_HPP
#define FLEC_BUNCH_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flec/chain.hpp"
#include "flec/ogroup.hpp"
#include "flec/report.hpp"

namespace flec {

/// Parity class of the chain a bunch describes: odd, even with idempotent
/// falsum, or even with non-idempotent falsum.
enum class Xi { Odd, EvenIdempotent, EvenNonIdempotent };

/// Class of a non-least layer label: I (the layer's falsum is idempotent)
/// or J (it is not). The least label has no class of its own.
enum class LayerClass { Unit, ClassI, ClassJ };

/// What kind of algebra lives at a layer:
///   Omega: a cancellative odd chain (a group in disguise)
///   Psi:   a discretely ordered cancellative even chain (downshifted group)
///   Theta: an even chain with idempotent falsum (a split group)
enum class LayerRole { Omega, Psi, Theta };

std::string to_string(Xi x);
std::string to_string(LayerRole r);

/// The index set of a bunch: finitely many layer labels in ascending
/// order (labels[0] is the least, the unit layer, conventionally "t"),
/// each non-least label classified I or J, plus the parity class. The
/// role of every layer follows from that data: J labels are Psi, I labels
/// are Theta, and the least label is Omega / Psi / Theta according to the
/// parity (odd / even non-idempotent / even idempotent).
struct KappaIndex {
  std::vector<std::string> labels;
  std::vector<LayerClass> classes;  // parallel to labels; classes[0] == Unit
  Xi xi = Xi::Odd;

  std::size_t size() const { return labels.size(); }
  LayerRole role(std::size_t i) const;
  /// Throws std::invalid_argument on a malformed index.
  void validate() const;
  bool operator==(const KappaIndex&) const = default;
};

/// A bunch of layer groups: one totally ordered abelian group per layer,
/// a subgroup for every Theta layer, and an order-preserving homomorphism
/// for every increasing pair of layers, subject to:
///   - composition coherence along increasing triples,
///   - homs out of Psi layers collapse the unit's cocover to the unit,
///   - homs into Theta layers land inside the designated subgroup,
///   - Psi layer groups are discrete.
/// validate_bunch checks all of these and reports violations.
struct BunchOfLayerGroups {
  KappaIndex index;
  std::vector<OrderedGroup> groups;                   // parallel to labels
  std::map<std::size_t, SubgroupDesc> subgroups;      // keyed by Theta layers
  std::map<std::pair<std::size_t, std::size_t>, Homomorphism> homs;  // u < v

  const Homomorphism& hom(std::size_t u, std::size_t v) const;
};

/// A homomorphism between layer carriers. `apply` works on layer elements
/// (layer field 0). When the map is backed by a group homomorphism (every
/// bunch built from groups), `group_hom` carries it for exact recovery.
struct AlgebraHom {
  std::function<ChainElement(const ChainElement&)> apply;
  std::optional<Homomorphism> group_hom;
};

/// A bunch of layer algebras: one single-layer chain per label and a
/// homomorphism of the residuated reducts for every increasing pair.
struct BunchOfLayerAlgebras {
  KappaIndex index;
  std::vector<Chain> layers;  // parallel to labels
  std::map<std::pair<std::size_t, std::size_t>, AlgebraHom> homs;  // u < v

  const AlgebraHom& hom(std::size_t u, std::size_t v) const;
};

/// Group-side validity: discreteness of Psi layer groups, per-hom checks,
/// composition coherence (exact, via matrices), cocover collapse out of
/// Psi layers, and subgroup targeting into Theta layers.
Report validate_bunch(const BunchOfLayerGroups& g, const CheckConfig& cfg);

/// Algebra-side validity: each layer has the shape its role demands,
/// homs preserve mul, res and order, collapse unit and falsum of non-Omega
/// sources, and compose coherently.
Report validate_bunch(const BunchOfLayerAlgebras& a, const CheckConfig& cfg);

/// Layer algebras of a bunch of groups: Omega layers become the group
/// chain itself, Psi layers its downshift, Theta layers the split of the
/// group chain at the designated subgroup. Homs act on the underlying
/// group element (dots dropped first).
BunchOfLayerAlgebras groups_to_algebras(const BunchOfLayerGroups& g);

/// The inverse reading: Omega layers give their group back, Psi layers
/// are upshifted first, Theta layers are unsplit into base and subgroup.
/// Throws std::domain_error when a layer is not recoverable.
BunchOfLayerGroups algebras_to_groups(const BunchOfLayerAlgebras& a);

/// Glues the layer algebras into one chain over the disjoint union of the
/// layer carriers. Requires a hom for every increasing pair.
Chain derive_chain(const BunchOfLayerAlgebras& a);

/// Recovers the bunch of layer algebras of a chain. Derived chains are
/// unpacked structurally (and the layer tags re-checked on samples);
/// single-layer constructions become one-layer bunches; finite chains are
/// decomposed exactly by computing every local unit. Throws
/// std::domain_error on chains failing the axioms or outside these kinds.
BunchOfLayerAlgebras decompose_chain(const Chain& c, const CheckConfig& cfg);

/// End-to-end representation check for one bunch of groups: validates it,
/// builds the layer algebras, validates them, derives the chain, runs the
/// law suite, decomposes back, and compares the recovered bunch of groups
/// with the input. All findings end up in one report.
Report verify_representation(const BunchOfLayerGroups& g,
                             const CheckConfig& cfg);

/// Exact equality of bunches of groups (index, ranks, subgroups, hom
/// matrices). On failure `why` receives a witness.
bool bunches_equal(const BunchOfLayerGroups& a, const BunchOfLayerGroups& b,
                   std::string* why = nullptr);

/// Equality of bunches of algebras: same index, equivalent layers, and
/// homs agreeing on sampled layer elements.
bool bunches_equal(const BunchOfLayerAlgebras& a,
                   const BunchOfLayerAlgebras& b, const CheckConfig& cfg,
                   std::string* why = nullptr);

/// One layer holding a single group: odd reads it as the group chain,
/// even non-idempotent as its downshift (g must be discrete), even
/// idempotent as its split at `sub` (default: the whole group).
BunchOfLayerGroups single_layer_bunch(const OrderedGroup& g, Xi xi,
                                      SubgroupDesc sub = SubgroupDesc::full());

/// The Sugihara bunch with `layer_count` layers: all groups trivial, all
/// homs trivial, every non-least label of class I. Odd variants give the
/// odd Sugihara chain of size 2*layer_count - 1, even variants the even
/// one of size 2*layer_count.
BunchOfLayerGroups sugihara_bunch(std::size_t layer_count, bool even);

}  // namespace flec

#endif
