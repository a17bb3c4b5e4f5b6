#ifndef FLEC_CHAIN_HPP
#define FLEC_CHAIN_HPP

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flec/ogroup.hpp"
#include "flec/report.hpp"

namespace flec {

/// How a chain was constructed. Structural operations (upshift, unsplit,
/// decompose) dispatch on this tag.
enum class ChainKind {
  InducedGroup,  // a totally ordered abelian group read as an odd chain
  Downshifted,   // falsum moved one step below the unit
  Split,         // subgroup elements doubled with a dotted lower copy
  Derived,       // glued from a bunch of layer algebras
  FiniteTable,   // explicit operation table on positions 0..n-1
  FiniteSlice,   // finite restriction or projection of another chain
};

enum class Parity { Odd, EvenIdempotent, EvenNonIdempotent };

std::string to_string(Parity p);

/// Carrier element of a Chain. `layer` indexes the chain's layer list
/// (always 0 for single-layer chains); `dotted` marks the lower copy of a
/// subgroup element inside a split layer; `coords` holds the group payload,
/// or a single table position for finite-table chains. Equality is exact
/// on the representation; ordering questions go through Chain::leq.
struct ChainElement {
  int layer = 0;
  bool dotted = false;
  std::vector<Int> coords;
  bool operator==(const ChainElement&) const = default;
};

/// Strict weak order on the raw representation, for use as a container
/// key. This is not the chain order.
struct RawElementLess {
  bool operator()(const ChainElement& a, const ChainElement& b) const {
    if (a.layer != b.layer) return a.layer < b.layer;
    if (a.dotted != b.dotted) return a.dotted < b.dotted;
    return a.coords < b.coords;
  }
};

class ChainModel;

/// An involutive commutative residuated chain, presented as a bundle of
/// computable operations over a sampleable carrier:
///
///   leq        total order
///   mul        the monoid operation (commutative, unit(), residuated)
///   complement x -> falsum; an order-reversing involution here
///   res        division: res(x, y) = complement(mul(x, complement(y))),
///              the largest z with mul(x, z) <= y
///   local_unit res(x, x), the smallest positive idempotent acting as an
///              identity on x; constant on each layer
///
/// Values are immutable; copying shares the underlying model, and all
/// operations are safe to call concurrently.
class Chain {
 public:
  explicit Chain(std::shared_ptr<const ChainModel> model);

  ChainKind kind() const;
  ChainElement unit() const;    // t
  ChainElement falsum() const;  // f

  bool leq(const ChainElement& x, const ChainElement& y) const;
  bool lt(const ChainElement& x, const ChainElement& y) const;
  ChainElement mul(const ChainElement& x, const ChainElement& y) const;
  ChainElement complement(const ChainElement& x) const;
  ChainElement res(const ChainElement& x, const ChainElement& y) const;
  ChainElement local_unit(const ChainElement& x) const;
  ChainElement max(const ChainElement& x, const ChainElement& y) const;

  /// Immediate neighbor in the chain order, when one exists. Throws
  /// std::domain_error for derived chains (neighbors may cross layers and
  /// are not computed there).
  std::optional<ChainElement> cover(const ChainElement& x, Direction d) const;

  /// Odd (complement(t) = t) or even (t the immediate cover of f, with the
  /// idempotent/non-idempotent falsum subclasses). Throws std::domain_error
  /// if the chain fits neither shape.
  Parity parity() const;

  ChainElement sample_one(int window, std::mt19937_64& rng) const;
  std::vector<ChainElement> sample(int window, int count,
                                   std::mt19937_64& rng) const;

  /// Carrier size when finite.
  std::optional<std::size_t> finite_size() const;
  /// Full carrier in ascending order; throws std::domain_error if infinite.
  std::vector<ChainElement> carrier() const;
  /// Ascending slice of the carrier with coordinates in [-window, window]
  /// (whole carrier for finite chains).
  std::vector<ChainElement> window_slice(int window) const;

  std::string format(const ChainElement& x) const;

  /// Throws std::invalid_argument if x is not an element of this chain.
  void check_element(const ChainElement& x) const;

  const ChainModel& model() const { return *model_; }
  const std::shared_ptr<const ChainModel>& model_ptr() const { return model_; }

 private:
  std::shared_ptr<const ChainModel> model_;
};

/// Explicit operation table on positions 0..n-1 in ascending chain order,
/// with designated unit and falsum positions.
///
/// Text format: a first line "n t_pos f_pos" followed by n rows of n
/// product positions.
struct FiniteChainTable {
  int n = 0;
  int t_pos = 0;
  int f_pos = 0;
  std::vector<std::vector<int>> mul;

  bool operator==(const FiniteChainTable&) const = default;

  /// max{z : mul[x][z] <= f_pos}; well-defined whenever mul[x][0] <= f_pos.
  int complement_of(int x) const;

  /// Checks the chain axioms cell by cell: position sanity, commutativity,
  /// unit row, mul(x, 0) = 0 (residuation non-emptiness), monotonicity,
  /// associativity, and that the derived complement is an involution with
  /// complement(t) = f.
  Report validate() const;

  std::string to_text() const;
  /// Throws std::runtime_error with a line reference on malformed input.
  static FiniteChainTable from_text(const std::string& text);
};

/// Wraps a table as a Chain. The residual is computed through the
/// complement identity, like everywhere else; the law suite additionally
/// compares that route against the direct max-search on tables, so a
/// disagreement (possible only on corrupted tables) surfaces as a reported
/// violation rather than an exception.
Chain table_chain(FiniteChainTable table);

/// The canonical table of a finite chain: positions in ascending order.
/// Empty for infinite chains.
std::optional<FiniteChainTable> to_finite_table(const Chain& c);

/// Finite restriction of `parent` to a carrier closed under mul and res,
/// with its own designated unit and falsum. The complement is taken
/// against the restriction's falsum.
Chain restriction_chain(const Chain& parent, std::vector<ChainElement> carrier,
                        ChainElement unit, ChainElement falsum);

/// Renders the window slice: one line per element with its local unit and
/// complement, then the mul table of the slice. Deterministic formatting.
std::string render_table(const Chain& c, int window);

/// True when the two chains have the same structure and agree elementwise:
/// finite chains are compared by canonical table, infinite ones by
/// structural parameters plus sampled operation agreement. On failure,
/// `why` (when given) receives a witness.
bool chains_equivalent(const Chain& a, const Chain& b, const CheckConfig& cfg,
                       std::string* why = nullptr);

}  // namespace flec

#endif
