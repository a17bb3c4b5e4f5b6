#ifndef FLEC_SRC_MODELS_HPP
#define FLEC_SRC_MODELS_HPP

// Internal: concrete chain models behind the Chain value type. Structural
// operations recover construction parameters by downcasting the model.

#include <map>
#include <set>

#include "flec/bunch.hpp"
#include "flec/chain.hpp"

namespace flec {

class ChainModel {
 public:
  virtual ~ChainModel() = default;
  virtual ChainKind kind() const = 0;
  virtual ChainElement unit() const = 0;
  virtual ChainElement falsum() const = 0;
  virtual bool leq(const ChainElement& x, const ChainElement& y) const = 0;
  virtual ChainElement mul(const ChainElement& x,
                           const ChainElement& y) const = 0;
  virtual ChainElement complement(const ChainElement& x) const = 0;
  virtual std::optional<ChainElement> cover(const ChainElement& x,
                                            Direction d) const = 0;
  virtual void check_element(const ChainElement& x) const = 0;
  virtual ChainElement sample_one(int window, std::mt19937_64& rng) const = 0;
  virtual std::optional<std::size_t> finite_size() const {
    return std::nullopt;
  }
  virtual std::vector<ChainElement> window_slice(int window) const = 0;
  virtual std::string format(const ChainElement& x) const;
};

class InducedGroupModel final : public ChainModel {
 public:
  explicit InducedGroupModel(OrderedGroup g) : g_(g) {}
  ChainKind kind() const override { return ChainKind::InducedGroup; }
  ChainElement unit() const override;
  ChainElement falsum() const override { return unit(); }
  bool leq(const ChainElement& x, const ChainElement& y) const override;
  ChainElement mul(const ChainElement& x, const ChainElement& y) const override;
  ChainElement complement(const ChainElement& x) const override;
  std::optional<ChainElement> cover(const ChainElement& x,
                                    Direction d) const override;
  void check_element(const ChainElement& x) const override;
  ChainElement sample_one(int window, std::mt19937_64& rng) const override;
  std::optional<std::size_t> finite_size() const override;
  std::vector<ChainElement> window_slice(int window) const override;
  const OrderedGroup& group() const { return g_; }

 private:
  OrderedGroup g_;
};

class DownshiftedModel final : public ChainModel {
 public:
  explicit DownshiftedModel(Chain base);
  ChainKind kind() const override { return ChainKind::Downshifted; }
  ChainElement unit() const override { return base_.unit(); }
  ChainElement falsum() const override;
  bool leq(const ChainElement& x, const ChainElement& y) const override {
    return base_.leq(x, y);
  }
  ChainElement mul(const ChainElement& x, const ChainElement& y) const override {
    return base_.mul(x, y);
  }
  ChainElement complement(const ChainElement& x) const override;
  std::optional<ChainElement> cover(const ChainElement& x,
                                    Direction d) const override {
    return base_.cover(x, d);
  }
  void check_element(const ChainElement& x) const override {
    base_.check_element(x);
  }
  ChainElement sample_one(int window, std::mt19937_64& rng) const override {
    return base_.sample_one(window, rng);
  }
  std::vector<ChainElement> window_slice(int window) const override {
    return base_.window_slice(window);
  }
  const Chain& base() const { return base_; }

 private:
  Chain base_;
};

class SplitModel final : public ChainModel {
 public:
  SplitModel(Chain base, SubgroupDesc h);
  ChainKind kind() const override { return ChainKind::Split; }
  ChainElement unit() const override;
  ChainElement falsum() const override;  // dotted unit
  bool leq(const ChainElement& x, const ChainElement& y) const override;
  ChainElement mul(const ChainElement& x, const ChainElement& y) const override;
  ChainElement complement(const ChainElement& x) const override;
  std::optional<ChainElement> cover(const ChainElement& x,
                                    Direction d) const override;
  void check_element(const ChainElement& x) const override;
  ChainElement sample_one(int window, std::mt19937_64& rng) const override;
  std::optional<std::size_t> finite_size() const override;
  std::vector<ChainElement> window_slice(int window) const override;
  std::string format(const ChainElement& x) const override;

  const Chain& base() const { return base_; }
  const SubgroupDesc& subgroup() const { return h_; }
  const OrderedGroup& group() const;
  bool in_subgroup(const ChainElement& x) const;
  /// The canonical projection: drops the dot.
  ChainElement project(const ChainElement& x) const;

 private:
  Chain base_;
  SubgroupDesc h_;
};

class FiniteTableModel final : public ChainModel {
 public:
  explicit FiniteTableModel(FiniteChainTable t);
  ChainKind kind() const override { return ChainKind::FiniteTable; }
  ChainElement unit() const override;
  ChainElement falsum() const override;
  bool leq(const ChainElement& x, const ChainElement& y) const override;
  ChainElement mul(const ChainElement& x, const ChainElement& y) const override;
  ChainElement complement(const ChainElement& x) const override;
  std::optional<ChainElement> cover(const ChainElement& x,
                                    Direction d) const override;
  void check_element(const ChainElement& x) const override;
  ChainElement sample_one(int window, std::mt19937_64& rng) const override;
  std::optional<std::size_t> finite_size() const override;
  std::vector<ChainElement> window_slice(int window) const override;
  std::string format(const ChainElement& x) const override;

  const FiniteChainTable& table() const { return tab_; }
  int pos(const ChainElement& x) const;
  ChainElement at(int p) const;
  /// Direct max-search residual; compared against the identity route.
  int res_search(int x, int y) const;

 private:
  FiniteChainTable tab_;
  std::vector<int> comp_;
};

/// Finite restriction of a parent chain to a carrier closed under mul and
/// res, with its own unit and falsum (the complement is res against the
/// restriction falsum).
class RestrictionModel final : public ChainModel {
 public:
  RestrictionModel(Chain parent, std::vector<ChainElement> carrier,
                   ChainElement unit, ChainElement falsum);
  ChainKind kind() const override { return ChainKind::FiniteSlice; }
  ChainElement unit() const override { return unit_; }
  ChainElement falsum() const override { return falsum_; }
  bool leq(const ChainElement& x, const ChainElement& y) const override;
  ChainElement mul(const ChainElement& x, const ChainElement& y) const override;
  ChainElement complement(const ChainElement& x) const override;
  std::optional<ChainElement> cover(const ChainElement& x,
                                    Direction d) const override;
  void check_element(const ChainElement& x) const override;
  ChainElement sample_one(int window, std::mt19937_64& rng) const override;
  std::optional<std::size_t> finite_size() const override;
  std::vector<ChainElement> window_slice(int window) const override;
  std::string format(const ChainElement& x) const override;

  const Chain& parent() const { return parent_; }
  const std::vector<ChainElement>& elements() const { return carrier_; }

 private:
  std::size_t index_of(const ChainElement& x) const;
  Chain parent_;
  std::vector<ChainElement> carrier_;  // ascending in the parent order
  ChainElement unit_, falsum_;
};

/// The odd base of an unsplit finite chain: carrier Y minus the dotted
/// copies, operations projected through the canonical surjection h (which
/// replaces a dotted copy by its immediate cover).
class UnsplitBaseModel final : public ChainModel {
 public:
  UnsplitBaseModel(Chain parent, std::vector<ChainElement> carrier,
                   std::set<ChainElement, RawElementLess> dotted);
  ChainKind kind() const override { return ChainKind::FiniteSlice; }
  ChainElement unit() const override { return parent_.unit(); }
  ChainElement falsum() const override { return parent_.unit(); }
  bool leq(const ChainElement& x, const ChainElement& y) const override {
    return parent_.leq(x, y);
  }
  ChainElement mul(const ChainElement& x, const ChainElement& y) const override;
  ChainElement complement(const ChainElement& x) const override;
  std::optional<ChainElement> cover(const ChainElement& x,
                                    Direction d) const override;
  void check_element(const ChainElement& x) const override;
  ChainElement sample_one(int window, std::mt19937_64& rng) const override;
  std::optional<std::size_t> finite_size() const override;
  std::vector<ChainElement> window_slice(int window) const override;
  std::string format(const ChainElement& x) const override;

  ChainElement project(const ChainElement& y) const;  // h

 private:
  std::size_t index_of(const ChainElement& x) const;
  Chain parent_;
  std::vector<ChainElement> carrier_;  // ascending, dotted copies removed
  std::set<ChainElement, RawElementLess> dotted_;
};

/// Chain glued from a bunch of layer algebras: elements are layer-tagged
/// layer elements; operations lift the lower argument into the higher
/// layer through the bunch homomorphisms.
class DerivedModel final : public ChainModel {
 public:
  explicit DerivedModel(BunchOfLayerAlgebras bunch);
  ChainKind kind() const override { return ChainKind::Derived; }
  ChainElement unit() const override;
  ChainElement falsum() const override;
  bool leq(const ChainElement& x, const ChainElement& y) const override;
  ChainElement mul(const ChainElement& x, const ChainElement& y) const override;
  ChainElement complement(const ChainElement& x) const override;
  std::optional<ChainElement> cover(const ChainElement& x,
                                    Direction d) const override;
  void check_element(const ChainElement& x) const override;
  ChainElement sample_one(int window, std::mt19937_64& rng) const override;
  std::optional<std::size_t> finite_size() const override;
  std::vector<ChainElement> window_slice(int window) const override;
  std::string format(const ChainElement& x) const override;

  const BunchOfLayerAlgebras& bunch() const { return bunch_; }
  ChainElement embed(std::size_t layer, const ChainElement& x) const;
  ChainElement extract(const ChainElement& x) const;
  /// The layer-v image of x (apply the hom chain when x sits lower).
  ChainElement lift(const ChainElement& x, std::size_t v) const;

 private:
  BunchOfLayerAlgebras bunch_;
};

}  // namespace flec

#endif
