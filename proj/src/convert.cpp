#include "flec/convert.hpp"

#include <algorithm>
#include <stdexcept>

#include "models.hpp"

namespace flec {

// ---------------------------------------------------------------------------
// Group <-> chain

Chain induced_chain(const OrderedGroup& g) {
  return Chain(std::make_shared<InducedGroupModel>(g));
}

Report check_cancellative_odd(const Chain& c, const CheckConfig& cfg) {
  Report rep;
  rep.suite = "cancellative-odd";
  ++rep.checks;
  if (!(c.complement(c.unit()) == c.unit()))
    rep.add("odd", "complement(t) != t");
  auto size = c.finite_size();
  if (size && *size <= 16) {
    auto elems = c.carrier();
    for (const auto& x : elems)
      for (const auto& y : elems) {
        if (x == y) continue;
        for (const auto& z : elems) {
          ++rep.checks;
          if (c.mul(x, z) == c.mul(y, z)) {
            rep.add("cancellative", "mul(" + c.format(x) + "," + c.format(z) +
                                        ") = mul(" + c.format(y) + "," +
                                        c.format(z) + ")");
            return rep;
          }
        }
      }
    return rep;
  }
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    auto x = c.sample_one(cfg.window, rng);
    auto y = c.sample_one(cfg.window, rng);
    auto z = c.sample_one(cfg.window, rng);
    if (x == y) continue;
    ++rep.checks;
    if (c.mul(x, z) == c.mul(y, z)) {
      rep.add("cancellative", "mul(" + c.format(x) + "," + c.format(z) +
                                  ") = mul(" + c.format(y) + "," +
                                  c.format(z) + ")");
      break;
    }
  }
  return rep;
}

OrderedGroup induced_group(const Chain& c) {
  if (c.kind() == ChainKind::InducedGroup)
    return static_cast<const InducedGroupModel&>(c.model()).group();
  auto rep = check_cancellative_odd(c, CheckConfig{});
  if (!rep.passed())
    throw std::domain_error("not a cancellative odd chain: [" +
                            rep.violations.front().law + "] " +
                            rep.violations.front().witness);
  if (c.finite_size() == std::size_t{1}) return OrderedGroup(0);
  throw std::domain_error("cannot recover group structure from this chain");
}

// ---------------------------------------------------------------------------
// Downshift / upshift

DownshiftedModel::DownshiftedModel(Chain base) : base_(std::move(base)) {
  if (base_.kind() != ChainKind::InducedGroup)
    throw std::domain_error("downshift requires a cancellative odd group chain");
  if (!base_.cover(base_.unit(), Direction::Down))
    throw std::domain_error("chain not discretely ordered (no cocover of t)");
}

ChainElement DownshiftedModel::falsum() const {
  return *base_.cover(base_.unit(), Direction::Down);
}

ChainElement DownshiftedModel::complement(const ChainElement& x) const {
  return *base_.cover(base_.complement(x), Direction::Down);
}

Chain downshift(const Chain& c) {
  return Chain(std::make_shared<DownshiftedModel>(c));
}

Chain upshift(const Chain& c) {
  if (c.kind() != ChainKind::Downshifted)
    throw std::domain_error("upshift requires a downshifted chain");
  return static_cast<const DownshiftedModel&>(c.model()).base();
}

// ---------------------------------------------------------------------------
// Split

SplitModel::SplitModel(Chain base, SubgroupDesc h)
    : base_(std::move(base)), h_(h) {
  if (base_.kind() != ChainKind::InducedGroup)
    throw std::domain_error("split requires a cancellative odd group chain");
  h_.validate_for(group());
}

const OrderedGroup& SplitModel::group() const {
  return static_cast<const InducedGroupModel&>(base_.model()).group();
}

bool SplitModel::in_subgroup(const ChainElement& x) const {
  return h_.contains(group(), GroupElement{x.coords});
}

ChainElement SplitModel::project(const ChainElement& x) const {
  return ChainElement{0, false, x.coords};
}

void SplitModel::check_element(const ChainElement& x) const {
  base_.check_element(project(x));
  if (x.layer != 0)
    throw std::invalid_argument("foreign element for a split chain");
  if (x.dotted && !in_subgroup(x))
    throw std::invalid_argument("dotted element outside the subgroup");
}

ChainElement SplitModel::unit() const { return base_.unit(); }

ChainElement SplitModel::falsum() const {
  auto f = base_.unit();
  f.dotted = true;
  return f;
}

bool SplitModel::leq(const ChainElement& x, const ChainElement& y) const {
  check_element(x);
  check_element(y);
  auto px = project(x);
  auto py = project(y);
  if (x.dotted == y.dotted) return base_.leq(px, py);
  // The dotted copy sits immediately below its plain partner.
  if (x.dotted) return base_.leq(px, py);
  return base_.lt(px, py);
}

ChainElement SplitModel::mul(const ChainElement& x,
                             const ChainElement& y) const {
  check_element(x);
  check_element(y);
  auto p = base_.mul(project(x), project(y));
  bool both_plain_members = !x.dotted && !y.dotted && in_subgroup(x) &&
                            in_subgroup(y);
  if (!h_.contains(group(), GroupElement{p.coords}) || both_plain_members)
    return p;
  p.dotted = true;
  return p;
}

ChainElement SplitModel::complement(const ChainElement& x) const {
  check_element(x);
  auto c = base_.complement(project(x));
  if (!x.dotted && in_subgroup(x)) c.dotted = true;
  return c;
}

std::optional<ChainElement> SplitModel::cover(const ChainElement& x,
                                              Direction d) const {
  check_element(x);
  if (x.dotted) {
    if (d == Direction::Up) return project(x);
    auto b = base_.cover(project(x), Direction::Down);
    return b;  // empty on the trivial base
  }
  if (d == Direction::Down) {
    if (in_subgroup(x)) {
      auto r = x;
      r.dotted = true;
      return r;
    }
    return base_.cover(x, Direction::Down);
  }
  auto b = base_.cover(x, Direction::Up);
  if (!b) return std::nullopt;
  if (h_.contains(group(), GroupElement{b->coords})) b->dotted = true;
  return b;
}

ChainElement SplitModel::sample_one(int window, std::mt19937_64& rng) const {
  auto x = base_.sample_one(window, rng);
  if (in_subgroup(x) && (rng() & 1)) x.dotted = true;
  return x;
}

std::optional<std::size_t> SplitModel::finite_size() const {
  auto b = base_.finite_size();
  if (!b) return std::nullopt;
  std::size_t members = 0;
  for (const auto& e : base_.carrier())
    if (in_subgroup(e)) ++members;
  return *b + members;
}

std::vector<ChainElement> SplitModel::window_slice(int window) const {
  std::vector<ChainElement> out;
  for (const auto& e : base_.window_slice(window)) {
    if (in_subgroup(e)) {
      auto d = e;
      d.dotted = true;
      out.push_back(d);
    }
    out.push_back(e);
  }
  return out;
}

std::string SplitModel::format(const ChainElement& x) const {
  auto s = base_.format(project(x));
  return x.dotted ? "*" + s : s;
}

Chain split(const Chain& base, SubgroupDesc h) {
  return Chain(std::make_shared<SplitModel>(base, h));
}

// ---------------------------------------------------------------------------
// Unsplit

UnsplitBaseModel::UnsplitBaseModel(
    Chain parent, std::vector<ChainElement> carrier,
    std::set<ChainElement, RawElementLess> dotted)
    : parent_(std::move(parent)),
      carrier_(std::move(carrier)),
      dotted_(std::move(dotted)) {
  std::sort(carrier_.begin(), carrier_.end(),
            [&](const ChainElement& a, const ChainElement& b) {
              return parent_.leq(a, b) && !(a == b);
            });
}

std::size_t UnsplitBaseModel::index_of(const ChainElement& x) const {
  for (std::size_t i = 0; i < carrier_.size(); ++i)
    if (carrier_[i] == x) return i;
  throw std::invalid_argument("foreign element for an unsplit base");
}

void UnsplitBaseModel::check_element(const ChainElement& x) const {
  index_of(x);
}

ChainElement UnsplitBaseModel::project(const ChainElement& y) const {
  if (!dotted_.count(y)) return y;
  // The immediate cover of a doubled element is its plain partner, which
  // survives into the base carrier.
  for (const auto& e : carrier_)
    if (parent_.lt(y, e)) return e;
  throw std::logic_error("doubled element with no cover");
}

ChainElement UnsplitBaseModel::mul(const ChainElement& x,
                                   const ChainElement& y) const {
  check_element(x);
  check_element(y);
  return project(parent_.mul(x, y));
}

ChainElement UnsplitBaseModel::complement(const ChainElement& x) const {
  check_element(x);
  return project(parent_.res(x, parent_.unit()));
}

std::optional<ChainElement> UnsplitBaseModel::cover(const ChainElement& x,
                                                    Direction d) const {
  std::size_t i = index_of(x);
  if (d == Direction::Up)
    return i + 1 < carrier_.size() ? std::optional(carrier_[i + 1])
                                   : std::nullopt;
  return i > 0 ? std::optional(carrier_[i - 1]) : std::nullopt;
}

ChainElement UnsplitBaseModel::sample_one(int, std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> dist(0, carrier_.size() - 1);
  return carrier_[dist(rng)];
}

std::optional<std::size_t> UnsplitBaseModel::finite_size() const {
  return carrier_.size();
}

std::vector<ChainElement> UnsplitBaseModel::window_slice(int) const {
  return carrier_;
}

std::string UnsplitBaseModel::format(const ChainElement& x) const {
  return parent_.format(x);
}

UnsplitResult unsplit(const Chain& y) {
  if (y.kind() == ChainKind::Split) {
    const auto& m = static_cast<const SplitModel&>(y.model());
    auto desc = m.subgroup();
    auto sub_group = desc.as_group(m.group());
    auto model = y.model_ptr();
    return UnsplitResult{
        m.base(), induced_chain(sub_group), desc,
        [model](const ChainElement& x) {
          return static_cast<const SplitModel&>(*model).project(x);
        }};
  }
  Parity p;
  try {
    p = y.parity();
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string("unsplit: ") + e.what());
  }
  if (p != Parity::EvenIdempotent)
    throw std::domain_error(p == Parity::Odd
                                ? "unsplit: chain is odd"
                                : "unsplit: falsum not idempotent");
  if (!y.finite_size())
    throw std::domain_error(
        "unsplit: infinite chain with no split structure to recover");

  auto f = y.falsum();
  std::vector<ChainElement> doubled;  // {x : mul(x, f) < x}
  std::set<ChainElement, RawElementLess> dotted;
  for (const auto& x : y.carrier())
    if (y.lt(y.mul(x, f), x)) {
      doubled.push_back(x);
      dotted.insert(y.mul(x, f));
    }
  std::vector<ChainElement> base_carrier;
  for (const auto& x : y.carrier())
    if (!dotted.count(x)) base_carrier.push_back(x);

  auto base_model = std::make_shared<UnsplitBaseModel>(y, base_carrier, dotted);
  Chain base(base_model);
  Chain sub = restriction_chain(base, doubled, base.unit(), base.unit());
  return UnsplitResult{base, sub, std::nullopt,
                       [base_model](const ChainElement& x) {
                         return base_model->project(x);
                       }};
}

}  // namespace flec
