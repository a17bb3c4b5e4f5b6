#include "flec/bunch.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "flec/convert.hpp"
#include "flec/laws.hpp"
#include "models.hpp"

namespace flec {

namespace {

void merge_prefixed(Report& rep, const Report& sub, const std::string& prefix) {
  rep.checks += sub.checks;
  for (const auto& v : sub.violations) rep.add(v.law, prefix + ": " + v.witness);
}

Xi xi_of(Parity p) {
  switch (p) {
    case Parity::Odd: return Xi::Odd;
    case Parity::EvenIdempotent: return Xi::EvenIdempotent;
    case Parity::EvenNonIdempotent: return Xi::EvenNonIdempotent;
  }
  throw std::logic_error("unreachable parity");
}

}  // namespace

std::string to_string(Xi x) {
  switch (x) {
    case Xi::Odd: return "O";
    case Xi::EvenIdempotent: return "E_id";
    case Xi::EvenNonIdempotent: return "E_nonid";
  }
  return "?";
}

std::string to_string(LayerRole r) {
  switch (r) {
    case LayerRole::Omega: return "Omega";
    case LayerRole::Psi: return "Psi";
    case LayerRole::Theta: return "Theta";
  }
  return "?";
}

LayerRole KappaIndex::role(std::size_t i) const {
  if (i >= labels.size())
    throw std::invalid_argument("layer index out of range");
  if (i == 0) {
    switch (xi) {
      case Xi::Odd: return LayerRole::Omega;
      case Xi::EvenNonIdempotent: return LayerRole::Psi;
      case Xi::EvenIdempotent: return LayerRole::Theta;
    }
  }
  return classes[i] == LayerClass::ClassJ ? LayerRole::Psi : LayerRole::Theta;
}

void KappaIndex::validate() const {
  if (labels.empty())
    throw std::invalid_argument("a bunch needs at least one layer");
  if (classes.size() != labels.size())
    throw std::invalid_argument("classes do not parallel the labels");
  if (classes[0] != LayerClass::Unit)
    throw std::invalid_argument("the least layer carries no class of its own");
  for (std::size_t i = 1; i < classes.size(); ++i)
    if (classes[i] == LayerClass::Unit)
      throw std::invalid_argument("non-least layer '" + labels[i] +
                                  "' needs class I or J");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw std::invalid_argument("empty layer label");
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate layer label '" + l + "'");
  }
}

const Homomorphism& BunchOfLayerGroups::hom(std::size_t u,
                                            std::size_t v) const {
  auto it = homs.find({u, v});
  if (it == homs.end())
    throw std::invalid_argument("missing homomorphism " + index.labels.at(u) +
                                "->" + index.labels.at(v));
  return it->second;
}

const AlgebraHom& BunchOfLayerAlgebras::hom(std::size_t u,
                                            std::size_t v) const {
  auto it = homs.find({u, v});
  if (it == homs.end())
    throw std::invalid_argument("missing homomorphism " + index.labels.at(u) +
                                "->" + index.labels.at(v));
  return it->second;
}

// ---------------------------------------------------------------------------
// The derived chain

DerivedModel::DerivedModel(BunchOfLayerAlgebras bunch)
    : bunch_(std::move(bunch)) {
  bunch_.index.validate();
  if (bunch_.layers.size() != bunch_.index.size())
    throw std::invalid_argument("layers do not parallel the index labels");
  for (std::size_t u = 0; u < bunch_.layers.size(); ++u)
    for (std::size_t v = u + 1; v < bunch_.layers.size(); ++v)
      if (!bunch_.homs.count({u, v}))
        throw std::invalid_argument(
            "derive needs a homomorphism for every increasing pair (missing " +
            bunch_.index.labels[u] + "->" + bunch_.index.labels[v] + ")");
}

ChainElement DerivedModel::embed(std::size_t layer,
                                 const ChainElement& x) const {
  auto r = x;
  r.layer = static_cast<int>(layer);
  return r;
}

ChainElement DerivedModel::extract(const ChainElement& x) const {
  auto r = x;
  r.layer = 0;
  return r;
}

ChainElement DerivedModel::lift(const ChainElement& x, std::size_t v) const {
  auto u = static_cast<std::size_t>(x.layer);
  if (u == v) return x;
  if (u > v) throw std::logic_error("lift goes upward only");
  return embed(v, bunch_.hom(u, v).apply(extract(x)));
}

void DerivedModel::check_element(const ChainElement& x) const {
  if (x.layer < 0 || static_cast<std::size_t>(x.layer) >= bunch_.layers.size())
    throw std::invalid_argument("foreign element for a derived chain");
  bunch_.layers[static_cast<std::size_t>(x.layer)].check_element(extract(x));
}

ChainElement DerivedModel::unit() const {
  return embed(0, bunch_.layers[0].unit());
}

ChainElement DerivedModel::falsum() const {
  return embed(0, bunch_.layers[0].falsum());
}

bool DerivedModel::leq(const ChainElement& x, const ChainElement& y) const {
  check_element(x);
  check_element(y);
  auto u = static_cast<std::size_t>(x.layer);
  auto v = static_cast<std::size_t>(y.layer);
  if (u == v) return bunch_.layers[u].leq(extract(x), extract(y));
  // Lower layers nest strictly inside higher ones: a lower element sits
  // immediately below its image, so ties resolve in the image's favor
  // upward and strictly downward.
  if (u < v) return bunch_.layers[v].leq(extract(lift(x, v)), extract(y));
  return bunch_.layers[u].lt(extract(x), extract(lift(y, u)));
}

ChainElement DerivedModel::mul(const ChainElement& x,
                               const ChainElement& y) const {
  check_element(x);
  check_element(y);
  auto w = static_cast<std::size_t>(std::max(x.layer, y.layer));
  return embed(w, bunch_.layers[w].mul(extract(lift(x, w)),
                                       extract(lift(y, w))));
}

ChainElement DerivedModel::complement(const ChainElement& x) const {
  check_element(x);
  auto u = static_cast<std::size_t>(x.layer);
  return embed(u, bunch_.layers[u].complement(extract(x)));
}

std::optional<ChainElement> DerivedModel::cover(const ChainElement&,
                                                Direction) const {
  throw std::domain_error(
      "cover is not computed on derived chains (neighbors may cross layers)");
}

ChainElement DerivedModel::sample_one(int window, std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> dist(0, bunch_.layers.size() - 1);
  auto u = dist(rng);
  return embed(u, bunch_.layers[u].sample_one(window, rng));
}

std::optional<std::size_t> DerivedModel::finite_size() const {
  std::size_t total = 0;
  for (const auto& layer : bunch_.layers) {
    auto s = layer.finite_size();
    if (!s) return std::nullopt;
    total += *s;
  }
  return total;
}

std::vector<ChainElement> DerivedModel::window_slice(int window) const {
  std::vector<ChainElement> out;
  for (std::size_t u = 0; u < bunch_.layers.size(); ++u)
    for (const auto& e : bunch_.layers[u].window_slice(window))
      out.push_back(embed(u, e));
  std::sort(out.begin(), out.end(),
            [this](const ChainElement& x, const ChainElement& y) {
              return leq(x, y) && !(x == y);
            });
  return out;
}

std::string DerivedModel::format(const ChainElement& x) const {
  auto u = static_cast<std::size_t>(x.layer);
  return bunch_.index.labels[u] + ":" +
         bunch_.layers[u].format(extract(x));
}

Chain derive_chain(const BunchOfLayerAlgebras& a) {
  return Chain(std::make_shared<DerivedModel>(a));
}

// ---------------------------------------------------------------------------
// Groups <-> algebras

BunchOfLayerAlgebras groups_to_algebras(const BunchOfLayerGroups& g) {
  g.index.validate();
  if (g.groups.size() != g.index.size())
    throw std::invalid_argument("groups do not parallel the index labels");
  BunchOfLayerAlgebras out;
  out.index = g.index;
  out.layers.reserve(g.groups.size());
  for (std::size_t i = 0; i < g.groups.size(); ++i) {
    switch (g.index.role(i)) {
      case LayerRole::Omega:
        out.layers.push_back(induced_chain(g.groups[i]));
        break;
      case LayerRole::Psi:
        out.layers.push_back(downshift(induced_chain(g.groups[i])));
        break;
      case LayerRole::Theta: {
        auto it = g.subgroups.find(i);
        if (it == g.subgroups.end())
          throw std::invalid_argument("layer '" + g.index.labels[i] +
                                      "' needs a designated subgroup");
        out.layers.push_back(split(induced_chain(g.groups[i]), it->second));
        break;
      }
    }
  }
  for (const auto& [key, h] : g.homs) {
    AlgebraHom ah;
    ah.group_hom = h;
    // Dots and the downshifted falsum both ride on the group payload, so
    // one map serves every role: apply the group homomorphism to the
    // coordinates and land on the plain copy.
    ah.apply = [h](const ChainElement& x) {
      auto b = h.apply(GroupElement{x.coords});
      return ChainElement{0, false, std::move(b.coords)};
    };
    out.homs.emplace(key, std::move(ah));
  }
  return out;
}

BunchOfLayerGroups algebras_to_groups(const BunchOfLayerAlgebras& a) {
  a.index.validate();
  if (a.layers.size() != a.index.size())
    throw std::invalid_argument("layers do not parallel the index labels");
  BunchOfLayerGroups out;
  out.index = a.index;
  out.groups.reserve(a.layers.size());
  for (std::size_t i = 0; i < a.layers.size(); ++i) {
    const Chain& layer = a.layers[i];
    switch (a.index.role(i)) {
      case LayerRole::Omega:
        out.groups.push_back(induced_group(layer));
        break;
      case LayerRole::Psi:
        out.groups.push_back(induced_group(upshift(layer)));
        break;
      case LayerRole::Theta: {
        auto u = unsplit(layer);
        out.groups.push_back(induced_group(u.base));
        out.subgroups.emplace(i,
                              u.subgroup_desc.value_or(SubgroupDesc::full()));
        break;
      }
    }
  }
  for (const auto& [key, ah] : a.homs) {
    if (key.first >= key.second || key.second >= out.groups.size())
      throw std::invalid_argument("hom keyed by a non-increasing pair");
    const auto& src = out.groups[key.first];
    const auto& dst = out.groups[key.second];
    if (ah.group_hom) {
      if (!(ah.group_hom->source() == src && ah.group_hom->target() == dst))
        throw std::domain_error(
            "stored group homomorphism does not match the recovered groups");
      out.homs.emplace(key, *ah.group_hom);
      continue;
    }
    // Reconstruct the matrix columnwise from the action on the basis.
    std::vector<std::vector<Int>> m(
        static_cast<std::size_t>(dst.rank()),
        std::vector<Int>(static_cast<std::size_t>(src.rank()), 0));
    for (int col = 0; col < src.rank(); ++col) {
      ChainElement e{0, false,
                     std::vector<Int>(static_cast<std::size_t>(src.rank()), 0)};
      e.coords[static_cast<std::size_t>(col)] = 1;
      auto img = ah.apply(e);
      if (img.coords.size() != static_cast<std::size_t>(dst.rank()))
        throw std::domain_error(
            "cannot recover the homomorphism out of layer '" +
            a.index.labels[key.first] + "'");
      for (int row = 0; row < dst.rank(); ++row)
        m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
            img.coords[static_cast<std::size_t>(row)];
    }
    out.homs.emplace(key, Homomorphism::from_matrix(src, dst, std::move(m)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

Report validate_bunch(const BunchOfLayerGroups& g, const CheckConfig& cfg) {
  Report rep;
  rep.suite = "bunch-groups";
  try {
    g.index.validate();
    ++rep.checks;
  } catch (const std::exception& e) {
    rep.add("index", e.what());
    return rep;
  }
  if (g.groups.size() != g.index.size()) {
    rep.add("shape", "groups do not parallel the index labels");
    return rep;
  }
  const auto n = g.index.size();
  auto pair_name = [&](std::size_t u, std::size_t v) {
    return g.index.labels[u] + "->" + g.index.labels[v];
  };

  for (std::size_t i = 0; i < n; ++i) {
    auto role = g.index.role(i);
    if (role == LayerRole::Psi) {
      ++rep.checks;
      if (!g.groups[i].discrete())
        rep.add("psi-discrete", "layer '" + g.index.labels[i] +
                                    "' needs a discretely ordered group");
    }
    if (role == LayerRole::Theta) {
      ++rep.checks;
      auto it = g.subgroups.find(i);
      if (it == g.subgroups.end()) {
        rep.add("subgroup-missing", "layer '" + g.index.labels[i] +
                                        "' has no designated subgroup");
      } else {
        try {
          it->second.validate_for(g.groups[i]);
        } catch (const std::exception& e) {
          rep.add("subgroup",
                  "layer '" + g.index.labels[i] + "': " + e.what());
        }
      }
    }
  }
  for (const auto& [i, desc] : g.subgroups) {
    (void)desc;
    ++rep.checks;
    if (i >= n || g.index.role(i) != LayerRole::Theta)
      rep.add("subgroup-spurious",
              "subgroup designated for a layer that takes none");
  }

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      ++rep.checks;
      auto it = g.homs.find({u, v});
      if (it == g.homs.end()) {
        rep.add("hom-missing", pair_name(u, v));
        continue;
      }
      const auto& h = it->second;
      ++rep.checks;
      if (!(h.source() == g.groups[u] && h.target() == g.groups[v])) {
        rep.add("hom-shape",
                pair_name(u, v) + " has the wrong source or target rank");
        continue;
      }
      merge_prefixed(rep, validate_hom(h, cfg), pair_name(u, v));
    }
  for (const auto& [key, h] : g.homs) {
    (void)h;
    ++rep.checks;
    if (key.first >= key.second || key.second >= n)
      rep.add("hom-spurious", "hom keyed by a non-increasing pair");
  }

  // Composition coherence, exact on the matrices.
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (std::size_t w = v + 1; w < n; ++w) {
        auto uv = g.homs.find({u, v});
        auto vw = g.homs.find({v, w});
        auto uw = g.homs.find({u, w});
        if (uv == g.homs.end() || vw == g.homs.end() || uw == g.homs.end())
          continue;
        ++rep.checks;
        try {
          if (!(compose(vw->second, uv->second) == uw->second))
            rep.add("composition", pair_name(u, v) + " then " +
                                       pair_name(v, w) + " differs from " +
                                       pair_name(u, w));
        } catch (const std::exception& e) {
          rep.add("composition", pair_name(u, w) +
                                     std::string(": exception: ") + e.what());
        }
      }

  // Homs out of a Psi layer collapse the unit's cocover to the unit.
  for (std::size_t u = 0; u < n; ++u) {
    if (g.index.role(u) != LayerRole::Psi || !g.groups[u].discrete()) continue;
    auto cocover = g.groups[u].unit();
    cocover.coords.back() -= 1;
    for (std::size_t v = u + 1; v < n; ++v) {
      auto it = g.homs.find({u, v});
      if (it == g.homs.end() || !(it->second.source() == g.groups[u]))
        continue;
      ++rep.checks;
      if (!(it->second.apply(cocover) == g.groups[v].unit()))
        rep.add("psi-collapse",
                pair_name(u, v) + " does not collapse the unit's cocover");
    }
  }

  // Homs into a Theta layer land inside the designated subgroup; exactly:
  // the matrix rows beyond the subgroup prefix vanish.
  for (std::size_t v = 0; v < n; ++v) {
    if (g.index.role(v) != LayerRole::Theta) continue;
    auto dit = g.subgroups.find(v);
    if (dit == g.subgroups.end()) continue;
    int keep;
    try {
      dit->second.validate_for(g.groups[v]);
      keep = dit->second.prefix_length(g.groups[v]);
    } catch (const std::exception&) {
      continue;  // already reported above
    }
    for (std::size_t u = 0; u < v; ++u) {
      auto it = g.homs.find({u, v});
      if (it == g.homs.end() || !(it->second.target() == g.groups[v]))
        continue;
      ++rep.checks;
      const auto& m = it->second.matrix_form();
      bool inside = true;
      for (std::size_t row = static_cast<std::size_t>(keep);
           row < m.size() && inside; ++row)
        for (Int entry : m[row])
          if (entry != 0) {
            inside = false;
            break;
          }
      if (!inside)
        rep.add("theta-image", pair_name(u, v) +
                                   " sends a generator outside the "
                                   "designated subgroup");
    }
  }
  return rep;
}

Report validate_bunch(const BunchOfLayerAlgebras& a, const CheckConfig& cfg) {
  Report rep;
  rep.suite = "bunch-algebras";
  try {
    a.index.validate();
    ++rep.checks;
  } catch (const std::exception& e) {
    rep.add("index", e.what());
    return rep;
  }
  if (a.layers.size() != a.index.size()) {
    rep.add("shape", "layers do not parallel the index labels");
    return rep;
  }
  const auto n = a.index.size();
  auto layer_name = [&](std::size_t i) {
    return "layer '" + a.index.labels[i] + "'";
  };
  auto pair_name = [&](std::size_t u, std::size_t v) {
    return a.index.labels[u] + "->" + a.index.labels[v];
  };
  std::mt19937_64 rng(cfg.seed);

  for (std::size_t i = 0; i < n; ++i) {
    const Chain& layer = a.layers[i];
    auto role = a.index.role(i);
    try {
      ++rep.checks;
      Parity p = layer.parity();
      Parity want = role == LayerRole::Omega  ? Parity::Odd
                    : role == LayerRole::Psi ? Parity::EvenNonIdempotent
                                             : Parity::EvenIdempotent;
      if (p != want)
        rep.add("layer-parity", layer_name(i) + " is " + to_string(p) +
                                    " but its role is " + to_string(role));
    } catch (const std::exception& e) {
      rep.add("layer-parity", layer_name(i) + ": " + e.what());
    }
    try {
      switch (role) {
        case LayerRole::Omega:
          merge_prefixed(rep, check_cancellative_odd(layer, cfg),
                         layer_name(i));
          break;
        case LayerRole::Psi: {
          ++rep.checks;
          auto cc = layer.cover(layer.unit(), Direction::Down);
          if (!cc || !(*cc == layer.falsum()))
            rep.add("psi-discrete",
                    layer_name(i) +
                        ": falsum is not the unit's lower neighbor");
          for (int s = 0; s < cfg.samples; ++s) {
            auto x = layer.sample_one(cfg.window, rng);
            auto y = layer.sample_one(cfg.window, rng);
            auto z = layer.sample_one(cfg.window, rng);
            if (x == y) continue;
            ++rep.checks;
            if (layer.mul(x, z) == layer.mul(y, z)) {
              rep.add("psi-cancellative",
                      layer_name(i) + " at " + layer.format(x) + "," +
                          layer.format(y) + "," + layer.format(z));
              break;
            }
          }
          break;
        }
        case LayerRole::Theta: {
          for (int s = 0; s < cfg.samples; ++s) {
            auto x = layer.sample_one(cfg.window, rng);
            ++rep.checks;
            if (!(layer.mul(x, layer.complement(x)) == layer.falsum())) {
              rep.add("theta-product",
                      layer_name(i) +
                          ": mul(x, complement(x)) != falsum at " +
                          layer.format(x));
              break;
            }
          }
          break;
        }
      }
    } catch (const std::exception& e) {
      rep.add("layer-shape",
              layer_name(i) + std::string(": exception: ") + e.what());
    }
    merge_prefixed(rep, run_law_suite(layer, cfg), layer_name(i));
  }

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      ++rep.checks;
      auto it = a.homs.find({u, v});
      if (it == a.homs.end()) {
        rep.add("hom-missing", pair_name(u, v));
        continue;
      }
      const auto& ah = it->second;
      const Chain& lu = a.layers[u];
      const Chain& lv = a.layers[v];
      try {
        ++rep.checks;
        if (!(ah.apply(lu.unit()) == lv.unit()))
          rep.add("hom-unit", pair_name(u, v) + " moves the unit");
        if (a.index.role(u) != LayerRole::Omega) {
          ++rep.checks;
          if (!(ah.apply(lu.falsum()) == lv.unit()))
            rep.add("hom-collapse",
                    pair_name(u, v) +
                        " does not collapse the source falsum to the unit");
        }
        bool ok = true;
        for (int s = 0; s < cfg.samples && ok; ++s) {
          auto x = lu.sample_one(cfg.window, rng);
          auto y = lu.sample_one(cfg.window, rng);
          auto fx = ah.apply(x);
          auto fy = ah.apply(y);
          ++rep.checks;
          if (!(ah.apply(lu.mul(x, y)) == lv.mul(fx, fy))) {
            rep.add("hom-mul", pair_name(u, v) + " at " + lu.format(x) +
                                   ", " + lu.format(y));
            ok = false;
          }
          ++rep.checks;
          if (ok && !(ah.apply(lu.res(x, y)) == lv.res(fx, fy))) {
            rep.add("hom-res", pair_name(u, v) + " at " + lu.format(x) +
                                   ", " + lu.format(y));
            ok = false;
          }
          if (ok && lu.leq(x, y)) {
            ++rep.checks;
            if (!lv.leq(fx, fy)) {
              rep.add("hom-order", pair_name(u, v) + " at " + lu.format(x) +
                                       " <= " + lu.format(y));
              ok = false;
            }
          }
        }
      } catch (const std::exception& e) {
        rep.add("hom", pair_name(u, v) + std::string(": exception: ") +
                           e.what());
      }
    }
  for (const auto& [key, ah] : a.homs) {
    (void)ah;
    ++rep.checks;
    if (key.first >= key.second || key.second >= n)
      rep.add("hom-spurious", "hom keyed by a non-increasing pair");
  }

  // Composition coherence on sampled layer elements.
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (std::size_t w = v + 1; w < n; ++w) {
        auto uv = a.homs.find({u, v});
        auto vw = a.homs.find({v, w});
        auto uw = a.homs.find({u, w});
        if (uv == a.homs.end() || vw == a.homs.end() || uw == a.homs.end())
          continue;
        try {
          for (int s = 0; s < cfg.samples; ++s) {
            auto x = a.layers[u].sample_one(cfg.window, rng);
            ++rep.checks;
            if (!(vw->second.apply(uv->second.apply(x)) ==
                  uw->second.apply(x))) {
              rep.add("hom-composition",
                      pair_name(u, v) + " then " + pair_name(v, w) +
                          " differs from " + pair_name(u, w) + " at " +
                          a.layers[u].format(x));
              break;
            }
          }
        } catch (const std::exception& e) {
          rep.add("hom-composition",
                  pair_name(u, w) + std::string(": exception: ") + e.what());
        }
      }
  return rep;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

BunchOfLayerAlgebras decompose_finite(const Chain& c) {
  auto elems = c.carrier();  // ascending
  const auto t = c.unit();
  const auto f = c.falsum();

  // Exact local units by direct maximum search, independent of the
  // complement identity.
  std::map<ChainElement, ChainElement, RawElementLess> tau;
  for (const auto& x : elems) {
    std::optional<ChainElement> best;
    for (const auto& z : elems)  // ascending: the last hit is the maximum
      if (c.leq(c.mul(x, z), x)) best = z;
    if (!best)
      throw std::domain_error("decompose: no local unit at " + c.format(x));
    tau.emplace(x, *best);
  }
  if (!(tau.at(t) == t))
    throw std::domain_error("decompose: the unit is not its own local unit");
  if (!(tau.at(f) == t))
    throw std::domain_error(
        "decompose: the falsum lies outside the least layer");

  std::vector<ChainElement> units;
  for (const auto& x : elems) {
    const auto& u = tau.at(x);
    if (std::find(units.begin(), units.end(), u) == units.end())
      units.push_back(u);
  }
  std::sort(units.begin(), units.end(),
            [&](const ChainElement& x, const ChainElement& y) {
              return c.lt(x, y);
            });
  if (!(units.front() == t))
    throw std::domain_error("decompose: some local unit lies below the unit");

  BunchOfLayerAlgebras out;
  out.index.xi = xi_of(c.parity());
  std::vector<std::vector<ChainElement>> members(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (const auto& x : elems)
      if (tau.at(x) == units[i]) members[i].push_back(x);
    ChainElement layer_falsum;
    if (i == 0) {
      layer_falsum = f;
    } else {
      std::optional<ChainElement> below;
      for (const auto& m : members[i])  // ascending: keep the largest
        if (c.lt(m, units[i])) below = m;
      if (!below)
        throw std::domain_error(
            "decompose: a non-least layer has nothing below its unit");
      layer_falsum = *below;
    }
    out.index.labels.push_back(i == 0 ? std::string("t")
                                      : "u" + std::to_string(i));
    out.index.classes.push_back(
        i == 0 ? LayerClass::Unit
               : (c.mul(layer_falsum, layer_falsum) == layer_falsum
                      ? LayerClass::ClassI
                      : LayerClass::ClassJ));
    out.layers.push_back(
        restriction_chain(c, members[i], units[i], layer_falsum));
  }

  // The hom into a higher layer picks the smallest element above its
  // argument there.
  for (std::size_t u = 0; u < units.size(); ++u)
    for (std::size_t v = u + 1; v < units.size(); ++v) {
      std::map<ChainElement, ChainElement, RawElementLess> images;
      for (const auto& x : members[u]) {
        std::optional<ChainElement> img;
        for (const auto& z : members[v])
          if (c.leq(x, z)) {
            img = z;
            break;
          }
        if (!img)
          throw std::domain_error("decompose: no element of layer '" +
                                  out.index.labels[v] + "' above " +
                                  c.format(x));
        images.emplace(x, *img);
      }
      AlgebraHom ah;
      ah.apply = [images](const ChainElement& x) {
        auto it = images.find(x);
        if (it == images.end())
          throw std::invalid_argument(
              "foreign element for a decomposition hom");
        return it->second;
      };
      out.homs.emplace(std::make_pair(u, v), std::move(ah));
    }
  return out;
}

}  // namespace

BunchOfLayerAlgebras decompose_chain(const Chain& c, const CheckConfig& cfg) {
  switch (c.kind()) {
    case ChainKind::Derived: {
      const auto& m = static_cast<const DerivedModel&>(c.model());
      std::mt19937_64 rng(cfg.seed);
      for (int i = 0; i < cfg.samples; ++i) {
        auto x = c.sample_one(cfg.window, rng);
        auto u = static_cast<std::size_t>(x.layer);
        auto expect = m.embed(u, m.bunch().layers[u].unit());
        if (!(c.local_unit(x) == expect))
          throw std::domain_error(
              "decompose: stored layer tags disagree with the local units");
      }
      return m.bunch();
    }
    case ChainKind::InducedGroup:
    case ChainKind::Downshifted:
    case ChainKind::Split: {
      BunchOfLayerAlgebras out;
      out.index.labels = {"t"};
      out.index.classes = {LayerClass::Unit};
      out.index.xi = c.kind() == ChainKind::InducedGroup
                         ? Xi::Odd
                         : (c.kind() == ChainKind::Downshifted
                                ? Xi::EvenNonIdempotent
                                : Xi::EvenIdempotent);
      out.layers = {c};
      return out;
    }
    case ChainKind::FiniteTable:
    case ChainKind::FiniteSlice:
      return decompose_finite(c);
  }
  throw std::domain_error("decompose: unsupported chain kind");
}

// ---------------------------------------------------------------------------
// Equality and the end-to-end check

bool bunches_equal(const BunchOfLayerGroups& a, const BunchOfLayerGroups& b,
                   std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (!(a.index == b.index)) return fail("indices differ");
  if (a.groups.size() != b.groups.size()) return fail("layer counts differ");
  for (std::size_t i = 0; i < a.groups.size(); ++i)
    if (!(a.groups[i] == b.groups[i]))
      return fail("group ranks differ at layer '" + a.index.labels[i] + "'");
  if (a.subgroups.size() != b.subgroups.size())
    return fail("subgroup maps differ");
  for (const auto& [i, d] : a.subgroups) {
    auto it = b.subgroups.find(i);
    if (it == b.subgroups.end()) return fail("subgroup maps differ");
    if (!same_subgroup(a.groups[i], d, it->second))
      return fail("subgroups differ at layer '" + a.index.labels[i] + "'");
  }
  if (a.homs.size() != b.homs.size()) return fail("hom maps differ");
  for (const auto& [key, h] : a.homs) {
    auto it = b.homs.find(key);
    if (it == b.homs.end()) return fail("hom maps differ");
    if (!(h == it->second))
      return fail("homs differ at " + a.index.labels[key.first] + "->" +
                  a.index.labels[key.second]);
  }
  return true;
}

bool bunches_equal(const BunchOfLayerAlgebras& a,
                   const BunchOfLayerAlgebras& b, const CheckConfig& cfg,
                   std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (!(a.index == b.index)) return fail("indices differ");
  if (a.layers.size() != b.layers.size()) return fail("layer counts differ");
  for (std::size_t i = 0; i < a.layers.size(); ++i) {
    std::string sub;
    if (!chains_equivalent(a.layers[i], b.layers[i], cfg, &sub))
      return fail("layer '" + a.index.labels[i] + "': " + sub);
  }
  if (a.homs.size() != b.homs.size()) return fail("hom maps differ");
  std::mt19937_64 rng(cfg.seed);
  for (const auto& [key, ah] : a.homs) {
    auto it = b.homs.find(key);
    if (it == b.homs.end()) return fail("hom maps differ");
    for (int s = 0; s < cfg.samples; ++s) {
      auto x = a.layers[key.first].sample_one(cfg.window, rng);
      if (!(ah.apply(x) == it->second.apply(x)))
        return fail("homs differ at " + a.index.labels[key.first] + "->" +
                    a.index.labels[key.second] + " on " +
                    a.layers[key.first].format(x));
    }
  }
  return true;
}

bool chains_equivalent(const Chain& a, const Chain& b, const CheckConfig& cfg,
                       std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  auto fa = a.finite_size();
  auto fb = b.finite_size();
  if (fa.has_value() != fb.has_value())
    return fail("one chain is finite, the other is not");
  if (fa) {
    if (*fa != *fb) return fail("sizes differ");
    auto ta = to_finite_table(a);
    auto tb = to_finite_table(b);
    if (!(*ta == *tb)) return fail("canonical tables differ");
    return true;
  }
  if (a.kind() != b.kind()) return fail("construction kinds differ");
  switch (a.kind()) {
    case ChainKind::InducedGroup: {
      const auto& ma = static_cast<const InducedGroupModel&>(a.model());
      const auto& mb = static_cast<const InducedGroupModel&>(b.model());
      if (!(ma.group() == mb.group())) return fail("group ranks differ");
      break;
    }
    case ChainKind::Downshifted: {
      const auto& ma = static_cast<const DownshiftedModel&>(a.model());
      const auto& mb = static_cast<const DownshiftedModel&>(b.model());
      return chains_equivalent(ma.base(), mb.base(), cfg, why);
    }
    case ChainKind::Split: {
      const auto& ma = static_cast<const SplitModel&>(a.model());
      const auto& mb = static_cast<const SplitModel&>(b.model());
      if (!chains_equivalent(ma.base(), mb.base(), cfg, why)) return false;
      if (!same_subgroup(ma.group(), ma.subgroup(), mb.subgroup()))
        return fail("designated subgroups differ");
      break;
    }
    case ChainKind::Derived: {
      const auto& ma = static_cast<const DerivedModel&>(a.model());
      const auto& mb = static_cast<const DerivedModel&>(b.model());
      return bunches_equal(ma.bunch(), mb.bunch(), cfg, why);
    }
    default:
      return fail("unsupported chain kind for equivalence");
  }
  // Same parameters imply a shared element representation; confirm the
  // operations agree on samples.
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    auto x = a.sample_one(cfg.window, rng);
    auto y = a.sample_one(cfg.window, rng);
    if (!(a.mul(x, y) == b.mul(x, y)) ||
        !(a.complement(x) == b.complement(x)) || a.leq(x, y) != b.leq(x, y))
      return fail("operations disagree at " + a.format(x) + ", " +
                  a.format(y));
  }
  return true;
}

Report verify_representation(const BunchOfLayerGroups& g,
                             const CheckConfig& cfg) {
  Report rep;
  rep.suite = "representation";
  merge_prefixed(rep, validate_bunch(g, cfg), "groups");
  if (!rep.passed()) return rep;
  try {
    auto alg = groups_to_algebras(g);
    merge_prefixed(rep, validate_bunch(alg, cfg), "algebras");
    auto chain = derive_chain(alg);
    merge_prefixed(rep, run_law_suite(chain, cfg), "derived");

    auto back = decompose_chain(chain, cfg);
    auto back_groups = algebras_to_groups(back);
    std::string why;
    ++rep.checks;
    if (!bunches_equal(g, back_groups, &why))
      rep.add("round-trip", "groups: " + why);
    ++rep.checks;
    if (!bunches_equal(alg, back, cfg, &why))
      rep.add("round-trip", "algebras: " + why);

    // Finite chains: decompose the bare operation table, with all the
    // construction tags stripped, and re-derive it.
    if (auto table = to_finite_table(chain)) {
      ++rep.checks;
      auto fresh = decompose_chain(table_chain(*table), cfg);
      auto rederived = to_finite_table(derive_chain(fresh));
      if (!(rederived && *rederived == *table))
        rep.add("finite-rederive", "canonical tables differ");
    }
  } catch (const std::exception& e) {
    rep.add("representation", std::string("exception: ") + e.what());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Stock bunches

BunchOfLayerGroups single_layer_bunch(const OrderedGroup& g, Xi xi,
                                      SubgroupDesc sub) {
  BunchOfLayerGroups b;
  b.index.labels = {"t"};
  b.index.classes = {LayerClass::Unit};
  b.index.xi = xi;
  b.groups = {g};
  if (xi == Xi::EvenIdempotent) {
    sub.validate_for(g);
    b.subgroups.emplace(0, sub);
  }
  return b;
}

BunchOfLayerGroups sugihara_bunch(std::size_t layer_count, bool even) {
  if (layer_count == 0)
    throw std::invalid_argument("a bunch needs at least one layer");
  BunchOfLayerGroups b;
  b.index.xi = even ? Xi::EvenIdempotent : Xi::Odd;
  OrderedGroup trivial_group(0);
  for (std::size_t i = 0; i < layer_count; ++i) {
    b.index.labels.push_back(i == 0 ? std::string("t")
                                    : "u" + std::to_string(i));
    b.index.classes.push_back(i == 0 ? LayerClass::Unit : LayerClass::ClassI);
    b.groups.push_back(trivial_group);
  }
  for (std::size_t i = 0; i < layer_count; ++i)
    if (b.index.role(i) == LayerRole::Theta)
      b.subgroups.emplace(i, SubgroupDesc::full());
  for (std::size_t u = 0; u < layer_count; ++u)
    for (std::size_t v = u + 1; v < layer_count; ++v)
      b.homs.emplace(std::make_pair(u, v),
                     Homomorphism::trivial(trivial_group, trivial_group));
  return b;
}

}  // namespace flec
